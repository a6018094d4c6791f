//! Hardcoded resolution data used across the unit tests. The same data
//! ships as JSON under `fixtures/` for the CLI and integration tests.

use crate::divisor::Divisor;
use crate::resolution::ResolutionData;

pub(crate) fn two_cusps_matrix() -> Vec<Vec<i64>> {
    vec![
        vec![-5, 0, 1, 0, 1],
        vec![0, -2, 1, 0, 0],
        vec![1, 1, -1, 0, 0],
        vec![0, 0, 0, -2, 1],
        vec![1, 0, 0, 1, -1],
    ]
}

/// Minimal log-resolution of the ideal (x^2 y^2, x^5, y^5, x y^4, x^4 y) at
/// a smooth point; a generic element is a pair of transverse cusps.
pub(crate) fn two_cusps() -> ResolutionData {
    ResolutionData::new(
        "two-cusps",
        5,
        two_cusps_matrix(),
        Divisor::from_ints(&[4, 5, 10, 5, 10]),
        None,
    )
    .unwrap()
}

/// Total transform of the principal ideal of (x^2 - y^3)(y^2 - x^3): same
/// exceptional locus as `two_cusps` plus the two strict-transform branches
/// as affine components.
pub(crate) fn two_cusps_curve() -> ResolutionData {
    ResolutionData::new(
        "two-cusps-curve",
        5,
        vec![
            vec![-5, 0, 1, 0, 1, 0, 0],
            vec![0, -2, 1, 0, 0, 0, 0],
            vec![1, 1, -1, 0, 0, 1, 0],
            vec![0, 0, 0, -2, 1, 0, 0],
            vec![1, 0, 0, 1, -1, 0, 1],
        ],
        Divisor::from_ints(&[4, 5, 10, 5, 10, 1, 1]),
        None,
    )
    .unwrap()
}

/// Star-shaped minimal resolution of a rational singularity that is not
/// log-canonical; the ideal is the maximal ideal, so F is the fundamental
/// cycle.
#[allow(clippy::needless_range_loop)]
pub(crate) fn star_singularity() -> ResolutionData {
    let mut matrix = vec![vec![0i64; 6]; 6];
    matrix[0][0] = -4;
    for i in 1..6 {
        matrix[i][i] = -5;
        matrix[0][i] = 1;
        matrix[i][0] = 1;
    }
    ResolutionData::new("star-singularity", 6, matrix, Divisor::from_ints(&[2, 1, 1, 1, 1, 1]), None)
        .unwrap()
}

/// A chain E3-E4-E2-E1-E6-E5 on a smooth point with two dicritical
/// components E4 and E6 of excess 2 each.
pub(crate) fn dicritical_chain() -> ResolutionData {
    ResolutionData::new(
        "dicritical-chain",
        6,
        vec![
            vec![-4, 1, 0, 0, 0, 1],
            vec![1, -3, 0, 1, 0, 0],
            vec![0, 0, -2, 1, 0, 0],
            vec![0, 1, 1, -1, 0, 0],
            vec![0, 0, 0, 0, -2, 1],
            vec![1, 0, 0, 0, 1, -1],
        ],
        Divisor::from_ints(&[8, 12, 14, 28, 10, 20]),
        None,
    )
    .unwrap()
}

/// One blow-up of a smooth point with the maximal ideal.
pub(crate) fn single_blowup() -> ResolutionData {
    ResolutionData::new("single-blowup", 1, vec![vec![-1]], Divisor::from_ints(&[1]), None).unwrap()
}

/// Two (-2)-curves meeting in a point (an A2 singularity), F the
/// fundamental cycle.
pub(crate) fn two_minus_two_chain() -> ResolutionData {
    ResolutionData::new(
        "a2-chain",
        2,
        vec![vec![-2, 1], vec![1, -2]],
        Divisor::from_ints(&[1, 1]),
        None,
    )
    .unwrap()
}
