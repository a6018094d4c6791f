//! Jumping numbers and multiplier-ideal divisors, computed sequentially.
//!
//! A multiplier ideal is represented by the antinef closure of the effective
//! part of `⌊λF - K⌋`. Given that closure `D = Σ d_i E_i`, the next jumping
//! number is
//!
//! ```text
//!     min over e_i > 0 of  (k_i + 1 + d_i) / e_i      (k_i = 0 on affine components)
//! ```
//!
//! and the components achieving the minimum are exactly the support of the
//! minimal jumping divisor for that number. Iterating closure and minimum
//! walks the whole chain of multiplier ideals in any range.
//!
//! Every "just below λ" quantity is computed with [`Rational::floor_minus`];
//! no numeric epsilon exists anywhere.

use serde::{Deserialize, Serialize};

use crate::divisor::Divisor;
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::resolution::ResolutionData;
use crate::unloading::antinef_closure;

/// One step of the chain: a jumping number, its multiplier-ideal divisor,
/// and the minimal jumping divisor (whose support is the achieving set of
/// the minimum that produced `lambda`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JumpRecord {
    pub lambda: Rational,
    pub d_lambda: Divisor,
    pub g_lambda: Divisor,
}

impl JumpRecord {
    /// Indices where the minimum defining `lambda` is achieved.
    pub fn achieving_set(&self) -> Vec<usize> {
        self.g_lambda.support()
    }
}

/// `⌊λF - K⌋` over all components; may have negative values.
pub(crate) fn floor_vector(data: &ResolutionData, kpi: &Divisor, lambda: &Rational) -> Divisor {
    (&data.f().scale(lambda) - kpi).round_down()
}

/// The divisor with value `⌊λe_i - k_i - ε⌋` at each component.
pub(crate) fn floor_minus_vector(data: &ResolutionData, kpi: &Divisor, lambda: &Rational) -> Divisor {
    let diff = &data.f().scale(lambda) - kpi;
    diff.map(|v| Rational::from_int(v.floor_minus()))
}

pub(crate) fn multiplier_with(data: &ResolutionData, kpi: &Divisor, lambda: &Rational) -> Result<Divisor> {
    antinef_closure(data, &floor_vector(data, kpi, lambda).effective_part())
}

pub(crate) fn predecessor_with(data: &ResolutionData, kpi: &Divisor, lambda: &Rational) -> Result<Divisor> {
    antinef_closure(data, &floor_minus_vector(data, kpi, lambda).effective_part())
}

pub(crate) fn next_with(
    data: &ResolutionData,
    kpi: &Divisor,
    d_prev: &Divisor,
) -> Result<(Rational, Vec<usize>)> {
    let mut best: Option<Rational> = None;
    let mut achieved = Vec::new();
    for i in 0..data.total_count() {
        let e = &data.f()[i];
        if !e.is_positive() {
            continue;
        }
        let value = (&kpi[i] + &Rational::one() + &d_prev[i]) / e.clone();
        match &best {
            Some(b) if &value > b => {}
            Some(b) if &value == b => achieved.push(i),
            _ => {
                best = Some(value);
                achieved = vec![i];
            }
        }
    }
    let lambda = best.ok_or(Error::ZeroIdeal)?;
    Ok((lambda, achieved))
}

/// The antinef divisor of the multiplier ideal with exponent `lambda >= 0`.
pub fn multiplier_divisor(data: &ResolutionData, lambda: &Rational) -> Result<Divisor> {
    if lambda.is_negative() {
        return Err(Error::BadExponent(lambda.clone(), "expected lambda >= 0"));
    }
    let kpi = data.relative_canonical()?;
    multiplier_with(data, &kpi, lambda)
}

/// The multiplier-ideal divisor at any exponent strictly between the
/// previous jumping number and `lambda`.
pub fn predecessor_divisor(data: &ResolutionData, lambda: &Rational) -> Result<Divisor> {
    if !lambda.is_positive() {
        return Err(Error::BadExponent(lambda.clone(), "expected lambda > 0"));
    }
    let kpi = data.relative_canonical()?;
    predecessor_with(data, &kpi, lambda)
}

/// The jumping number immediately after the one whose multiplier-ideal
/// divisor is `d_prev`, with the set of components achieving the minimum.
pub fn next_jumping_number(data: &ResolutionData, d_prev: &Divisor) -> Result<(Rational, Vec<usize>)> {
    let kpi = data.relative_canonical()?;
    next_with(data, &kpi, d_prev)
}

/// The log-canonical threshold: the first jumping number, seeded with the
/// closure of the effective part of `⌊-K⌋` (which is 0 on smooth and
/// log-terminal inputs).
pub fn log_canonical_threshold(data: &ResolutionData) -> Result<Rational> {
    let kpi = data.relative_canonical()?;
    let base = multiplier_with(data, &kpi, &Rational::zero())?;
    Ok(next_with(data, &kpi, &base)?.0)
}

/// All jumping numbers in the half-open interval `(from, to]`, each with
/// its multiplier-ideal divisor and minimal jumping divisor.
pub fn jumping_chain(data: &ResolutionData, from: &Rational, to: &Rational) -> Result<Vec<JumpRecord>> {
    if from.is_negative() {
        return Err(Error::BadExponent(from.clone(), "expected range start >= 0"));
    }
    let mut records = Vec::new();
    if from >= to {
        return Ok(records);
    }
    let kpi = data.relative_canonical()?;
    let mut current = multiplier_with(data, &kpi, from)?;
    loop {
        let (lambda, achieved) = next_with(data, &kpi, &current)?;
        if &lambda > to {
            return Ok(records);
        }
        let d_lambda = multiplier_with(data, &kpi, &lambda)?;
        debug_assert!(current.lt(&d_lambda), "multiplier divisors must strictly increase");
        let g_lambda = Divisor::from_support(data.total_count(), &achieved);
        records.push(JumpRecord { lambda: lambda.clone(), d_lambda: d_lambda.clone(), g_lambda });
        current = d_lambda;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::*;

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn multiplier_divisor_examples() {
        let data = two_cusps();
        assert_eq!(
            multiplier_divisor(&data, &rat(9, 10)).unwrap(),
            Divisor::from_ints(&[2, 3, 5, 3, 5])
        );
        assert_eq!(multiplier_divisor(&data, &Rational::zero()).unwrap(), Divisor::zeros(5));

        let curve = two_cusps_curve();
        assert_eq!(
            multiplier_divisor(&curve, &rat(3, 2)).unwrap(),
            Divisor::from_ints(&[5, 6, 12, 6, 12, 1, 1])
        );
        assert!(multiplier_divisor(&data, &rat(-1, 2)).is_err());
    }

    #[test]
    fn predecessor_divisor_examples() {
        let data = two_cusps();
        assert_eq!(
            predecessor_divisor(&data, &rat(7, 10)).unwrap(),
            Divisor::from_ints(&[1, 1, 2, 1, 2])
        );
        let chain = dicritical_chain();
        assert_eq!(
            predecessor_divisor(&chain, &rat(3, 4)).unwrap(),
            Divisor::from_ints(&[4, 6, 7, 14, 5, 10])
        );
        // at exponents that are not jumping numbers the predecessor and the
        // multiplier divisor agree
        for lambda in [rat(2, 5), rat(4, 5)] {
            assert_eq!(
                predecessor_divisor(&data, &lambda).unwrap(),
                multiplier_divisor(&data, &lambda).unwrap()
            );
        }
    }

    #[test]
    fn next_jumping_number_examples() {
        let data = two_cusps();
        let (l, s) = next_jumping_number(&data, &Divisor::from_ints(&[2, 2, 4, 2, 4])).unwrap();
        assert_eq!(l, rat(9, 10));
        assert_eq!(s, vec![2, 4]);

        let curve = two_cusps_curve();
        let (l, _) =
            next_jumping_number(&curve, &Divisor::from_ints(&[4, 5, 10, 5, 10, 1, 1])).unwrap();
        assert_eq!(l, rat(3, 2));

        let chain = dicritical_chain();
        let (l, s) = next_jumping_number(&chain, &Divisor::from_ints(&[4, 6, 7, 14, 5, 10])).unwrap();
        assert_eq!(l, rat(3, 4));
        assert_eq!(s, vec![0, 1, 3, 5]);
    }

    #[test]
    fn log_canonical_thresholds() {
        assert_eq!(log_canonical_threshold(&two_cusps()).unwrap(), rat(1, 2));
        assert_eq!(log_canonical_threshold(&two_cusps_curve()).unwrap(), rat(1, 2));
        assert_eq!(log_canonical_threshold(&star_singularity()).unwrap(), rat(2, 3));
    }

    #[test]
    fn star_base_divisor_and_first_step() {
        // the closure of the effective part of ⌊-K⌋ is nonzero here: the
        // singularity is not log-terminal
        let data = star_singularity();
        let base = multiplier_divisor(&data, &Rational::zero()).unwrap();
        assert_eq!(base, Divisor::from_ints(&[2, 1, 1, 1, 1, 1]));
        let first = multiplier_divisor(&data, &rat(2, 3)).unwrap();
        assert_eq!(first, Divisor::from_ints(&[3, 1, 1, 1, 1, 1]));
    }

    #[test]
    fn chain_on_two_cusps() {
        let data = two_cusps();
        let records = jumping_chain(&data, &Rational::zero(), &rat(11, 10)).unwrap();
        let lambdas: Vec<Rational> = records.iter().map(|r| r.lambda.clone()).collect();
        assert_eq!(lambdas, vec![rat(1, 2), rat(7, 10), rat(9, 10), rat(1, 1), rat(11, 10)]);
        let divisors: Vec<Divisor> = records.iter().map(|r| r.d_lambda.clone()).collect();
        assert_eq!(
            divisors,
            vec![
                Divisor::from_ints(&[1, 1, 2, 1, 2]),
                Divisor::from_ints(&[2, 2, 4, 2, 4]),
                Divisor::from_ints(&[2, 3, 5, 3, 5]),
                Divisor::from_ints(&[3, 3, 6, 3, 6]),
                Divisor::from_ints(&[3, 4, 7, 4, 7]),
            ]
        );
    }

    #[test]
    fn chain_on_curve_variant() {
        let curve = two_cusps_curve();
        let records = jumping_chain(&curve, &Rational::zero(), &rat(3, 2)).unwrap();
        let lambdas: Vec<Rational> = records.iter().map(|r| r.lambda.clone()).collect();
        assert_eq!(lambdas, vec![rat(1, 2), rat(7, 10), rat(9, 10), rat(1, 1), rat(3, 2)]);
        assert_eq!(records[3].d_lambda, Divisor::from_ints(&[4, 5, 10, 5, 10, 1, 1]));
        assert_eq!(records[4].d_lambda, Divisor::from_ints(&[5, 6, 12, 6, 12, 1, 1]));
    }

    #[test]
    fn empty_and_degenerate_ranges() {
        let data = two_cusps();
        assert!(jumping_chain(&data, &rat(1, 2), &rat(1, 2)).unwrap().is_empty());
        assert!(jumping_chain(&data, &rat(3, 2), &rat(1, 2)).unwrap().is_empty());
        assert!(jumping_chain(&data, &rat(-1, 2), &rat(1, 2)).is_err());
    }

    #[test]
    fn chain_seeds_mid_range() {
        // seeding strictly between two jumping numbers behaves like seeding
        // at the earlier one
        let data = two_cusps();
        let records = jumping_chain(&data, &rat(3, 4), &rat(11, 10)).unwrap();
        let lambdas: Vec<Rational> = records.iter().map(|r| r.lambda.clone()).collect();
        assert_eq!(lambdas, vec![rat(9, 10), rat(1, 1), rat(11, 10)]);
    }

    #[test]
    fn achieving_sets_are_minimal_divisor_support() {
        let chain = dicritical_chain();
        let records = jumping_chain(&chain, &rat(5, 7), &rat(3, 4)).unwrap();
        assert_eq!(records.len(), 1);
        assert_eq!(records[0].lambda, rat(3, 4));
        assert_eq!(records[0].d_lambda, Divisor::from_ints(&[5, 7, 8, 15, 6, 11]));
        assert_eq!(records[0].achieving_set(), vec![0, 1, 3, 5]);
    }
}
