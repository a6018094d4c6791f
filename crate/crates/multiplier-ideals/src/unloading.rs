//! Antinef closures by unloading, and divisor-level ideal comparison.
//!
//! Unloading rounds a divisor up and then repeatedly adds multiples of the
//! exceptional components that have negative excess, all of them in one
//! step, until every excess is nonnegative. The fixed point is the unique
//! minimal integral antinef divisor dominating the input, and it encodes
//! the same complete ideal.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::divisor::{Divisor, PointwiseOrder};
use crate::error::{Error, Result};
use crate::resolution::ResolutionData;

/// Hard cap on unloading iterations; unreachable on data that passes
/// validation, guards corrupt input.
pub const MAX_UNLOADING_STEPS: usize = 1_000_000;

/// One state of the unloading iteration: the current divisor and the set of
/// exceptional components with negative excess about to be unloaded. The
/// final state carries an empty `theta`.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct UnloadStep {
    pub divisor: Divisor,
    pub theta: Vec<usize>,
}

/// How the complete ideals of two divisors relate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum IdealOrder {
    Equal,
    StrictlyContains,
    StrictlyContained,
    Incomparable,
}

/// True iff the integral effective divisor meets every exceptional
/// component nonpositively. Non-effective integral divisors are not
/// antinef by definition.
pub fn is_antinef(data: &ResolutionData, d: &Divisor) -> Result<bool> {
    if !d.is_integral() {
        return Err(Error::NonIntegral(d.clone()));
    }
    if !d.is_effective() {
        return Ok(false);
    }
    Ok((0..data.exceptional_count()).all(|i| !data.intersect_row(i, d).is_positive()))
}

/// The antinef closure of an effective divisor (rational values allowed).
pub fn antinef_closure(data: &ResolutionData, d: &Divisor) -> Result<Divisor> {
    closure_impl(data, d, None)
}

/// Antinef closure together with the full unloading log.
pub fn antinef_closure_traced(data: &ResolutionData, d: &Divisor) -> Result<(Divisor, Vec<UnloadStep>)> {
    let mut steps = Vec::new();
    let closed = closure_impl(data, d, Some(&mut steps))?;
    Ok((closed, steps))
}

fn closure_impl(
    data: &ResolutionData,
    d: &Divisor,
    trace: Option<&mut Vec<UnloadStep>>,
) -> Result<Divisor> {
    if !d.is_effective() {
        return Err(Error::NonEffective(d.clone()));
    }
    assert_eq!(d.len(), data.total_count(), "divisor length mismatch");
    let mut values = d.round_up().to_bigints().expect("round-up is integral");
    run_unloading(data, &mut values, d.len(), trace)?;
    Ok(Divisor::from_bigints(values))
}

/// Closure against the exceptional block only; used for the fundamental
/// cycle, where the affine part of `F` is ignored.
pub(crate) fn closure_exceptional(data: &ResolutionData, mut seed: Vec<BigInt>) -> Result<Vec<BigInt>> {
    assert_eq!(seed.len(), data.exceptional_count());
    run_unloading(data, &mut seed, data.exceptional_count(), None)?;
    Ok(seed)
}

fn run_unloading(
    data: &ResolutionData,
    values: &mut [BigInt],
    cols: usize,
    mut trace: Option<&mut Vec<UnloadStep>>,
) -> Result<()> {
    let r = data.exceptional_count();
    let matrix = data.matrix();

    // excesses of the current divisor at every exceptional component
    let mut excess: Vec<BigInt> = (0..r)
        .map(|i| {
            let mut acc = BigInt::from(0);
            for j in 0..cols {
                let m = matrix[i][j];
                if m != 0 {
                    acc += m * &values[j];
                }
            }
            -acc
        })
        .collect();

    let neighbors: Vec<Vec<usize>> =
        (0..r).map(|i| data.exceptional_neighbors(i)).collect();

    let mut steps = 0usize;
    loop {
        let theta: Vec<usize> = (0..r).filter(|&i| excess[i].is_negative()).collect();
        if let Some(log) = trace.as_deref_mut() {
            log.push(UnloadStep {
                divisor: Divisor::from_bigints(values.to_vec()),
                theta: theta.clone(),
            });
        }
        if theta.is_empty() {
            return Ok(());
        }
        steps += 1;
        if steps > MAX_UNLOADING_STEPS {
            return Err(Error::UnloadingDiverged(MAX_UNLOADING_STEPS));
        }
        for &i in &theta {
            let self_int = BigInt::from(matrix[i][i]);
            // least multiple restoring a nonnegative excess at E_i
            let n = excess[i].div_ceil(&self_int);
            debug_assert!(n.is_positive());
            values[i] += &n;
            excess[i] -= &n * &self_int;
            for &j in &neighbors[i] {
                excess[j] -= &n * matrix[j][i];
            }
        }
    }
}

/// Compares the complete ideals attached to two effective divisors through
/// their antinef closures: equal closures mean equal ideals, and a
/// componentwise smaller closure means a strictly larger ideal.
pub fn compare_ideals(data: &ResolutionData, d1: &Divisor, d2: &Divisor) -> Result<IdealOrder> {
    let c1 = antinef_closure(data, d1)?;
    let c2 = antinef_closure(data, d2)?;
    Ok(match c1.pointwise_cmp(&c2) {
        PointwiseOrder::Equal => IdealOrder::Equal,
        PointwiseOrder::Less => IdealOrder::StrictlyContains,
        PointwiseOrder::Greater => IdealOrder::StrictlyContained,
        PointwiseOrder::Incomparable => IdealOrder::Incomparable,
    })
}

/// Brute-force closure oracle: the componentwise meet of every integral
/// antinef divisor in the box `[⌈D⌉, hi]`. With `hi = closure(D) + 1` the
/// meet must equal the closure, since the closure is itself antinef and
/// bounds every antinef divisor above `D` from below.
#[doc(hidden)]
pub fn box_meet_oracle(data: &ResolutionData, d: &Divisor, hi: &Divisor) -> Option<Divisor> {
    let lo = d.round_up();
    let s = data.total_count();
    let spans: Vec<(BigInt, BigInt)> = (0..s)
        .map(|j| (lo[j].numer().clone(), hi[j].numer().clone()))
        .collect();
    let mut cursor: Vec<BigInt> = spans.iter().map(|(l, _)| l.clone()).collect();
    let mut meet: Option<Vec<BigInt>> = None;
    loop {
        let candidate = Divisor::from_bigints(cursor.clone());
        if is_antinef(data, &candidate).expect("integral by construction") {
            meet = Some(match meet {
                None => cursor.clone(),
                Some(prev) => prev
                    .into_iter()
                    .zip(&cursor)
                    .map(|(a, b)| if a <= *b { a } else { b.clone() })
                    .collect(),
            });
        }
        // odometer increment over the box
        let mut pos = 0;
        loop {
            if pos == s {
                return meet.map(Divisor::from_bigints);
            }
            cursor[pos] += 1;
            if cursor[pos] <= spans[pos].1 {
                break;
            }
            cursor[pos] = spans[pos].0.clone();
            pos += 1;
        }
    }
}
