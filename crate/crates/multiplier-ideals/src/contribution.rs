//! Divisors between consecutive multiplier ideals.
//!
//! A reduced divisor `G` for which `λ` is a candidate twists the multiplier
//! ideal into a complete ideal nested between the two multiplier ideals at
//! `λ - ε` and `λ`; at divisor level that nested ideal is the antinef
//! closure of `⌊λF - K⌋ - G`. The module classifies these twists:
//!
//! - contributing divisors (the nested ideal is strictly larger),
//! - critical divisors (no proper subdivisor contributes),
//! - jumping divisors (the nested ideal equals the preceding multiplier
//!   ideal), with the minimal one `G_λ` and the maximal one `H_λ`,
//! - the jumping number, support and contributing divisor attached to any
//!   antinef divisor, and the minimal contributing divisor with the same
//!   nested ideal.
//!
//! It also enumerates critical divisors geometrically (chains whose ends
//! are rupture or dicritical) and derives the full list of jumping numbers
//! from them, the candidate-filtering alternative to the sequential chain.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use crate::divisor::Divisor;
use crate::error::{Error, Result};
use crate::jumping::{floor_vector, multiplier_with, next_with, predecessor_with};
use crate::rational::Rational;
use crate::resolution::ResolutionData;
use crate::unloading::{antinef_closure, is_antinef};

/// Everything `analyze` knows about a pair `(λ, G)`.
#[derive(Clone, Debug, Serialize)]
pub struct ContributionReport {
    pub lambda: Rational,
    pub divisor: Divisor,
    pub is_candidate: bool,
    pub is_jumping_number: bool,
    pub contributes: bool,
    pub is_critical: bool,
    pub is_jumping_divisor: bool,
    pub nested_divisor: Option<Divisor>,
    pub minimal_contributing: Option<Divisor>,
}

/// The jumping number, achieving support and contributing divisor attached
/// to an antinef divisor `D`: the minimum of `(k_i + 1 + d_i) / e_i` over
/// the support of `F`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AssociatedJump {
    pub lambda: Rational,
    pub support: Vec<usize>,
    pub divisor: Divisor,
}

fn require_reduced(data: &ResolutionData, g: &Divisor) -> Result<()> {
    assert_eq!(g.len(), data.total_count(), "divisor length mismatch");
    if !g.is_reduced() {
        return Err(Error::NotReduced(g.clone()));
    }
    Ok(())
}

fn candidate_with(data: &ResolutionData, kpi: &Divisor, lambda: &Rational, g: &Divisor) -> bool {
    g.support()
        .into_iter()
        .all(|i| (lambda * &data.f()[i] - &kpi[i]).is_positive_integer())
}

/// True iff `λ e_i - k_i` is a positive integer on every component of the
/// reduced divisor `g` (vacuously true for `g = 0`).
pub fn is_candidate(data: &ResolutionData, lambda: &Rational, g: &Divisor) -> Result<bool> {
    require_reduced(data, g)?;
    let kpi = data.relative_canonical()?;
    Ok(candidate_with(data, &kpi, lambda, g))
}

/// The maximal jumping divisor: the reduced divisor on all components of
/// `F` where `λ e_i - k_i` is a positive integer. Periodic in `λ ↦ λ + 1`.
pub fn maximal_jumping_divisor(data: &ResolutionData, lambda: &Rational) -> Result<Divisor> {
    if !lambda.is_positive() {
        return Err(Error::BadExponent(lambda.clone(), "expected lambda > 0"));
    }
    let kpi = data.relative_canonical()?;
    let support: Vec<usize> = (0..data.total_count())
        .filter(|&i| {
            data.f()[i].is_positive() && (lambda * &data.f()[i] - &kpi[i]).is_positive_integer()
        })
        .collect();
    Ok(Divisor::from_support(data.total_count(), &support))
}

/// The minimal jumping divisor `G_λ`: supported exactly where the minimum
/// producing `λ` from the preceding multiplier ideal is achieved. Errors
/// when `λ` is not a jumping number.
pub fn minimal_jumping_divisor(data: &ResolutionData, lambda: &Rational) -> Result<Divisor> {
    if !lambda.is_positive() {
        return Err(Error::BadExponent(lambda.clone(), "expected lambda > 0"));
    }
    let kpi = data.relative_canonical()?;
    let pred = predecessor_with(data, &kpi, lambda)?;
    let mult = multiplier_with(data, &kpi, lambda)?;
    if pred == mult {
        return Err(Error::NotAJumpingNumber(lambda.clone()));
    }
    let (next, achieved) = next_with(data, &kpi, &pred)?;
    assert_eq!(&next, lambda, "the jump after the predecessor divisor must be lambda itself");
    Ok(Divisor::from_support(data.total_count(), &achieved))
}

/// The antinef divisor of the nested ideal `⌈K - λF⌉ + G`, i.e. the closure
/// of `⌊λF - K⌋ - G`. Requires `λ` to be a candidate for `G`.
pub fn contribution_ideal(data: &ResolutionData, lambda: &Rational, g: &Divisor) -> Result<Divisor> {
    require_reduced(data, g)?;
    let kpi = data.relative_canonical()?;
    if !candidate_with(data, &kpi, lambda, g) {
        return Err(Error::NotACandidate { lambda: lambda.clone(), divisor: g.clone() });
    }
    contribution_with(data, &kpi, lambda, g)
}

fn contribution_with(
    data: &ResolutionData,
    kpi: &Divisor,
    lambda: &Rational,
    g: &Divisor,
) -> Result<Divisor> {
    let twisted = &floor_vector(data, kpi, lambda) - g;
    antinef_closure(data, &twisted.effective_part())
}

/// True iff the nested ideal of `(λ, G)` is strictly larger than the
/// multiplier ideal at `λ`.
pub fn contributes(data: &ResolutionData, lambda: &Rational, g: &Divisor) -> Result<bool> {
    require_reduced(data, g)?;
    let kpi = data.relative_canonical()?;
    if !candidate_with(data, &kpi, lambda, g) {
        return Err(Error::NotACandidate { lambda: lambda.clone(), divisor: g.clone() });
    }
    let mult = multiplier_with(data, &kpi, lambda)?;
    contributes_with(data, &kpi, lambda, g, &mult)
}

fn contributes_with(
    data: &ResolutionData,
    kpi: &Divisor,
    lambda: &Rational,
    g: &Divisor,
    mult: &Divisor,
) -> Result<bool> {
    Ok(&contribution_with(data, kpi, lambda, g)? != mult)
}

/// True iff `G` contributes and no proper subdivisor does.
///
/// Contribution is monotone in `G` (dropping a component can only grow the
/// closure), so a contributing proper subdivisor forces a contributing
/// maximal proper subdivisor; checking the `|G|` maximal ones decides the
/// full definitional condition.
pub fn is_critical(data: &ResolutionData, lambda: &Rational, g: &Divisor) -> Result<bool> {
    require_reduced(data, g)?;
    let kpi = data.relative_canonical()?;
    if !candidate_with(data, &kpi, lambda, g) {
        return Err(Error::NotACandidate { lambda: lambda.clone(), divisor: g.clone() });
    }
    let mult = multiplier_with(data, &kpi, lambda)?;
    is_critical_with(data, &kpi, lambda, g, &mult)
}

fn is_critical_with(
    data: &ResolutionData,
    kpi: &Divisor,
    lambda: &Rational,
    g: &Divisor,
    mult: &Divisor,
) -> Result<bool> {
    if !contributes_with(data, kpi, lambda, g, mult)? {
        return Ok(false);
    }
    for i in g.support() {
        let smaller = g.with_value(i, Rational::zero());
        if contributes_with(data, kpi, lambda, &smaller, mult)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Exhaustive form of the criticality test, enumerating every proper
/// subdivisor. Kept as an oracle for the maximal-subdivisor shortcut.
#[cfg(test)]
pub(crate) fn is_critical_exhaustive(
    data: &ResolutionData,
    lambda: &Rational,
    g: &Divisor,
) -> Result<bool> {
    let kpi = data.relative_canonical()?;
    let mult = multiplier_with(data, &kpi, lambda)?;
    if !contributes_with(data, &kpi, lambda, g, &mult)? {
        return Ok(false);
    }
    let support = g.support();
    let n = support.len();
    for mask in 0..(1u64 << n) {
        if mask == (1 << n) - 1 {
            continue; // the divisor itself
        }
        let subset: Vec<usize> =
            support.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, &i)| i).collect();
        let sub = Divisor::from_support(g.len(), &subset);
        if contributes_with(data, &kpi, lambda, &sub, &mult)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Numeric criticality test for a connected chain with exceptional support:
/// a prime chain is critical iff `(⌈K - λF⌉ + G) · G >= 0`, a reducible one
/// iff the product vanishes against every component of `G`.
fn critical_numeric(data: &ResolutionData, kpi: &Divisor, lambda: &Rational, chain: &[usize]) -> bool {
    let mut twisted = floor_vector(data, kpi, lambda).map(|v| -v);
    for &i in chain {
        let bumped = &twisted[i] + &Rational::one();
        twisted = twisted.with_value(i, bumped);
    }
    if let [single] = chain {
        !data.intersect_row(*single, &twisted).is_negative()
    } else {
        chain.iter().all(|&i| data.intersect_row(i, &twisted).is_zero())
    }
}

/// Tree chains whose two (possibly equal) ends are rupture or dicritical
/// components; the only possible shapes of critical divisors.
fn candidate_chains(data: &ResolutionData) -> Result<Vec<Vec<usize>>> {
    let classes = data.classify();
    let vertices: Vec<usize> =
        classes.iter().filter(|c| c.is_rupture || c.is_dicritical).map(|c| c.index).collect();
    let mut chains = Vec::new();
    for (a, &u) in vertices.iter().enumerate() {
        for &v in &vertices[a..] {
            let mut path = data.path_between(u, v)?;
            path.sort_unstable();
            chains.push(path);
        }
    }
    chains.sort();
    chains.dedup();
    Ok(chains)
}

/// All critical divisors for `λ`, each a chain between rupture or
/// dicritical vertices whose components all pass the candidate test,
/// validated by the definitional criticality check.
pub fn enumerate_critical_divisors(data: &ResolutionData, lambda: &Rational) -> Result<Vec<Divisor>> {
    let kpi = data.relative_canonical()?;
    let mult = multiplier_with(data, &kpi, lambda)?;
    let mut found = Vec::new();
    for chain in candidate_chains(data)? {
        let g = Divisor::from_support(data.total_count(), &chain);
        if !candidate_with(data, &kpi, lambda, &g) {
            continue;
        }
        let critical = is_critical_with(data, &kpi, lambda, &g, &mult)?;
        #[cfg(debug_assertions)]
        {
            let numeric = critical_numeric(data, &kpi, lambda, &chain);
            assert_eq!(
                numeric, critical,
                "numeric and definitional criticality disagree at {lambda} on {g}"
            );
        }
        if critical {
            found.push(g);
        }
    }
    Ok(found)
}

/// All jumping numbers in `(from, to]` found by filtering candidate numbers
/// through critical divisors and merging the affine candidates (which are
/// always jumping numbers).
pub fn jumping_numbers_by_critical_divisors(
    data: &ResolutionData,
    from: &Rational,
    to: &Rational,
) -> Result<Vec<Rational>> {
    if from.is_negative() {
        return Err(Error::BadExponent(from.clone(), "expected range start >= 0"));
    }
    let mut result: BTreeSet<Rational> = BTreeSet::new();
    if from >= to {
        return Ok(Vec::new());
    }
    let kpi = data.relative_canonical()?;
    let chains = candidate_chains(data)?;

    let mut exceptional_candidates: BTreeSet<Rational> = BTreeSet::new();
    for i in 0..data.total_count() {
        let e = &data.f()[i];
        if !e.is_positive() {
            continue;
        }
        let affine = data.is_affine_index(i);
        let ki = kpi[i].clone();
        let mut m: BigInt = (from * e - &ki).floor_int() + 1;
        if m < BigInt::one() {
            m = BigInt::one();
        }
        let m_max: BigInt = (to * e - &ki).floor_int();
        while m <= m_max {
            let lambda = (&ki + &Rational::from_int(m.clone())) / e.clone();
            if affine {
                result.insert(lambda);
            } else {
                exceptional_candidates.insert(lambda);
            }
            m += 1;
        }
    }

    for lambda in exceptional_candidates {
        if result.contains(&lambda) {
            continue;
        }
        #[cfg(debug_assertions)]
        let mult = multiplier_with(data, &kpi, &lambda)?;
        let mut realized = false;
        for chain in &chains {
            let g = Divisor::from_support(data.total_count(), chain);
            if !candidate_with(data, &kpi, &lambda, &g) {
                continue;
            }
            let numeric = critical_numeric(data, &kpi, &lambda, chain);
            #[cfg(debug_assertions)]
            {
                let definitional = is_critical_with(data, &kpi, &lambda, &g, &mult)?;
                assert_eq!(
                    numeric, definitional,
                    "numeric and definitional criticality disagree at {lambda} on {g}"
                );
            }
            if numeric {
                realized = true;
                if cfg!(not(debug_assertions)) {
                    break;
                }
            }
        }
        if realized {
            result.insert(lambda);
        }
    }
    Ok(result.into_iter().collect())
}

/// The jumping number `λ_D`, its achieving support and the attached
/// contributing divisor for an antinef divisor `D`.
pub fn associated_jump(data: &ResolutionData, d: &Divisor) -> Result<AssociatedJump> {
    if !is_antinef(data, d)? {
        return Err(Error::NotAntinef(d.clone()));
    }
    let kpi = data.relative_canonical()?;
    let (lambda, support) = next_with(data, &kpi, d)?;
    let divisor = Divisor::from_support(data.total_count(), &support);
    Ok(AssociatedJump { lambda, support, divisor })
}

/// The minimal contributing divisor defining the same nested ideal as `G`:
/// the contributing divisor attached to the closure of `⌊λF - K⌋ - G`.
pub fn minimal_contributing_divisor(
    data: &ResolutionData,
    lambda: &Rational,
    g: &Divisor,
) -> Result<Divisor> {
    require_reduced(data, g)?;
    let kpi = data.relative_canonical()?;
    if !candidate_with(data, &kpi, lambda, g) {
        return Err(Error::NotACandidate { lambda: lambda.clone(), divisor: g.clone() });
    }
    let mult = multiplier_with(data, &kpi, lambda)?;
    let nested = contribution_with(data, &kpi, lambda, g)?;
    if nested == mult {
        return Err(Error::NotContributing { lambda: lambda.clone(), divisor: g.clone() });
    }
    let (lambda_d, support) = next_with(data, &kpi, &nested)?;
    assert_eq!(&lambda_d, lambda, "a nested ideal must point back at its own jumping number");
    let g_d = Divisor::from_support(data.total_count(), &support);
    debug_assert!(g_d.le(g));
    debug_assert_eq!(contribution_with(data, &kpi, lambda, &g_d).unwrap(), nested);
    #[cfg(debug_assertions)]
    for i in g_d.support() {
        let sub = g_d.with_value(i, Rational::zero());
        let sub_ideal = contribution_with(data, &kpi, lambda, &sub).unwrap();
        debug_assert!(
            nested.lt(&sub_ideal),
            "proper subdivisors of the minimal contributor must define strictly smaller ideals"
        );
    }
    Ok(g_d)
}

/// True iff the nested ideal of `(λ, G)` equals the preceding multiplier
/// ideal, i.e. `G` realizes the whole jump at `λ`. Checked both through the
/// ideal equality and through the interval `G_λ <= G <= H_λ`; the two
/// characterizations must agree.
pub fn is_jumping_divisor(data: &ResolutionData, lambda: &Rational, g: &Divisor) -> Result<bool> {
    require_reduced(data, g)?;
    let kpi = data.relative_canonical()?;
    if !candidate_with(data, &kpi, lambda, g) {
        return Err(Error::NotACandidate { lambda: lambda.clone(), divisor: g.clone() });
    }
    let pred = predecessor_with(data, &kpi, lambda)?;
    let mult = multiplier_with(data, &kpi, lambda)?;
    if pred == mult {
        return Err(Error::NotAJumpingNumber(lambda.clone()));
    }
    let nested = contribution_with(data, &kpi, lambda, g)?;
    let by_ideal = nested == pred;

    let g_min = minimal_jumping_divisor(data, lambda)?;
    let h = maximal_jumping_divisor(data, lambda)?;
    let by_interval = g_min.le(g) && g.le(&h);
    assert_eq!(
        by_ideal, by_interval,
        "ideal and interval characterizations of jumping divisors diverged at {lambda} on {g}"
    );
    Ok(by_ideal)
}

/// Full report for `(λ, G)`.
pub fn analyze(data: &ResolutionData, lambda: &Rational, g: &Divisor) -> Result<ContributionReport> {
    require_reduced(data, g)?;
    if !lambda.is_positive() {
        return Err(Error::BadExponent(lambda.clone(), "expected lambda > 0"));
    }
    let kpi = data.relative_canonical()?;
    let pred = predecessor_with(data, &kpi, lambda)?;
    let mult = multiplier_with(data, &kpi, lambda)?;
    let is_jumping_number = pred != mult;
    let is_cand = candidate_with(data, &kpi, lambda, g);
    if !is_cand {
        return Ok(ContributionReport {
            lambda: lambda.clone(),
            divisor: g.clone(),
            is_candidate: false,
            is_jumping_number,
            contributes: false,
            is_critical: false,
            is_jumping_divisor: false,
            nested_divisor: None,
            minimal_contributing: None,
        });
    }
    let nested = contribution_with(data, &kpi, lambda, g)?;
    let does_contribute = nested != mult;
    let critical = is_critical_with(data, &kpi, lambda, g, &mult)?;
    let jumping_divisor = is_jumping_number && is_jumping_divisor(data, lambda, g)?;
    let minimal = if does_contribute {
        Some(minimal_contributing_divisor(data, lambda, g)?)
    } else {
        None
    };
    Ok(ContributionReport {
        lambda: lambda.clone(),
        divisor: g.clone(),
        is_candidate: true,
        is_jumping_number,
        contributes: does_contribute,
        is_critical: critical,
        is_jumping_divisor: jumping_divisor,
        nested_divisor: Some(nested),
        minimal_contributing: minimal,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::*;
    use crate::jumping::jumping_chain;

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn reduced(data: &ResolutionData, support: &[usize]) -> Divisor {
        Divisor::from_support(data.total_count(), support)
    }

    #[test]
    fn candidate_tests() {
        let data = two_cusps();
        let half = rat(1, 2);
        assert!(is_candidate(&data, &half, &reduced(&data, &[2])).unwrap());
        assert!(!is_candidate(&data, &half, &reduced(&data, &[1])).unwrap());
        assert!(is_candidate(&data, &half, &reduced(&data, &[])).unwrap());
        assert!(is_candidate(&data, &rat(7, 3), &Divisor::from_ints(&[0, 2, 0, 0, 0])).is_err());
    }

    #[test]
    fn maximal_jumping_divisors() {
        let data = two_cusps();
        assert_eq!(
            maximal_jumping_divisor(&data, &Rational::one()).unwrap(),
            reduced(&data, &[0, 1, 2, 3, 4])
        );
        assert_eq!(
            maximal_jumping_divisor(&data, &rat(9, 10)).unwrap(),
            reduced(&data, &[2, 4])
        );
        // periodicity
        for lambda in [rat(9, 10), rat(1, 2), rat(11, 10)] {
            assert_eq!(
                maximal_jumping_divisor(&data, &lambda).unwrap(),
                maximal_jumping_divisor(&data, &(lambda.clone() + Rational::one())).unwrap()
            );
        }
    }

    #[test]
    fn minimal_jumping_divisors() {
        let chain = dicritical_chain();
        assert_eq!(
            minimal_jumping_divisor(&chain, &rat(3, 4)).unwrap(),
            reduced(&chain, &[0, 1, 3, 5])
        );
        let data = two_cusps();
        assert_eq!(minimal_jumping_divisor(&data, &rat(9, 10)).unwrap(), reduced(&data, &[2, 4]));
        assert!(matches!(
            minimal_jumping_divisor(&data, &rat(4, 5)),
            Err(Error::NotAJumpingNumber(_))
        ));

        // affine components can carry the minimum
        let curve = two_cusps_curve();
        let g = minimal_jumping_divisor(&curve, &Rational::one()).unwrap();
        let support = g.support();
        assert!(support.contains(&5) && support.contains(&6), "support was {support:?}");
    }

    #[test]
    fn contribution_ideals_on_dicritical_chain() {
        let chain = dicritical_chain();
        let lambda = rat(3, 4);
        assert_eq!(
            contribution_ideal(&chain, &lambda, &reduced(&chain, &[3])).unwrap(),
            Divisor::from_ints(&[5, 7, 7, 14, 6, 11])
        );
        let both = contribution_ideal(&chain, &lambda, &reduced(&chain, &[3, 5])).unwrap();
        assert_eq!(both, Divisor::from_ints(&[5, 7, 7, 14, 5, 10]));
        // strictly between the consecutive multiplier divisors
        let pred = Divisor::from_ints(&[4, 6, 7, 14, 5, 10]);
        let at = Divisor::from_ints(&[5, 7, 8, 15, 6, 11]);
        assert!(pred.lt(&both) && both.lt(&at));
        // G = 0 recovers the multiplier divisor
        assert_eq!(
            contribution_ideal(&chain, &lambda, &reduced(&chain, &[])).unwrap(),
            at
        );
    }

    #[test]
    fn criticality_on_dicritical_chain() {
        let chain = dicritical_chain();
        let lambda = rat(3, 4);
        assert!(is_critical(&chain, &lambda, &reduced(&chain, &[3])).unwrap());
        assert!(is_critical(&chain, &lambda, &reduced(&chain, &[5])).unwrap());
        let g_min = reduced(&chain, &[0, 1, 3, 5]);
        assert!(contributes(&chain, &lambda, &g_min).unwrap());
        assert!(!is_critical(&chain, &lambda, &g_min).unwrap());
        assert!(!contributes(&chain, &lambda, &reduced(&chain, &[])).unwrap());
    }

    #[test]
    fn maximal_subdivisor_shortcut_matches_exhaustive_check() {
        let chain = dicritical_chain();
        let lambda = rat(3, 4);
        for support in [vec![3], vec![5], vec![3, 5], vec![0, 1, 3, 5], vec![1, 3]] {
            let g = reduced(&chain, &support);
            assert_eq!(
                is_critical(&chain, &lambda, &g).unwrap(),
                is_critical_exhaustive(&chain, &lambda, &g).unwrap(),
                "disagreement on {g}"
            );
        }
        let data = two_cusps();
        let half = rat(1, 2);
        for support in [vec![0], vec![2], vec![4], vec![0, 2], vec![0, 2, 4]] {
            let g = reduced(&data, &support);
            assert_eq!(
                is_critical(&data, &half, &g).unwrap(),
                is_critical_exhaustive(&data, &half, &g).unwrap(),
                "disagreement on {g}"
            );
        }
    }

    #[test]
    fn enumerate_criticals() {
        let chain = dicritical_chain();
        let found = enumerate_critical_divisors(&chain, &rat(3, 4)).unwrap();
        assert_eq!(found, vec![reduced(&chain, &[3]), reduced(&chain, &[5])]);

        let data = two_cusps();
        let found = enumerate_critical_divisors(&data, &rat(1, 2)).unwrap();
        assert_eq!(found, vec![reduced(&data, &[0, 2, 4])]);
        for g in &found {
            assert!(is_critical_exhaustive(&data, &rat(1, 2), g).unwrap());
        }

        // lambda that is a candidate for no exceptional component
        assert!(enumerate_critical_divisors(&data, &rat(2, 5)).unwrap().is_empty());
    }

    #[test]
    fn candidate_algorithm_on_two_cusps() {
        let data = two_cusps();
        let numbers =
            jumping_numbers_by_critical_divisors(&data, &Rational::zero(), &rat(11, 10)).unwrap();
        assert_eq!(numbers, vec![rat(1, 2), rat(7, 10), rat(9, 10), rat(1, 1), rat(11, 10)]);
    }

    #[test]
    fn candidate_algorithm_includes_affine_numbers() {
        let curve = two_cusps_curve();
        let numbers =
            jumping_numbers_by_critical_divisors(&curve, &Rational::one(), &rat(3, 2)).unwrap();
        assert_eq!(numbers, vec![rat(3, 2)]);
        let with_one =
            jumping_numbers_by_critical_divisors(&curve, &rat(9, 10), &rat(3, 2)).unwrap();
        assert_eq!(with_one, vec![rat(1, 1), rat(3, 2)]);
        assert!(jumping_numbers_by_critical_divisors(&curve, &rat(1, 2), &rat(1, 2))
            .unwrap()
            .is_empty());
    }

    #[test]
    fn associated_jump_data() {
        let chain = dicritical_chain();
        let aj = associated_jump(&chain, &Divisor::from_ints(&[4, 6, 7, 14, 5, 10])).unwrap();
        assert_eq!(aj.lambda, rat(3, 4));
        assert_eq!(aj.support, vec![0, 1, 3, 5]);
        assert_eq!(aj.divisor, reduced(&chain, &[0, 1, 3, 5]));

        let data = two_cusps();
        let aj = associated_jump(&data, &Divisor::from_ints(&[3, 3, 6, 3, 6])).unwrap();
        assert_eq!(aj.lambda, rat(11, 10));

        assert!(associated_jump(&data, &Divisor::from_ints(&[1, 0, 1, 0, 1])).is_err());
    }

    #[test]
    fn associated_jump_of_predecessor_is_minimal_divisor() {
        let data = two_cusps();
        for record in jumping_chain(&data, &Rational::zero(), &rat(2, 1)).unwrap() {
            let pred = crate::jumping::predecessor_divisor(&data, &record.lambda).unwrap();
            let aj = associated_jump(&data, &pred).unwrap();
            assert_eq!(aj.lambda, record.lambda);
            assert_eq!(aj.divisor, record.g_lambda);
        }
    }

    #[test]
    fn minimal_contributing_divisors() {
        let chain = dicritical_chain();
        let lambda = rat(3, 4);
        // a critical divisor is its own minimal contributor
        assert_eq!(
            minimal_contributing_divisor(&chain, &lambda, &reduced(&chain, &[3])).unwrap(),
            reduced(&chain, &[3])
        );
        // the disconnected pair defines an ideal no proper subdivisor reaches
        assert_eq!(
            minimal_contributing_divisor(&chain, &lambda, &reduced(&chain, &[3, 5])).unwrap(),
            reduced(&chain, &[3, 5])
        );
        // the minimal jumping divisor is the minimal contributor of the
        // predecessor ideal
        let g_min = reduced(&chain, &[0, 1, 3, 5]);
        assert_eq!(minimal_contributing_divisor(&chain, &lambda, &g_min).unwrap(), g_min);
        assert_eq!(
            contribution_ideal(&chain, &lambda, &g_min).unwrap(),
            crate::jumping::predecessor_divisor(&chain, &lambda).unwrap()
        );
        // non-contributing divisors are rejected
        assert!(matches!(
            minimal_contributing_divisor(&chain, &lambda, &reduced(&chain, &[])),
            Err(Error::NotContributing { .. })
        ));
    }

    #[test]
    fn jumping_divisor_checks() {
        let chain = dicritical_chain();
        let lambda = rat(3, 4);
        let g_min = minimal_jumping_divisor(&chain, &lambda).unwrap();
        let h = maximal_jumping_divisor(&chain, &lambda).unwrap();
        assert!(is_jumping_divisor(&chain, &lambda, &g_min).unwrap());
        assert!(is_jumping_divisor(&chain, &lambda, &h).unwrap());
        // critical but below the minimal jumping divisor: jumps too far
        assert!(!is_jumping_divisor(&chain, &lambda, &reduced(&chain, &[3])).unwrap());
    }

    #[test]
    fn analyze_report() {
        let chain = dicritical_chain();
        let report = analyze(&chain, &rat(3, 4), &reduced(&chain, &[3])).unwrap();
        assert!(report.is_candidate && report.is_jumping_number);
        assert!(report.contributes && report.is_critical);
        assert!(!report.is_jumping_divisor);
        assert_eq!(report.nested_divisor.unwrap(), Divisor::from_ints(&[5, 7, 7, 14, 6, 11]));
        assert_eq!(report.minimal_contributing.unwrap(), reduced(&chain, &[3]));

        let non_candidate = analyze(&chain, &rat(3, 4), &reduced(&chain, &[2])).unwrap();
        assert!(!non_candidate.is_candidate);
        assert!(non_candidate.nested_divisor.is_none());
    }
}
