//! Component-indexed divisors with exact rational values.
//!
//! A [`Divisor`] is a dense vector of [`Rational`] values, one per component
//! of a fixed log-resolution (exceptional components first, then the affine
//! ones). Denseness is deliberate: component counts are small and every
//! algorithm touches all entries.
//!
//! The order used throughout is the componentwise partial order, exposed as
//! [`Divisor::le`] / [`Divisor::lt`]. `PartialOrd` is intentionally not
//! implemented: deriving it would give a lexicographic order, which is wrong
//! for divisors.

use std::fmt;
use std::ops::{Add, Index, Sub};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::rational::Rational;

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Divisor {
    values: Vec<Rational>,
}

/// Componentwise comparison outcome for two divisors of equal length.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PointwiseOrder {
    Equal,
    Less,
    Greater,
    Incomparable,
}

impl Divisor {
    pub fn zeros(len: usize) -> Self {
        Divisor { values: vec![Rational::zero(); len] }
    }

    pub fn from_values(values: Vec<Rational>) -> Self {
        Divisor { values }
    }

    pub fn from_ints(values: &[i64]) -> Self {
        Divisor { values: values.iter().map(|&v| Rational::from_int(v)).collect() }
    }

    pub fn from_bigints(values: Vec<BigInt>) -> Self {
        Divisor { values: values.into_iter().map(Rational::from_int).collect() }
    }

    /// Reduced divisor with value 1 exactly on `support`.
    pub fn from_support(len: usize, support: &[usize]) -> Self {
        let mut d = Divisor::zeros(len);
        for &i in support {
            assert!(i < len, "support index {i} out of range for length {len}");
            d.values[i] = Rational::one();
        }
        d
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Rational> {
        self.values.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Rational::is_zero)
    }

    pub fn is_effective(&self) -> bool {
        self.values.iter().all(|v| !v.is_negative())
    }

    pub fn is_integral(&self) -> bool {
        self.values.iter().all(Rational::is_integer)
    }

    /// True iff every value is 0 or 1.
    pub fn is_reduced(&self) -> bool {
        self.values.iter().all(|v| v.is_zero() || v == &Rational::one())
    }

    /// Indices with nonzero value, ascending.
    pub fn support(&self) -> Vec<usize> {
        self.values
            .iter()
            .enumerate()
            .filter_map(|(i, v)| (!v.is_zero()).then_some(i))
            .collect()
    }

    pub fn round_down(&self) -> Divisor {
        self.map(|v| Rational::from_int(v.floor_int()))
    }

    pub fn round_up(&self) -> Divisor {
        self.map(|v| Rational::from_int(v.ceil_int()))
    }

    pub fn fractional_part(&self) -> Divisor {
        self.map(Rational::fract)
    }

    /// Componentwise max with 0. Negative values never constrain an ideal,
    /// so this is taken before any antinef closure.
    pub fn effective_part(&self) -> Divisor {
        self.map(|v| if v.is_negative() { Rational::zero() } else { v.clone() })
    }

    pub fn scale(&self, factor: &Rational) -> Divisor {
        self.map(|v| v * factor)
    }

    pub fn map(&self, f: impl Fn(&Rational) -> Rational) -> Divisor {
        Divisor { values: self.values.iter().map(f).collect() }
    }

    /// Componentwise `self <= other`.
    pub fn le(&self, other: &Divisor) -> bool {
        assert_eq!(self.len(), other.len(), "divisor length mismatch");
        self.values.iter().zip(&other.values).all(|(a, b)| a <= b)
    }

    /// Componentwise `self <= other` with at least one strict coordinate.
    pub fn lt(&self, other: &Divisor) -> bool {
        self.le(other) && self != other
    }

    pub fn pointwise_cmp(&self, other: &Divisor) -> PointwiseOrder {
        let le = self.le(other);
        let ge = other.le(self);
        match (le, ge) {
            (true, true) => PointwiseOrder::Equal,
            (true, false) => PointwiseOrder::Less,
            (false, true) => PointwiseOrder::Greater,
            (false, false) => PointwiseOrder::Incomparable,
        }
    }

    /// Integer values, or `None` if any component is non-integral.
    pub fn to_bigints(&self) -> Option<Vec<BigInt>> {
        self.values
            .iter()
            .map(|v| v.is_integer().then(|| v.numer().clone()))
            .collect()
    }

    pub fn with_value(&self, index: usize, value: Rational) -> Divisor {
        let mut d = self.clone();
        d.values[index] = value;
        d
    }
}

impl Index<usize> for Divisor {
    type Output = Rational;
    fn index(&self, i: usize) -> &Rational {
        &self.values[i]
    }
}

impl Add for &Divisor {
    type Output = Divisor;
    fn add(self, rhs: &Divisor) -> Divisor {
        assert_eq!(self.len(), rhs.len(), "divisor length mismatch");
        Divisor {
            values: self.values.iter().zip(&rhs.values).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &Divisor {
    type Output = Divisor;
    fn sub(self, rhs: &Divisor) -> Divisor {
        assert_eq!(self.len(), rhs.len(), "divisor length mismatch");
        Divisor {
            values: self.values.iter().zip(&rhs.values).map(|(a, b)| a - b).collect(),
        }
    }
}

impl fmt::Display for Divisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Divisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn rounding() {
        let d = Divisor::from_values(vec![rat(1, 2), rat(-5, 3)]);
        assert_eq!(d.round_down(), Divisor::from_ints(&[0, -2]));
        assert_eq!(d.round_up(), Divisor::from_ints(&[1, -1]));
        let rebuilt = &d.round_down() + &d.fractional_part();
        assert_eq!(rebuilt, d);
    }

    #[test]
    fn fractional_part_of_scaled_difference() {
        // 7/10 * (4, 5) - (1, 2) = (9/5, 3/2), whose fractional part is (4/5, 1/2)
        let f = Divisor::from_ints(&[4, 5]);
        let k = Divisor::from_ints(&[1, 2]);
        let d = &f.scale(&rat(7, 10)) - &k;
        assert_eq!(d, Divisor::from_values(vec![rat(9, 5), rat(3, 2)]));
        assert_eq!(d.fractional_part(), Divisor::from_values(vec![rat(4, 5), rat(1, 2)]));
    }

    #[test]
    fn pointwise_order() {
        let a = Divisor::from_ints(&[1, 1, 2, 1, 2]);
        let b = Divisor::from_ints(&[2, 2, 4, 2, 4]);
        let c = Divisor::from_ints(&[0, 3, 0, 0, 0]);
        assert!(a.lt(&b));
        assert_eq!(a.pointwise_cmp(&b), PointwiseOrder::Less);
        assert_eq!(b.pointwise_cmp(&a), PointwiseOrder::Greater);
        assert_eq!(a.pointwise_cmp(&a), PointwiseOrder::Equal);
        assert_eq!(a.pointwise_cmp(&c), PointwiseOrder::Incomparable);
    }

    #[test]
    fn support_and_reduced() {
        let g = Divisor::from_support(5, &[0, 2, 4]);
        assert!(g.is_reduced());
        assert_eq!(g.support(), vec![0, 2, 4]);
        assert!(!Divisor::from_ints(&[0, 2]).is_reduced());
    }

    fn arb_divisor(len: usize) -> impl Strategy<Value = Divisor> {
        prop::collection::vec((-60i64..60, 1i64..12), len)
            .prop_map(|vs| Divisor::from_values(vs.into_iter().map(|(n, d)| rat(n, d)).collect()))
    }

    proptest! {
        #[test]
        fn rounding_is_monotone((a, delta) in (arb_divisor(4), arb_divisor(4))) {
            let hi = &a + &delta.effective_part();
            prop_assert!(a.round_down().le(&hi.round_down()));
            prop_assert!(a.round_up().le(&hi.round_up()));
        }

        #[test]
        fn floor_plus_fract_identity(d in arb_divisor(5)) {
            prop_assert_eq!(&d.round_down() + &d.fractional_part(), d);
        }
    }
}
