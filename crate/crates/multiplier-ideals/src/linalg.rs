//! Fraction-free exact linear algebra over the integers.
//!
//! Bareiss elimination keeps every intermediate entry integral (each division
//! is exact), which gives leading principal minors and linear solves with no
//! rounding and no coefficient blow-up beyond the minors themselves.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::rational::Rational;

/// Leading principal minors `det(M_1), ..., det(M_n)` of a square matrix.
///
/// One Bareiss sweep yields all of them; a zero pivot (a singular leading
/// block) forces the remaining minors to be computed individually with row
/// pivoting.
pub fn leading_principal_minors(matrix: &[Vec<BigInt>]) -> Vec<BigInt> {
    let n = matrix.len();
    let mut m: Vec<Vec<BigInt>> = matrix.to_vec();
    let mut minors = Vec::with_capacity(n);
    let mut prev = BigInt::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            for j in k..n {
                minors.push(determinant_of_leading(matrix, j + 1));
            }
            return minors;
        }
        for i in (k + 1)..n {
            for j in (k + 1)..n {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = num / &prev;
            }
        }
        prev = m[k][k].clone();
        minors.push(m[k][k].clone());
    }
    minors
}

fn determinant_of_leading(matrix: &[Vec<BigInt>], k: usize) -> BigInt {
    let block: Vec<Vec<BigInt>> =
        matrix.iter().take(k).map(|row| row.iter().take(k).cloned().collect()).collect();
    determinant(block)
}

/// Exact determinant via Bareiss elimination with row pivoting.
pub fn determinant(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            let Some(pivot) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, pivot);
            sign = -sign;
        }
        for i in (k + 1)..n {
            for j in (k + 1)..n {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = num / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}

/// Solves `A x = b` exactly. Returns `None` when `A` is singular.
///
/// Forward elimination is fraction-free; the single division per unknown
/// happens in the rational back-substitution.
pub fn solve(a: &[Vec<BigInt>], b: &[BigInt]) -> Option<Vec<Rational>> {
    let n = a.len();
    assert_eq!(b.len(), n);
    // augmented matrix, columns 0..n from A and column n from b
    let mut m: Vec<Vec<BigInt>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            assert_eq!(row.len(), n);
            let mut full = row.clone();
            full.push(rhs.clone());
            full
        })
        .collect();

    let mut prev = BigInt::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            let pivot = (k + 1..n).find(|&i| !m[i][k].is_zero())?;
            m.swap(k, pivot);
        }
        for i in (k + 1)..n {
            for j in (k + 1)..=n {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = num / &prev;
            }
        }
        prev = m[k][k].clone();
    }

    let mut x = vec![Rational::zero(); n];
    for i in (0..n).rev() {
        if m[i][i].is_zero() {
            return None;
        }
        let mut acc = Rational::from_int(m[i][n].clone());
        for j in (i + 1)..n {
            acc = acc - Rational::from_int(m[i][j].clone()) * x[j].clone();
        }
        x[i] = acc / Rational::from_int(m[i][i].clone());
    }
    Some(x)
}

/// True iff the symmetric integer matrix is negative-definite, i.e. its
/// leading principal minors alternate in sign starting negative.
pub fn is_negative_definite(minors: &[BigInt]) -> bool {
    minors.iter().enumerate().all(|(k, d)| {
        if k % 2 == 0 {
            d.is_negative()
        } else {
            d.is_positive()
        }
    })
}

pub fn to_bigint_matrix(matrix: &[Vec<i64>], rows: usize, cols: usize) -> Vec<Vec<BigInt>> {
    (0..rows).map(|i| (0..cols).map(|j| BigInt::from(matrix[i][j])).collect()).collect()
}
