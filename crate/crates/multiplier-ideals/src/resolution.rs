//! The combinatorial data of a log-resolution.
//!
//! A [`ResolutionData`] stores the intersection pairing of the exceptional
//! components against every component (exceptional first, affine — i.e.
//! strict-transform branches — after), the value divisor `F` of the ideal,
//! and display labels. All downstream computations read only this data.
//!
//! Components `0..r-1` are exceptional, `r..s-1` are affine. Only the `r`
//! exceptional rows of the pairing are stored: no formula here ever needs
//! an affine-against-affine intersection number.

use std::collections::VecDeque;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Signed;
use serde::Serialize;

use crate::divisor::Divisor;
use crate::error::{Error, Result};
use crate::linalg;
use crate::rational::Rational;
use crate::unloading;

#[derive(Clone, Debug)]
pub struct ResolutionData {
    name: String,
    exceptional: usize,
    matrix: Vec<Vec<i64>>,
    f: Divisor,
    labels: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ValidationCheck {
    pub name: String,
    pub passed: bool,
    pub mandatory: bool,
    pub message: String,
}

/// Outcome of the structural checks on an input resolution. Downstream
/// algorithms are only meaningful when every mandatory check passes; the
/// `rationality` check is a diagnostic (the input need not be a minimal
/// resolution, so the fundamental cycle's genus is reported, not enforced).
#[derive(Clone, Debug, Serialize)]
pub struct ValidationReport {
    pub checks: Vec<ValidationCheck>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.checks.iter().all(|c| c.passed || !c.mandatory)
    }

    pub fn check(&self, name: &str) -> Option<&ValidationCheck> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let status = if c.passed { "ok  " } else { "FAIL" };
            let kind = if c.mandatory { "" } else { " (diagnostic)" };
            writeln!(f, "{status} {}{kind}: {}", c.name, c.message)?;
        }
        Ok(())
    }
}

/// Per-component classification in the dual graph of the reduced support
/// of `F`. Valence counts every neighbor, affine branches included; the
/// excess is taken against `F`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentClass {
    pub index: usize,
    pub valence: usize,
    pub excess: BigInt,
    pub is_rupture: bool,
    pub is_dicritical: bool,
    pub is_end: bool,
}

impl ResolutionData {
    /// Shape-checks only; run [`validate`](Self::validate) for the
    /// mathematical hypotheses.
    pub fn new(
        name: impl Into<String>,
        exceptional: usize,
        matrix: Vec<Vec<i64>>,
        f: Divisor,
        labels: Option<Vec<String>>,
    ) -> Result<Self> {
        let r = exceptional;
        let s = f.len();
        if r == 0 {
            return Err(Error::InvalidInput("need at least one exceptional component".into()));
        }
        if s < r {
            return Err(Error::InvalidInput(format!(
                "total component count {s} is smaller than the exceptional count {r}"
            )));
        }
        if matrix.len() != r {
            return Err(Error::InvalidInput(format!(
                "expected {r} pairing rows, got {}",
                matrix.len()
            )));
        }
        for (i, row) in matrix.iter().enumerate() {
            if row.len() != s {
                return Err(Error::InvalidInput(format!(
                    "pairing row {i} has {} entries, expected {s}",
                    row.len()
                )));
            }
        }
        let labels = match labels {
            Some(l) => {
                if l.len() != s {
                    return Err(Error::InvalidInput(format!(
                        "expected {s} labels, got {}",
                        l.len()
                    )));
                }
                l
            }
            None => (1..=s).map(|i| format!("E{i}")).collect(),
        };
        Ok(ResolutionData { name: name.into(), exceptional, matrix, f, labels })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Number of exceptional components `r`.
    pub fn exceptional_count(&self) -> usize {
        self.exceptional
    }

    /// Total component count `s` (exceptional + affine).
    pub fn total_count(&self) -> usize {
        self.f.len()
    }

    pub fn is_affine_index(&self, i: usize) -> bool {
        i >= self.exceptional
    }

    /// True iff `F` has no affine part, i.e. the ideal is primary for the
    /// maximal ideal of the base point.
    pub fn is_primary(&self) -> bool {
        self.exceptional == self.total_count()
    }

    pub fn f(&self) -> &Divisor {
        &self.f
    }

    /// Same resolution with a different value divisor `F`.
    pub fn with_f(&self, f: Divisor) -> Result<Self> {
        ResolutionData::new(
            self.name.clone(),
            self.exceptional,
            self.matrix.clone(),
            f,
            Some(self.labels.clone()),
        )
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn label_index(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.matrix
    }

    pub fn self_intersection(&self, i: usize) -> i64 {
        self.matrix[i][i]
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.matrix[i][j]
    }

    /// `D · E_i` for an exceptional component, over all `s` columns.
    pub fn intersect_row(&self, i: usize, d: &Divisor) -> Rational {
        assert!(i < self.exceptional, "row {i} is not exceptional");
        let mut acc = Rational::zero();
        for (j, v) in d.iter().enumerate() {
            let m = self.matrix[i][j];
            if m != 0 && !v.is_zero() {
                acc = acc + v * &Rational::from_int(m);
            }
        }
        acc
    }

    /// `A · B` through the exceptional rows; `A` must have exceptional
    /// support so that the stored rows suffice.
    pub fn pair(&self, a: &Divisor, b: &Divisor) -> Rational {
        assert!(
            a.iter().skip(self.exceptional).all(Rational::is_zero),
            "left factor of the pairing must have exceptional support"
        );
        let mut acc = Rational::zero();
        for i in 0..self.exceptional {
            if !a[i].is_zero() {
                acc = acc + &a[i] * &self.intersect_row(i, b);
            }
        }
        acc
    }

    /// Neighbors of component `i` in the dual graph (all components).
    pub fn neighbors(&self, i: usize) -> Vec<usize> {
        let s = self.total_count();
        if i < self.exceptional {
            (0..s).filter(|&j| j != i && self.matrix[i][j] == 1).collect()
        } else {
            (0..self.exceptional).filter(|&j| self.matrix[j][i] == 1).collect()
        }
    }

    pub fn exceptional_neighbors(&self, i: usize) -> Vec<usize> {
        assert!(i < self.exceptional);
        (0..self.exceptional).filter(|&j| j != i && self.matrix[i][j] == 1).collect()
    }

    /// Excess of a divisor at an exceptional component: `-⌈D⌉ · E_i`.
    pub fn excess(&self, d: &Divisor, i: usize) -> Result<BigInt> {
        if i >= self.exceptional {
            return Err(Error::IndexOutOfRange(i));
        }
        let v = -self.intersect_row(i, &d.round_up());
        debug_assert!(v.is_integer());
        Ok(v.numer().clone())
    }

    /// Structural checks; see [`ValidationReport`].
    pub fn validate(&self) -> ValidationReport {
        let r = self.exceptional;
        let s = self.total_count();
        let mut checks = Vec::new();
        let mut push = |name: &str, mandatory: bool, passed: bool, message: String| {
            checks.push(ValidationCheck { name: name.into(), passed, mandatory, message });
        };

        // simple normal crossings: off-diagonal entries 0 or 1, diagonal <= -1
        let mut snc_msg = String::from("off-diagonal entries are 0/1, self-intersections <= -1");
        let mut snc_ok = true;
        'snc: for i in 0..r {
            for j in 0..s {
                let v = self.matrix[i][j];
                if i == j && v > -1 {
                    snc_ok = false;
                    snc_msg = format!("self-intersection of {} is {v}, expected <= -1", self.label(i));
                    break 'snc;
                }
                if i != j && v != 0 && v != 1 {
                    snc_ok = false;
                    snc_msg = format!(
                        "pairing of {} with {} is {v}, expected 0 or 1",
                        self.label(i),
                        self.label(j)
                    );
                    break 'snc;
                }
            }
        }
        push("snc_offdiagonals", true, snc_ok, snc_msg);

        let mut sym_ok = true;
        let mut sym_msg = String::from("exceptional pairing block is symmetric");
        'sym: for i in 0..r {
            for j in 0..r {
                if self.matrix[i][j] != self.matrix[j][i] {
                    sym_ok = false;
                    sym_msg = format!(
                        "entry ({}, {}) = {} but ({}, {}) = {}",
                        self.label(i),
                        self.label(j),
                        self.matrix[i][j],
                        self.label(j),
                        self.label(i),
                        self.matrix[j][i]
                    );
                    break 'sym;
                }
            }
        }
        push("symmetric", true, sym_ok, sym_msg);

        let (nd_ok, nd_msg) = if sym_ok {
            let block = linalg::to_bigint_matrix(&self.matrix, r, r);
            let minors = linalg::leading_principal_minors(&block);
            let ok = linalg::is_negative_definite(&minors);
            let shown: Vec<String> = minors.iter().map(|m| m.to_string()).collect();
            (ok, format!("leading principal minors: {}", shown.join(", ")))
        } else {
            (false, "skipped: pairing block is not symmetric".into())
        };
        push("negative_definite", true, nd_ok, nd_msg);

        let edges: Vec<(usize, usize)> = (0..r)
            .flat_map(|i| ((i + 1)..r).map(move |j| (i, j)))
            .filter(|&(i, j)| self.matrix[i][j] == 1)
            .collect();
        let connected = {
            let mut seen = vec![false; r];
            let mut queue = VecDeque::from([0usize]);
            seen[0] = true;
            while let Some(i) = queue.pop_front() {
                for &(a, b) in &edges {
                    let other = if a == i {
                        b
                    } else if b == i {
                        a
                    } else {
                        continue;
                    };
                    if !seen[other] {
                        seen[other] = true;
                        queue.push_back(other);
                    }
                }
            }
            seen.into_iter().all(|v| v)
        };
        let tree_ok = connected && edges.len() == r - 1;
        push(
            "tree",
            true,
            tree_ok,
            format!("exceptional graph has {} edges on {r} vertices, connected: {connected}", edges.len()),
        );

        let mut att_ok = true;
        let mut att_msg = String::from("every affine component meets exactly one exceptional component");
        for j in r..s {
            let count = (0..r).filter(|&i| self.matrix[i][j] == 1).count();
            if count != 1 {
                att_ok = false;
                att_msg = format!("affine component {} meets {count} exceptional components", self.label(j));
                break;
            }
        }
        push("affine_attachment", true, att_ok, att_msg);

        let mut f_ok = true;
        let mut f_msg = String::from("F is integral with positive multiplicity on every component");
        for (i, v) in self.f.iter().enumerate() {
            if !v.is_integer() || !v.is_positive() {
                f_ok = false;
                f_msg = format!("F value at {} is {v}, expected a positive integer", self.label(i));
                break;
            }
        }
        push("f_positive", true, f_ok, f_msg);

        let mandatory_ok = checks.iter().all(|c| c.passed);
        let (rat_ok, rat_msg) = if mandatory_ok {
            match self.fundamental_cycle().and_then(|z| {
                let g = self.arithmetic_genus(&z)?;
                Ok((z, g))
            }) {
                Ok((z, g)) => (
                    g.is_zero(),
                    format!("fundamental cycle {z} has arithmetic genus {g} (0 means rational)"),
                ),
                Err(e) => (false, format!("could not evaluate: {e}")),
            }
        } else {
            (true, "skipped: mandatory checks failed".into())
        };
        checks.push(ValidationCheck {
            name: "rationality".into(),
            passed: rat_ok,
            mandatory: false,
            message: rat_msg,
        });

        ValidationReport { checks }
    }

    /// The relative canonical divisor: the unique exceptional Q-divisor with
    /// `(K + E_i) · E_i = -2` for every exceptional `E_i`, solved exactly.
    /// Affine components carry value 0.
    pub fn relative_canonical(&self) -> Result<Divisor> {
        let r = self.exceptional;
        let a = linalg::to_bigint_matrix(&self.matrix, r, r);
        let b: Vec<BigInt> = (0..r).map(|i| BigInt::from(-2 - self.matrix[i][i])).collect();
        let k = linalg::solve(&a, &b).ok_or(Error::SingularSystem)?;
        let mut values = k;
        values.resize(self.total_count(), Rational::zero());
        Ok(Divisor::from_values(values))
    }

    /// Valence, excess and the rupture / dicritical / end flags for every
    /// exceptional component.
    pub fn classify(&self) -> Vec<ComponentClass> {
        (0..self.exceptional)
            .map(|i| {
                let valence = self.neighbors(i).len();
                let excess = self
                    .excess(&self.f, i)
                    .expect("exceptional index is in range");
                ComponentClass {
                    index: i,
                    valence,
                    is_rupture: valence >= 3,
                    is_dicritical: excess.is_positive(),
                    is_end: valence <= 1,
                    excess,
                }
            })
            .collect()
    }

    /// The fundamental cycle: the antinef closure of the reduced exceptional
    /// divisor, computed against the exceptional block only (the affine part
    /// of `F` plays no role here).
    pub fn fundamental_cycle(&self) -> Result<Divisor> {
        let r = self.exceptional;
        let seed = vec![BigInt::from(1); r];
        let closed = unloading::closure_exceptional(self, seed)?;
        let mut values: Vec<Rational> = closed.into_iter().map(Rational::from_int).collect();
        values.resize(self.total_count(), Rational::zero());
        Ok(Divisor::from_values(values))
    }

    /// `p_a(Z) = 1 + (K + Z) · Z / 2` for an integral divisor with
    /// exceptional support, under the exceptional bilinear form.
    pub fn arithmetic_genus(&self, z: &Divisor) -> Result<Rational> {
        if !z.is_integral() {
            return Err(Error::NonIntegral(z.clone()));
        }
        if z.iter().skip(self.exceptional).any(|v| !v.is_zero()) {
            return Err(Error::InvalidInput(
                "arithmetic genus needs a divisor with exceptional support".into(),
            ));
        }
        let k = self.relative_canonical()?;
        let kz = &k + z;
        let product = self.pair(&kz, z);
        Ok(Rational::one() + product / Rational::from_int(2))
    }

    /// Blow-up at a free point of `E_j`: appends a new exceptional component
    /// meeting only `E_j`, drops `E_j`'s self-intersection by one, and gives
    /// the new component the multiplicity `e_j` in `F`.
    pub fn blowup_free_point(&self, j: usize) -> Result<ResolutionData> {
        if j >= self.exceptional {
            return Err(Error::IndexOutOfRange(j));
        }
        let out = self.blowup_common(&[j], self.f[j].clone())?;
        debug_assert!(self.check_canonical_shift(&out, &[j]));
        Ok(out)
    }

    /// Blow-up at the intersection point of two adjacent exceptional
    /// components: the new component meets both, their mutual intersection
    /// is separated, and the new multiplicity in `F` is `e_j1 + e_j2`.
    pub fn blowup_intersection(&self, j1: usize, j2: usize) -> Result<ResolutionData> {
        if j1 >= self.exceptional {
            return Err(Error::IndexOutOfRange(j1));
        }
        if j2 >= self.exceptional {
            return Err(Error::IndexOutOfRange(j2));
        }
        if j1 == j2 || self.matrix[j1][j2] != 1 {
            return Err(Error::NotAdjacent(j1, j2));
        }
        let e = &self.f[j1] + &self.f[j2];
        let out = self.blowup_common(&[j1, j2], e)?;
        debug_assert!(self.check_canonical_shift(&out, &[j1, j2]));
        Ok(out)
    }

    fn blowup_common(&self, centers: &[usize], new_multiplicity: Rational) -> Result<ResolutionData> {
        let r = self.exceptional;
        let s = self.total_count();
        // old column j sits at j for exceptionals and j + 1 for affines;
        // the new exceptional component takes column r
        let col = |j: usize| if j < r { j } else { j + 1 };

        let mut matrix = vec![vec![0i64; s + 1]; r + 1];
        for (i, row) in matrix.iter_mut().take(r).enumerate() {
            for j in 0..s {
                row[col(j)] = self.matrix[i][j];
            }
        }
        for &c in centers {
            matrix[c][c] -= 1;
            matrix[c][r] = 1;
            matrix[r][c] = 1;
        }
        if let [a, b] = centers {
            matrix[*a][*b] = 0;
            matrix[*b][*a] = 0;
        }
        matrix[r][r] = -1;

        let mut values = Vec::with_capacity(s + 1);
        for j in 0..s {
            if j == r {
                values.push(new_multiplicity.clone());
            }
            values.push(self.f[j].clone());
        }
        if r == s {
            values.push(new_multiplicity);
        }

        let mut labels = Vec::with_capacity(s + 1);
        for j in 0..s {
            if j == r {
                labels.push(format!("E{}", s + 1));
            }
            labels.push(self.labels[j].clone());
        }
        if r == s {
            labels.push(format!("E{}", s + 1));
        }

        ResolutionData::new(self.name.clone(), r + 1, matrix, Divisor::from_values(values), Some(labels))
    }

    /// The blown-up relative canonical divisor must obey `k_new = k_j + 1`
    /// at a free point and `k_new = k_j1 + k_j2 + 1` at an intersection.
    fn check_canonical_shift(&self, blown: &ResolutionData, centers: &[usize]) -> bool {
        let (Ok(old_k), Ok(new_k)) = (self.relative_canonical(), blown.relative_canonical()) else {
            return false;
        };
        let expected = centers
            .iter()
            .fold(Rational::one(), |acc, &c| acc + old_k[c].clone());
        if new_k[self.exceptional] != expected {
            return false;
        }
        (0..self.exceptional).all(|i| new_k[i] == old_k[i])
    }

    /// The unique path between two exceptional components in the dual tree,
    /// inclusive of both endpoints.
    pub fn path_between(&self, from: usize, to: usize) -> Result<Vec<usize>> {
        let r = self.exceptional;
        if from >= r {
            return Err(Error::IndexOutOfRange(from));
        }
        if to >= r {
            return Err(Error::IndexOutOfRange(to));
        }
        let mut parent: Vec<Option<usize>> = vec![None; r];
        let mut seen = vec![false; r];
        let mut queue = VecDeque::from([from]);
        seen[from] = true;
        while let Some(i) = queue.pop_front() {
            if i == to {
                break;
            }
            for j in self.exceptional_neighbors(i) {
                if !seen[j] {
                    seen[j] = true;
                    parent[j] = Some(i);
                    queue.push_back(j);
                }
            }
        }
        if !seen[to] {
            return Err(Error::InvalidInput(format!(
                "no path between {} and {}: exceptional graph is disconnected",
                self.label(from),
                self.label(to)
            )));
        }
        let mut path = vec![to];
        let mut cur = to;
        while let Some(p) = parent[cur] {
            path.push(p);
            cur = p;
        }
        path.reverse();
        Ok(path)
    }

    /// GraphViz rendering of the dual graph: exceptional components as
    /// circles (double circle when dicritical, bold when rupture), affine
    /// components as gray boxes, with the excess shown on each vertex.
    pub fn to_dot(&self) -> String {
        let classes = self.classify();
        let mut out = String::from("graph dual_graph {\n");
        out.push_str("  node [fontsize=11];\n");
        for c in &classes {
            let shape = if c.is_dicritical { "doublecircle" } else { "circle" };
            let style = if c.is_rupture { ", style=bold" } else { "" };
            out.push_str(&format!(
                "  n{} [label=\"{}\\nexcess {}\", shape={shape}{style}];\n",
                c.index,
                self.label(c.index),
                c.excess
            ));
        }
        for j in self.exceptional..self.total_count() {
            out.push_str(&format!(
                "  n{j} [label=\"{}\", shape=box, style=filled, fillcolor=gray];\n",
                self.label(j)
            ));
        }
        for i in 0..self.exceptional {
            for j in (i + 1)..self.total_count() {
                if self.matrix[i][j] == 1 {
                    out.push_str(&format!("  n{i} -- n{j};\n"));
                }
            }
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::*;

    #[test]
    fn validates_two_cusps_data() {
        let data = two_cusps();
        let report = data.validate();
        assert!(report.is_valid(), "{report}");
        assert!(report.check("rationality").unwrap().passed);
    }

    #[test]
    fn rejects_bad_off_diagonal() {
        let mut matrix = two_cusps_matrix();
        matrix[0][2] = 2;
        let data =
            ResolutionData::new("broken", 5, matrix, Divisor::from_ints(&[4, 5, 10, 5, 10]), None)
                .unwrap();
        let report = data.validate();
        assert!(!report.check("snc_offdiagonals").unwrap().passed);
        assert!(!report.is_valid());
    }

    #[test]
    fn star_matrix_is_negative_definite() {
        let report = star_singularity().validate();
        let nd = report.check("negative_definite").unwrap();
        assert!(nd.passed, "{}", nd.message);
        // exact minors, alternating in sign
        assert_eq!(nd.message, "leading principal minors: -4, 19, -90, 425, -2000, 9375");
    }

    #[test]
    fn canonical_of_two_cusps() {
        let k = two_cusps().relative_canonical().unwrap();
        assert_eq!(k, Divisor::from_ints(&[1, 2, 4, 2, 4]));
    }

    #[test]
    fn canonical_of_star() {
        let k = star_singularity().relative_canonical().unwrap();
        let third = |n: i64| Rational::new(n, 3);
        assert_eq!(k[0], third(-5));
        for i in 1..6 {
            assert_eq!(k[i], Rational::new(-14, 15));
        }
    }

    #[test]
    fn canonical_of_single_blowup() {
        let data = single_blowup();
        assert_eq!(data.relative_canonical().unwrap(), Divisor::from_ints(&[1]));
    }

    #[test]
    fn canonical_solves_adjunction_exactly() {
        for data in [two_cusps(), two_cusps_curve(), star_singularity(), dicritical_chain()] {
            let k = data.relative_canonical().unwrap();
            for i in 0..data.exceptional_count() {
                let v = data.intersect_row(i, &k) + Rational::from_int(data.self_intersection(i));
                assert_eq!(v, Rational::from_int(-2), "row {i} of {}", data.name());
            }
        }
    }

    #[test]
    fn excess_against_f_and_partial_divisors() {
        let data = two_cusps();
        assert_eq!(data.excess(data.f(), 2).unwrap(), BigInt::from(1));
        assert_eq!(data.excess(&Divisor::zeros(5), 2).unwrap(), BigInt::from(0));
        let d = Divisor::from_ints(&[1, 0, 1, 0, 1]);
        assert_eq!(data.excess(&d, 1).unwrap(), BigInt::from(-1));
        assert_eq!(data.excess(&d, 3).unwrap(), BigInt::from(-1));
        assert!(data.excess(&d, 7).is_err());
    }

    #[test]
    fn classification_two_cusps() {
        let classes = two_cusps().classify();
        let e3 = &classes[2];
        assert_eq!(e3.valence, 2);
        assert!(e3.is_dicritical);
        assert!(!e3.is_rupture);
        assert!(!e3.is_end);
        assert!(classes[1].is_end);
    }

    #[test]
    fn classification_curve_variant() {
        let classes = two_cusps_curve().classify();
        let e3 = &classes[2];
        assert_eq!(e3.valence, 3);
        assert!(e3.is_rupture);
        assert_eq!(e3.excess, BigInt::from(0));
        assert!(!e3.is_dicritical);
    }

    #[test]
    fn classification_single_blowup() {
        let classes = single_blowup().classify();
        assert_eq!(classes[0].valence, 0);
        assert!(classes[0].is_end);
        assert!(classes[0].is_dicritical);
    }

    #[test]
    fn fundamental_cycle_star() {
        let data = star_singularity();
        let z = data.fundamental_cycle().unwrap();
        assert_eq!(z, Divisor::from_ints(&[2, 1, 1, 1, 1, 1]));
        assert_eq!(data.arithmetic_genus(&z).unwrap(), Rational::zero());
    }

    #[test]
    fn fundamental_cycle_single_and_chain() {
        assert_eq!(single_blowup().fundamental_cycle().unwrap(), Divisor::from_ints(&[1]));
        let chain = two_minus_two_chain();
        let z = chain.fundamental_cycle().unwrap();
        assert_eq!(z, Divisor::from_ints(&[1, 1]));
        assert_eq!(chain.arithmetic_genus(&z).unwrap(), Rational::zero());
    }

    #[test]
    fn fundamental_cycle_full_support_genus_zero_everywhere() {
        for data in [two_cusps(), two_cusps_curve(), star_singularity(), dicritical_chain()] {
            let z = data.fundamental_cycle().unwrap();
            for i in 0..data.exceptional_count() {
                assert!(z[i].is_positive(), "cycle misses {} on {}", data.label(i), data.name());
            }
            assert_eq!(data.arithmetic_genus(&z).unwrap(), Rational::zero(), "{}", data.name());
        }
    }

    #[test]
    fn genus_of_single_blowup_cycle() {
        let data = single_blowup();
        let z = Divisor::from_ints(&[1]);
        assert_eq!(data.arithmetic_genus(&z).unwrap(), Rational::zero());
    }

    #[test]
    fn free_blowup_extends_data() {
        let data = two_cusps();
        let blown = data.blowup_free_point(0).unwrap();
        assert_eq!(blown.exceptional_count(), 6);
        assert_eq!(blown.f()[5], Rational::from_int(4));
        let k = blown.relative_canonical().unwrap();
        assert_eq!(k[5], Rational::from_int(2));
        assert!(blown.validate().is_valid());
    }

    #[test]
    fn free_blowup_of_single() {
        let blown = single_blowup().blowup_free_point(0).unwrap();
        assert_eq!(blown.f(), &Divisor::from_ints(&[1, 1]));
        assert_eq!(blown.relative_canonical().unwrap(), Divisor::from_ints(&[1, 2]));
    }

    #[test]
    fn intersection_blowup_extends_data() {
        let data = two_cusps();
        let blown = data.blowup_intersection(0, 2).unwrap();
        assert_eq!(blown.f()[5], Rational::from_int(14));
        let k = blown.relative_canonical().unwrap();
        assert_eq!(k[5], Rational::from_int(6));
        assert!(blown.validate().is_valid());
        assert_eq!(blown.entry(0, 2), 0);
        assert_eq!(blown.entry(0, 5), 1);
        assert_eq!(blown.entry(2, 5), 1);
        assert!(data.blowup_intersection(1, 4).is_err());
    }

    #[test]
    fn intersection_blowup_shifts_affine_columns() {
        let data = two_cusps_curve();
        let blown = data.blowup_intersection(0, 2).unwrap();
        assert_eq!(blown.exceptional_count(), 6);
        assert_eq!(blown.total_count(), 8);
        // the affine branch that met E3 still meets it after renumbering
        assert_eq!(blown.entry(2, 6), 1);
        assert_eq!(blown.label(6), "E6");
        assert!(blown.validate().is_valid());
    }

    #[test]
    fn paths_in_trees() {
        let data = two_cusps();
        assert_eq!(data.path_between(1, 0).unwrap(), vec![1, 2, 0]);
        assert_eq!(data.path_between(3, 3).unwrap(), vec![3]);
        let chain = dicritical_chain();
        assert_eq!(chain.path_between(2, 4).unwrap(), vec![2, 3, 1, 0, 5, 4]);
    }

    #[test]
    fn valence_sum_is_twice_edge_count() {
        for data in [two_cusps(), two_cusps_curve(), star_singularity(), dicritical_chain()] {
            let degree_sum: usize = (0..data.total_count()).map(|i| data.neighbors(i).len()).sum();
            let s = data.total_count();
            let edges: usize = (0..data.exceptional_count())
                .map(|i| ((i + 1)..s).filter(|&j| data.entry(i, j) == 1).count())
                .sum();
            assert_eq!(degree_sum, 2 * edges, "handshake failed on {}", data.name());
            // a connected tree on s vertices has s - 1 edges
            assert_eq!(edges, s - 1);
        }
    }

    #[test]
    fn shared_types_are_thread_safe() {
        fn assert_send_sync<T: Send + Sync>() {}
        assert_send_sync::<ResolutionData>();
        assert_send_sync::<Divisor>();
        assert_send_sync::<Rational>();
        assert_send_sync::<ValidationReport>();
    }

    #[test]
    fn dot_render_shapes() {
        let dot = two_cusps_curve().to_dot();
        assert_eq!(dot.matches("shape=circle").count(), 5);
        assert_eq!(dot.matches("shape=box").count(), 2);
        assert_eq!(dot.matches("style=bold").count(), 2);
        let dot = two_cusps().to_dot();
        assert_eq!(dot.matches("shape=doublecircle").count(), 2);
    }
}
