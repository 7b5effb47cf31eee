//! Reduced integral simplicial homology via boundary matrices and Smith
//! normal form.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::vertex::VertexSet;

/// Dense integer matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, entries: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Panics if the rows have different lengths.
    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix");
        IntMatrix { rows: rows.len(), cols, entries: rows.concat() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: i64) {
        self.entries[r * self.cols + c] = value;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&e| e == 0)
    }

    /// Matrix product; `None` on a shape mismatch or overflow.
    pub fn checked_mul(&self, rhs: &IntMatrix) -> Option<IntMatrix> {
        if self.cols != rhs.rows {
            return None;
        }
        let mut out = IntMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..rhs.cols {
                    let v = out.get(i, j).checked_add(a.checked_mul(rhs.get(k, j))?)?;
                    out.set(i, j, v);
                }
            }
        }
        Some(out)
    }

    fn to_grid<T: SnfScalar>(&self) -> Vec<Vec<T>> {
        (0..self.rows)
            .map(|r| (0..self.cols).map(|c| T::from_i64(self.get(r, c))).collect())
            .collect()
    }
}

/// Integer arithmetic needed by the elimination. Operations return `None`
/// when the representation overflows.
trait SnfScalar: Clone + PartialEq {
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn magnitude_lt(&self, other: &Self) -> bool;
    /// Truncated quotient.
    fn quotient(&self, divisor: &Self) -> Option<Self>;
    fn divides(&self, other: &Self) -> bool;
    /// `self - q * other`
    fn sub_mul(&self, q: &Self, other: &Self) -> Option<Self>;
    fn add(&self, other: &Self) -> Option<Self>;
    fn to_bigint_abs(&self) -> BigInt;
}

impl SnfScalar for i64 {
    fn from_i64(v: i64) -> Self {
        v
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn magnitude_lt(&self, other: &Self) -> bool {
        self.unsigned_abs() < other.unsigned_abs()
    }
    fn quotient(&self, divisor: &Self) -> Option<Self> {
        self.checked_div(*divisor)
    }
    fn divides(&self, other: &Self) -> bool {
        // i64::MIN % -1 overflows; treat it as divisible.
        other.checked_rem(*self).is_none_or(|r| r == 0)
    }
    fn sub_mul(&self, q: &Self, other: &Self) -> Option<Self> {
        self.checked_sub(q.checked_mul(*other)?)
    }
    fn add(&self, other: &Self) -> Option<Self> {
        self.checked_add(*other)
    }
    fn to_bigint_abs(&self) -> BigInt {
        BigInt::from(*self).abs()
    }
}

impl SnfScalar for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn magnitude_lt(&self, other: &Self) -> bool {
        self.magnitude() < other.magnitude()
    }
    fn quotient(&self, divisor: &Self) -> Option<Self> {
        Some(self / divisor)
    }
    fn divides(&self, other: &Self) -> bool {
        Zero::is_zero(&(other % self))
    }
    fn sub_mul(&self, q: &Self, other: &Self) -> Option<Self> {
        Some(self - q * other)
    }
    fn add(&self, other: &Self) -> Option<Self> {
        Some(self + other)
    }
    fn to_bigint_abs(&self) -> BigInt {
        self.abs()
    }
}

/// Diagonalizes in place and returns the nonzero diagonal. `None` on overflow.
fn eliminate<T: SnfScalar>(a: &mut [Vec<T>]) -> Option<Vec<T>> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut diagonal = Vec::new();
    for t in 0..rows.min(cols) {
        // Smallest nonzero magnitude in the trailing block; row-major ties.
        let mut pivot: Option<(usize, usize)> = None;
        for (r, row) in a.iter().enumerate().skip(t) {
            for (c, x) in row.iter().enumerate().skip(t) {
                if !x.is_zero() && pivot.is_none_or(|(pr, pc)| x.magnitude_lt(&a[pr][pc])) {
                    pivot = Some((r, c));
                }
            }
        }
        let Some((pr, pc)) = pivot else { break };
        move_to(a, t, pr, pc);

        loop {
            let mut dirty = false;
            for r in t + 1..rows {
                if a[r][t].is_zero() {
                    continue;
                }
                let q = a[r][t].quotient(&a[t][t])?;
                for c in t..cols {
                    a[r][c] = a[r][c].sub_mul(&q, &a[t][c])?;
                }
                dirty |= !a[r][t].is_zero();
            }
            for c in t + 1..cols {
                if a[t][c].is_zero() {
                    continue;
                }
                let q = a[t][c].quotient(&a[t][t])?;
                for row in a.iter_mut().skip(t) {
                    row[c] = row[c].sub_mul(&q, &row[t])?;
                }
                dirty |= !a[t][c].is_zero();
            }
            if dirty {
                // A remainder smaller than the pivot survived in row or column t.
                let mut best = (t, t);
                for r in t + 1..rows {
                    if !a[r][t].is_zero() && a[r][t].magnitude_lt(&a[best.0][best.1]) {
                        best = (r, t);
                    }
                }
                for c in t + 1..cols {
                    if !a[t][c].is_zero() && a[t][c].magnitude_lt(&a[best.0][best.1]) {
                        best = (t, c);
                    }
                }
                move_to(a, t, best.0, best.1);
                continue;
            }
            let offender = (t + 1..rows)
                .find(|&r| (t + 1..cols).any(|c| !a[t][t].divides(&a[r][c])));
            match offender {
                Some(r) => {
                    for c in t..cols {
                        a[t][c] = a[t][c].add(&a[r][c])?;
                    }
                }
                None => break,
            }
        }
        diagonal.push(a[t][t].clone());
    }
    Some(diagonal)
}

fn move_to<T>(a: &mut [Vec<T>], t: usize, r: usize, c: usize) {
    a.swap(t, r);
    if c != t {
        for row in a.iter_mut() {
            row.swap(t, c);
        }
    }
}

/// Invariant factors `d_1 | d_2 | ... | d_r` of `m`, where `r` is its rank.
pub fn smith_normal_form(m: &IntMatrix) -> Vec<BigInt> {
    let mut small = m.to_grid::<i64>();
    if let Some(diag) = eliminate(&mut small) {
        return diag.iter().map(SnfScalar::to_bigint_abs).collect();
    }
    let mut big = m.to_grid::<BigInt>();
    eliminate(&mut big)
        .expect("arbitrary precision elimination cannot overflow")
        .iter()
        .map(SnfScalar::to_bigint_abs)
        .collect()
}

/// Boundary map `C_q -> C_{q-1}` of the augmented chain complex (so `q = 0`
/// maps onto the empty face). Rows and columns follow lexicographic face order.
pub fn boundary_matrix(k: &SimplicialComplex, q: i64) -> IntMatrix {
    let targets = k.faces_of_dim(q - 1);
    let sources = k.faces_of_dim(q);
    let index: HashMap<VertexSet, usize> =
        targets.iter().enumerate().map(|(i, &f)| (f, i)).collect();
    let mut m = IntMatrix::zeros(targets.len(), sources.len());
    for (col, sigma) in sources.iter().enumerate() {
        for (j, v) in sigma.iter().enumerate() {
            let row = index[&sigma.without(v)];
            m.set(row, col, if j % 2 == 0 { 1 } else { -1 });
        }
    }
    m
}

/// Homology in one degree: a free rank and torsion invariant factors.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupSummary {
    pub betti: usize,
    pub torsion: Vec<u64>,
}

impl GroupSummary {
    pub fn is_trivial(&self) -> bool {
        self.betti == 0 && self.torsion.is_empty()
    }
}

/// Reduced homology by degree. Only nontrivial degrees are stored, so two
/// profiles are equal exactly when the groups agree in every degree.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct HomologyProfile {
    degrees: BTreeMap<usize, GroupSummary>,
}

impl HomologyProfile {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.degrees.is_empty()
    }

    pub fn get(&self, q: usize) -> Option<&GroupSummary> {
        self.degrees.get(&q)
    }

    pub fn betti(&self, q: usize) -> usize {
        self.degrees.get(&q).map_or(0, |g| g.betti)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &GroupSummary)> {
        self.degrees.iter().map(|(&q, g)| (q, g))
    }

    pub fn total_betti(&self) -> usize {
        self.degrees.values().map(|g| g.betti).sum()
    }

    pub fn has_torsion(&self) -> bool {
        self.degrees.values().any(|g| !g.torsion.is_empty())
    }

    /// `sum_q (-1)^q betti_q`
    pub fn euler_characteristic(&self) -> i64 {
        self.degrees
            .iter()
            .map(|(&q, g)| if q % 2 == 0 { g.betti as i64 } else { -(g.betti as i64) })
            .sum()
    }

    /// Adds `Z^betti ⊕ (⊕ Z/t)` in degree `q`, renormalizing torsion into
    /// invariant-factor form.
    pub fn add_group(&mut self, q: usize, betti: usize, torsion: &[u64]) {
        if betti == 0 && torsion.is_empty() {
            return;
        }
        let entry = self.degrees.entry(q).or_default();
        entry.betti += betti;
        if !torsion.is_empty() {
            let mut orders = entry.torsion.clone();
            orders.extend_from_slice(torsion);
            entry.torsion = normalize_torsion(&orders);
        }
    }

    /// Direct sum with `other` shifted up by `shift` degrees.
    pub fn add_shifted(&mut self, other: &HomologyProfile, shift: usize) {
        for (q, g) in other.iter() {
            self.add_group(q + shift, g.betti, &g.torsion);
        }
    }
}

impl fmt::Display for HomologyProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degrees.is_empty() {
            return f.write_str("0");
        }
        for (k, (q, g)) in self.degrees.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "H{q} = ")?;
            let mut parts = Vec::new();
            if g.betti > 0 {
                parts.push(if g.betti == 1 { "Z".to_string() } else { format!("Z^{}", g.betti) });
            }
            parts.extend(g.torsion.iter().map(|t| format!("Z/{t}")));
            f.write_str(&parts.join(" + "))?;
        }
        Ok(())
    }
}

/// Invariant factors (all > 1) of `⊕ Z/n_i`.
fn normalize_torsion(orders: &[u64]) -> Vec<u64> {
    let n = orders.len();
    let mut diag = IntMatrix::zeros(n, n);
    for (i, &o) in orders.iter().enumerate() {
        diag.set(i, i, o as i64);
    }
    smith_normal_form(&diag)
        .into_iter()
        .filter_map(|d| d.to_u64())
        .filter(|&d| d > 1)
        .collect()
}

/// Reduced homology of `k` with integer coefficients.
pub fn reduced_homology(k: &SimplicialComplex) -> Result<HomologyProfile> {
    if k.vertices().is_empty() {
        return Err(Error::EmptyComplex);
    }
    let dim = k.dim().unwrap();
    // factors[q] = invariant factors of ∂_q for q = 0..=dim+1
    let factors: Vec<Vec<BigInt>> =
        (0..=dim + 1).map(|q| smith_normal_form(&boundary_matrix(k, q))).collect();
    let f_vector = k.f_vector();
    let mut profile = HomologyProfile::new();
    for q in 0..=dim as usize {
        let chains = f_vector[q + 1];
        let betti = chains - factors[q].len() - factors[q + 1].len();
        let mut torsion = Vec::new();
        for d in &factors[q + 1] {
            if *d > BigInt::from(1) {
                torsion.push(d.to_u64().ok_or(Error::TorsionOverflow)?);
            }
        }
        profile.add_group(q, betti, &torsion);
    }
    Ok(profile)
}

/// Homology of a wedge of spheres of the given dimensions.
pub fn sphere_wedge_profile<I: IntoIterator<Item = usize>>(dims: I) -> HomologyProfile {
    let mut profile = HomologyProfile::new();
    for d in dims {
        profile.add_group(d, 1, &[]);
    }
    profile
}
