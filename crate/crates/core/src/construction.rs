//! The minimum shifted complexes `Δ(F, [a, b])` and the skeleton-wise
//! inductive construction of `Δ(F, [m])^k`.
//!
//! For `F = {d_1 < ... < d_l}` and `d_i <= c < d_{i+1}` (with the sentinel
//! `d_{l+1} = m + 1`) the construction adds the vertex `c` to
//! `Δ(F_i - c, [d_1, c - 1])` by coning off its `(d(c,k) - 1)`-skeleton:
//!
//! ```text
//! Δ(F_i, [d_1, c])^{d} = Δ(F_i - c, [d_1, c-1])^{d} ∪ (Δ(F_i - c, [d_1, c-1])^{d-1} * c)
//! ```
//!
//! glued along `Δ(F_i - c, [d_1, c-1])^{d-1}`, where `d = d(c, k)`.

use std::collections::HashSet;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::vertex::{FSequence, VertexSet};

/// `Δ(F, [lo, hi])`: the smallest complex on `[lo, hi]` that is shifted with
/// respect to the order of `[lo, hi]` and contains the simplex on `F`.
///
/// Labels are kept; the result lives on the ambient set `[max(hi, 1)]` with
/// the vertices below `lo` absent.
pub fn delta(f: VertexSet, lo: usize, hi: usize) -> Result<SimplicialComplex> {
    if lo == 0 {
        return Err(Error::VertexOutOfRange { vertex: 0, m: hi });
    }
    if !f.is_subset(VertexSet::interval(lo, hi)) {
        return Err(Error::NotSubset {
            f: f.to_string(),
            i: VertexSet::interval(lo, hi).to_string(),
        });
    }
    // Shifting only moves vertices upward, so closing within [hi] never
    // produces a vertex below lo.
    Ok(SimplicialComplex::simplex(hi.max(1), f)?.shifted_closure())
}

/// The case split
///
/// ```text
/// d(c, k) = i - 1   if d_i <= c < d_{i+1} and i <= k + 1
///           k       otherwise
/// ```
pub fn d_function(c: usize, k: i64, f: &FSequence) -> Result<i64> {
    if c < f.d(1) || c > f.m() {
        return Err(Error::OutOfInterval { c, lo: f.d(1), hi: f.m() });
    }
    let i = block_index(c, f);
    Ok(if (i as i64) <= k + 1 { i as i64 - 1 } else { k })
}

/// The `i` with `d_i <= c < d_{i+1}`.
fn block_index(c: usize, f: &FSequence) -> usize {
    (1..=f.len()).find(|&i| f.d(i) <= c && c < f.d(i + 1)).expect("c lies in [d_1, m]")
}

/// Checks `Δ(F_i, [d_1, c])^k = Δ(F_i, [d_1, c])^{d(c,k)}` for every
/// `i <= l` and every `d_i <= c < d_{i+1}`.
pub fn verify_skeleton_identity(f: &FSequence, k: i64) -> Result<bool> {
    for i in 1..=f.len() {
        for c in f.d(i)..f.d(i + 1) {
            let complex = delta(f.prefix(i), f.d(1), c)?;
            let d = d_function(c, k, f)?;
            if complex.skeleton(k) != complex.skeleton(d) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The three pieces of one inductive step.
#[derive(Clone, Debug)]
pub struct Step2Pieces {
    /// `Δ(F_i, [d_1, c])^{d}`
    pub whole: HashSet<VertexSet>,
    /// `Δ(F_i - c, [d_1, c-1])^{d}`
    pub base: HashSet<VertexSet>,
    /// `Δ(F_i - c, [d_1, c-1])^{d-1} * c`
    pub cone: HashSet<VertexSet>,
    /// `Δ(F_i - c, [d_1, c-1])^{d-1}`
    pub glue: HashSet<VertexSet>,
}

impl Step2Pieces {
    /// `whole = base ∪ cone` and `base ∩ cone = glue`.
    pub fn holds(&self) -> bool {
        let union: HashSet<_> = self.base.union(&self.cone).copied().collect();
        let meet: HashSet<_> = self.base.intersection(&self.cone).copied().collect();
        union == self.whole && meet == self.glue
    }
}

/// Joins a vertex `c` onto a face family: each `σ` contributes `σ` and `σ ∪ c`.
pub fn join_vertex(faces: &HashSet<VertexSet>, c: usize) -> HashSet<VertexSet> {
    faces.iter().flat_map(|&s| [s, s.with(c)]).collect()
}

/// Builds the pieces of the inductive step for block `i` (`2 <= i <= l`) and
/// vertex `d_i <= c < d_{i+1}`.
pub fn induction_step2_pieces(f: &FSequence, k: i64, i: usize, c: usize) -> Result<Step2Pieces> {
    if i < 2 || i > f.len() {
        return Err(Error::IndexOutOfRange {
            index: i,
            reason: format!("need 2 <= i <= {}", f.len()),
        });
    }
    if c < f.d(i) || c >= f.d(i + 1) {
        return Err(Error::OutOfInterval { c, lo: f.d(i), hi: f.d(i + 1) - 1 });
    }
    let d = d_function(c, k, f)?;
    let lo = f.d(1);
    let fi = f.prefix(i);
    let reduced = delta(fi.without(c), lo, c - 1)?;
    let glue = reduced.skeleton(d - 1).face_set().clone();
    Ok(Step2Pieces {
        whole: delta(fi, lo, c)?.skeleton(d).face_set().clone(),
        base: reduced.skeleton(d).face_set().clone(),
        cone: join_vertex(&glue, c),
        glue,
    })
}

pub fn induction_step2_holds(f: &FSequence, k: i64, i: usize, c: usize) -> Result<bool> {
    Ok(induction_step2_pieces(f, k, i, c)?.holds())
}

/// Runs [`induction_step2_holds`] over every valid `(i, c)`; vacuously true when `|F| < 2`.
pub fn verify_induction_step2(f: &FSequence, k: i64) -> Result<bool> {
    for i in 2..=f.len() {
        for c in f.d(i)..f.d(i + 1) {
            if !induction_step2_holds(f, k, i, c)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
