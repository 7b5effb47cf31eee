//! Wedge decomposition of `Z_K(CX, X)` for shifted `K`.
//!
//! For shifted `K` the polyhedral product splits as a wedge of
//! `Σ|∂Δ^F| ∧ X^I` over nonempty `I ⊆ [m]` and minimal non-faces
//! `F ∈ 𝔪(K_I)` (those containing `max I`). With every `X_i` a sphere each
//! summand is a sphere, so the decomposition can be checked in homology:
//! per induced subcomplex (`|K_I|` is a wedge of `|∂Δ^F|`) and globally
//! against the Hochster-type sum for moment-angle complexes.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::homology::{reduced_homology, sphere_wedge_profile, HomologyProfile};
use crate::vertex::{nonempty_subsets, VertexSet};

/// Sphere dimensions `n_i >= 1`, one per vertex: `X_i = S^{n_i}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SphereAssignment(Vec<u32>);

impl SphereAssignment {
    pub fn new(dims: Vec<u32>) -> Result<Self> {
        if dims.is_empty() {
            return Err(Error::SphereAssignment("no vertices".into()));
        }
        if let Some(pos) = dims.iter().position(|&n| n == 0) {
            return Err(Error::SphereAssignment(format!("n_{} must be at least 1", pos + 1)));
        }
        Ok(SphereAssignment(dims))
    }

    /// `n_i = n` for every vertex.
    pub fn uniform(m: usize, n: u32) -> Result<Self> {
        Self::new(vec![n; m])
    }

    /// The moment-angle case `n ≡ 1`.
    pub fn moment_angle(m: usize) -> Self {
        SphereAssignment(vec![1; m.max(1)])
    }

    pub fn m(&self) -> usize {
        self.0.len()
    }

    /// `n_v`; panics if `v` is outside `[m]`.
    pub fn dim(&self, v: usize) -> u32 {
        self.0[v - 1]
    }

    pub fn get(&self, v: usize) -> Option<u32> {
        v.checked_sub(1).and_then(|i| self.0.get(i)).copied()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    /// Dimension of `X^I = ∧_{i ∈ I} X_i`.
    pub fn smash_dim(&self, subset: VertexSet) -> i64 {
        subset.iter().map(|v| self.dim(v) as i64).sum()
    }

    pub fn covers(&self, m: usize) -> Result<()> {
        if self.m() < m {
            return Err(Error::SphereAssignment(format!(
                "{} dimensions given for {m} vertices",
                self.m()
            )));
        }
        Ok(())
    }
}

/// One wedge summand `Σ|∂Δ^F| ∧ X^I`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WedgeSummand {
    #[serde(rename = "I")]
    pub index_set: VertexSet,
    #[serde(rename = "F")]
    pub nonface: VertexSet,
}

impl WedgeSummand {
    /// Sphere dimension of `|∂Δ^F|`.
    pub fn boundary_sphere_dim(&self) -> i64 {
        self.nonface.len() as i64 - 2
    }
}

fn require_shifted_ghost_free(k: &SimplicialComplex) -> Result<()> {
    if let Some(&vertex) = k.ghost_vertices().first() {
        return Err(Error::GhostVertex { vertex, m: k.m() });
    }
    if !k.is_shifted() {
        return Err(Error::NotShifted);
    }
    Ok(())
}

/// `𝔪(K_I)`: minimal non-faces of `K_I` through `max I`.
pub fn minimal_nonfaces_of_induced(k: &SimplicialComplex, subset: VertexSet) -> Result<Vec<VertexSet>> {
    let top = subset.max_vertex().ok_or(Error::EmptySubset)?;
    Ok(k.induced(subset)?.minimal_nonfaces_max(top))
}

/// All summands `(I, F)`, ordered by `I` then `F` lexicographically.
pub fn decompose(k: &SimplicialComplex) -> Result<Vec<WedgeSummand>> {
    require_shifted_ghost_free(k)?;
    let mut out = Vec::new();
    for subset in nonempty_subsets(k.m())? {
        for nonface in minimal_nonfaces_of_induced(k, subset)? {
            out.push(WedgeSummand { index_set: subset, nonface });
        }
    }
    Ok(out)
}

/// `dim Σ|∂Δ^F| ∧ X^I = 1 + (|F| - 2) + sum_{i ∈ I} n_i`.
pub fn summand_dimension(s: &WedgeSummand, spheres: &SphereAssignment) -> i64 {
    1 + s.boundary_sphere_dim() + spheres.smash_dim(s.index_set)
}

/// Comparison for one induced subcomplex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InducedCheck {
    #[serde(rename = "I")]
    pub index_set: VertexSet,
    /// `H̃(K_I)`
    pub lhs: HomologyProfile,
    /// `⊕_{F ∈ 𝔪(K_I)} H̃(S^{|F|-2})`
    pub rhs: HomologyProfile,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WedgeReport {
    #[serde(rename = "per_I")]
    pub per_i: Vec<InducedCheck>,
    pub ok: bool,
}

impl WedgeReport {
    pub fn mismatches(&self) -> impl Iterator<Item = &InducedCheck> {
        self.per_i.iter().filter(|c| !c.ok)
    }
}

/// Checks that every `|K_I|` has the homology of `∨_{F ∈ 𝔪(K_I)} |∂Δ^F|`.
pub fn verify_wedge_equivalence(k: &SimplicialComplex) -> Result<WedgeReport> {
    verify_wedge_equivalence_with(k, |induced, top| induced.minimal_nonfaces_max(top))
}

/// [`verify_wedge_equivalence`] with a substitute for `𝔪`, so a corrupted
/// minimal non-face computation can be shown to be caught.
pub fn verify_wedge_equivalence_with<F>(k: &SimplicialComplex, nonfaces: F) -> Result<WedgeReport>
where
    F: Fn(&SimplicialComplex, usize) -> Vec<VertexSet> + Sync,
{
    require_shifted_ghost_free(k)?;
    let per_i = nonempty_subsets(k.m())?
        .into_par_iter()
        .map(|subset| -> Result<InducedCheck> {
            let induced = k.induced(subset)?;
            let lhs = reduced_homology(&induced)?;
            let top = subset.max_vertex().unwrap();
            let dims = nonfaces(&induced, top).iter().map(|f| f.len().saturating_sub(2)).collect::<Vec<_>>();
            let rhs = sphere_wedge_profile(dims);
            Ok(InducedCheck { index_set: subset, ok: lhs == rhs, lhs, rhs })
        })
        .collect::<Result<Vec<_>>>()?;
    let ok = per_i.iter().all(|c| c.ok);
    Ok(WedgeReport { per_i, ok })
}

/// Homology of the wedge of spheres `∨ Σ|∂Δ^F| ∧ X^I`.
pub fn total_homology(k: &SimplicialComplex, spheres: &SphereAssignment) -> Result<HomologyProfile> {
    spheres.covers(k.m())?;
    let dims = decompose(k)?
        .iter()
        .map(|s| summand_dimension(s, spheres) as usize)
        .collect::<Vec<_>>();
    Ok(sphere_wedge_profile(dims))
}

/// `H̃_q(Z_K(D², S¹)) = ⊕_{∅ ≠ I ⊆ [m]} H̃_{q-|I|-1}(K_I)`, computed from the
/// oracle homology of every induced subcomplex. Works for any ghost-free `K`.
pub fn hochster_profile(k: &SimplicialComplex) -> Result<HomologyProfile> {
    if let Some(&vertex) = k.ghost_vertices().first() {
        return Err(Error::GhostVertex { vertex, m: k.m() });
    }
    let parts = nonempty_subsets(k.m())?
        .into_par_iter()
        .map(|subset| Ok((subset.len() + 1, reduced_homology(&k.induced(subset)?)?)))
        .collect::<Result<Vec<_>>>()?;
    let mut profile = HomologyProfile::new();
    for (shift, part) in &parts {
        profile.add_shifted(part, *shift);
    }
    Ok(profile)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HochsterReport {
    pub shifted: bool,
    pub hochster: HomologyProfile,
    /// `total_homology(K, n ≡ 1)`, present when `K` is shifted.
    pub decomposition: Option<HomologyProfile>,
    /// Agreement of the two, present when `K` is shifted.
    pub agrees: Option<bool>,
}

pub fn hochster_cross_check(k: &SimplicialComplex) -> Result<HochsterReport> {
    let hochster = hochster_profile(k)?;
    let shifted = k.is_shifted();
    let decomposition = if shifted {
        Some(total_homology(k, &SphereAssignment::moment_angle(k.m()))?)
    } else {
        None
    };
    let agrees = decomposition.as_ref().map(|d| *d == hochster);
    Ok(HochsterReport { shifted, hochster, decomposition, agrees })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vs(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    fn summand(i: &[usize], f: &[usize]) -> WedgeSummand {
        WedgeSummand { index_set: vs(i), nonface: vs(f) }
    }

    #[test]
    fn boundary_of_simplex_has_one_summand() {
        for m in 2..=6 {
            let k = SimplicialComplex::boundary_of_full(m).unwrap();
            let full = VertexSet::full(m);
            assert_eq!(decompose(&k).unwrap(), vec![WedgeSummand { index_set: full, nonface: full }]);
        }
    }

    #[test]
    fn discrete_three_points() {
        let k = SimplicialComplex::discrete(3).unwrap();
        assert_eq!(
            decompose(&k).unwrap(),
            vec![
                summand(&[1, 2], &[1, 2]),
                summand(&[1, 2, 3], &[1, 3]),
                summand(&[1, 2, 3], &[2, 3]),
                summand(&[1, 3], &[1, 3]),
                summand(&[2, 3], &[2, 3]),
            ]
        );
    }

    #[test]
    fn full_simplex_has_no_summands() {
        for m in 1..=5 {
            assert!(decompose(&SimplicialComplex::full_simplex(m).unwrap()).unwrap().is_empty());
        }
    }

    #[test]
    fn decompose_rejects_non_shifted() {
        let k = SimplicialComplex::from_facets(3, [vs(&[1, 2]), vs(&[3])]).unwrap();
        assert_eq!(decompose(&k), Err(Error::NotShifted));
        let ghost = SimplicialComplex::from_facets_allow_ghost(3, [vs(&[2, 3])]).unwrap();
        assert!(matches!(decompose(&ghost), Err(Error::GhostVertex { vertex: 1, .. })));
    }

    #[test]
    fn summand_dimension_examples() {
        for m in 2..=6 {
            let full = VertexSet::full(m);
            let s = WedgeSummand { index_set: full, nonface: full };
            assert_eq!(summand_dimension(&s, &SphereAssignment::moment_angle(m)), 2 * m as i64 - 1);
        }
        let one = SphereAssignment::moment_angle(3);
        assert_eq!(summand_dimension(&summand(&[1, 2], &[1, 2]), &one), 3);
        assert_eq!(summand_dimension(&summand(&[1, 2, 3], &[1, 3]), &one), 4);
    }

    #[test]
    fn wedge_equivalence_examples() {
        let k = SimplicialComplex::boundary_of_full(4).unwrap();
        assert!(verify_wedge_equivalence(&k).unwrap().ok);
        for m in 1..=6 {
            let d = SimplicialComplex::discrete(m).unwrap();
            let report = verify_wedge_equivalence(&d).unwrap();
            assert!(report.ok);
            for check in &report.per_i {
                assert_eq!(check.lhs.betti(0), check.index_set.len() - 1);
            }
            assert!(verify_wedge_equivalence(&SimplicialComplex::full_simplex(m).unwrap()).unwrap().ok);
        }
    }

    #[test]
    fn corrupted_nonfaces_are_caught() {
        let k = SimplicialComplex::discrete(3).unwrap();
        let report = verify_wedge_equivalence_with(&k, |induced, top| {
            let mut out = induced.minimal_nonfaces_max(top);
            out.pop();
            out
        })
        .unwrap();
        assert!(!report.ok);
        assert_eq!(report.mismatches().count(), 4);
    }

    #[test]
    fn total_homology_examples() {
        let d = SimplicialComplex::discrete(3).unwrap();
        let one = SphereAssignment::moment_angle(3);
        assert_eq!(total_homology(&d, &one).unwrap(), sphere_wedge_profile([3, 3, 3, 4, 4]));
        let b = SimplicialComplex::boundary_of_full(3).unwrap();
        assert_eq!(total_homology(&b, &one).unwrap(), sphere_wedge_profile([5]));
        assert!(total_homology(&SimplicialComplex::full_simplex(3).unwrap(), &one).unwrap().is_zero());
        assert!(total_homology(&d, &SphereAssignment::moment_angle(2)).is_err());
    }

    #[test]
    fn hochster_examples() {
        let d = SimplicialComplex::discrete(3).unwrap();
        let report = hochster_cross_check(&d).unwrap();
        assert_eq!(report.hochster, sphere_wedge_profile([3, 3, 3, 4, 4]));
        assert_eq!(report.agrees, Some(true));
        for m in 3..=6 {
            let b = SimplicialComplex::boundary_of_full(m).unwrap();
            assert_eq!(hochster_profile(&b).unwrap(), sphere_wedge_profile([2 * m - 1]));
            assert!(hochster_profile(&SimplicialComplex::full_simplex(m).unwrap()).unwrap().is_zero());
        }
        let non_shifted = SimplicialComplex::from_facets(3, [vs(&[1, 2]), vs(&[3])]).unwrap();
        let report = hochster_cross_check(&non_shifted).unwrap();
        assert!(!report.shifted);
        assert_eq!(report.agrees, None);
    }

    #[test]
    fn sphere_assignment_validation() {
        assert!(SphereAssignment::new(vec![1, 0, 2]).is_err());
        assert!(SphereAssignment::new(vec![]).is_err());
        assert_eq!(SphereAssignment::uniform(3, 2).unwrap().smash_dim(vs(&[1, 3])), 4);
    }
}
