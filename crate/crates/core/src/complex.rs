//! Simplicial complexes on an ordered ambient vertex set `[m]`.

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::vertex::{VertexSet, MAX_VERTICES};

/// A downward-closed family of faces on the ambient vertex set `[m]`.
///
/// The ambient `m` is part of the value: two complexes with the same faces
/// but different `m` are different objects (they give different polyhedral
/// products). Faces are keyed by their bitmask encoding.
#[derive(Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    m: usize,
    faces: HashSet<VertexSet>,
}

fn check_ambient(m: usize) -> Result<()> {
    if m == 0 || m > MAX_VERTICES {
        return Err(Error::AmbientSize { m, max: MAX_VERTICES });
    }
    Ok(())
}

impl SimplicialComplex {
    /// Downward closure of `facets` on `[m]`. Every vertex of `[m]` must be a face.
    pub fn from_facets<I: IntoIterator<Item = VertexSet>>(m: usize, facets: I) -> Result<Self> {
        let k = Self::from_facets_allow_ghost(m, facets)?;
        if let Some(v) = k.ghost_vertices().first() {
            return Err(Error::GhostVertex { vertex: *v, m });
        }
        Ok(k)
    }

    /// Downward closure of `facets` on `[m]`, permitting vertices of `[m]`
    /// that are not faces.
    pub fn from_facets_allow_ghost<I: IntoIterator<Item = VertexSet>>(
        m: usize,
        facets: I,
    ) -> Result<Self> {
        check_ambient(m)?;
        let ambient = VertexSet::full(m);
        let mut faces = HashSet::new();
        for facet in facets {
            if !facet.is_subset(ambient) {
                let vertex = facet.difference(ambient).min_vertex().unwrap();
                return Err(Error::VertexOutOfRange { vertex, m });
            }
            if faces.contains(&facet) {
                continue;
            }
            faces.extend(facet.subsets());
        }
        Ok(SimplicialComplex { m, faces })
    }

    /// The complex with no faces at all (not even the empty face).
    pub fn empty(m: usize) -> Result<Self> {
        check_ambient(m)?;
        Ok(SimplicialComplex { m, faces: HashSet::new() })
    }

    /// `Δ^F` on the ambient set `[m]`.
    pub fn simplex(m: usize, f: VertexSet) -> Result<Self> {
        Self::from_facets_allow_ghost(m, [f])
    }

    /// The full simplex `Δ^[m]`.
    pub fn full_simplex(m: usize) -> Result<Self> {
        check_ambient(m)?;
        Self::simplex(m, VertexSet::full(m))
    }

    /// `∂Δ^[m]`.
    pub fn boundary_of_full(m: usize) -> Result<Self> {
        check_ambient(m)?;
        boundary_simplex(VertexSet::full(m)).map(|k| k.with_ambient(m))
    }

    /// `m` isolated points.
    pub fn discrete(m: usize) -> Result<Self> {
        Self::from_facets(m, (1..=m).map(VertexSet::singleton))
    }

    /// Faces of a downward-closed set, taken as given.
    pub(crate) fn from_closed_faces(m: usize, faces: HashSet<VertexSet>) -> Self {
        debug_assert!(faces
            .iter()
            .all(|f| f.facets_of_boundary().all(|g| faces.contains(&g))));
        SimplicialComplex { m, faces }
    }

    fn with_ambient(mut self, m: usize) -> Self {
        debug_assert!(self.faces.iter().all(|f| f.max_vertex().unwrap_or(0) <= m));
        self.m = m;
        self
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn num_faces(&self) -> usize {
        self.faces.len()
    }

    pub fn contains(&self, face: VertexSet) -> bool {
        self.faces.contains(&face)
    }

    pub fn faces(&self) -> impl Iterator<Item = VertexSet> + '_ {
        self.faces.iter().copied()
    }

    /// All faces, lexicographically sorted.
    pub fn sorted_faces(&self) -> Vec<VertexSet> {
        let mut out: Vec<_> = self.faces.iter().copied().collect();
        out.sort();
        out
    }

    /// Faces of dimension `q`, lexicographically sorted.
    pub fn faces_of_dim(&self, q: i64) -> Vec<VertexSet> {
        let mut out: Vec<_> = self.faces.iter().copied().filter(|f| f.dim() == q).collect();
        out.sort();
        out
    }

    /// Maximal faces, lexicographically sorted.
    pub fn facets(&self) -> Vec<VertexSet> {
        let mut out: Vec<_> = self
            .faces
            .iter()
            .copied()
            .filter(|&f| {
                VertexSet::full(self.m)
                    .difference(f)
                    .iter()
                    .all(|v| !self.faces.contains(&f.with(v)))
            })
            .collect();
        out.sort();
        out
    }

    /// Dimension of the largest face; `None` for the complex with no faces.
    pub fn dim(&self) -> Option<i64> {
        self.faces.iter().map(|f| f.dim()).max()
    }

    /// Vertices of `[m]` that are faces.
    pub fn vertices(&self) -> VertexSet {
        (1..=self.m).filter(|&v| self.faces.contains(&VertexSet::singleton(v))).collect()
    }

    pub fn ghost_vertices(&self) -> Vec<usize> {
        VertexSet::full(self.m).difference(self.vertices()).to_vec()
    }

    pub fn has_ghost_vertices(&self) -> bool {
        self.vertices() != VertexSet::full(self.m)
    }

    /// Face counts `f_{-1}, f_0, ..., f_dim`.
    pub fn f_vector(&self) -> Vec<usize> {
        let Some(d) = self.dim() else { return Vec::new() };
        let mut out = vec![0; (d + 2) as usize];
        for f in &self.faces {
            out[f.len()] += 1;
        }
        out
    }

    /// Reduced Euler characteristic `sum_{q >= -1} (-1)^q f_q`.
    pub fn reduced_euler_characteristic(&self) -> i64 {
        self.faces.iter().map(|f| if f.len() % 2 == 1 { 1 } else { -1 }).sum()
    }

    /// Shiftedness with larger vertices preferred: whenever `i ∈ σ ∈ K` and
    /// `i < j <= m`, the face `(σ - i) ∪ j` must be present.
    pub fn is_shifted(&self) -> bool {
        self.faces.iter().all(|&sigma| {
            sigma.iter().all(|i| {
                (i + 1..=self.m).all(|j| self.faces.contains(&sigma.without(i).with(j)))
            })
        })
    }

    /// `K_I = {σ ∈ K : σ ⊆ I}`, keeping original labels and the ambient `m`.
    pub fn induced(&self, subset: VertexSet) -> Result<Self> {
        if subset.is_empty() {
            return Err(Error::EmptySubset);
        }
        if !subset.is_subset(VertexSet::full(self.m)) {
            let vertex = subset.max_vertex().unwrap();
            return Err(Error::VertexOutOfRange { vertex, m: self.m });
        }
        let faces = self.faces.iter().copied().filter(|f| f.is_subset(subset)).collect();
        Ok(SimplicialComplex { m: self.m, faces })
    }

    /// Faces of dimension at most `k`. Below `-1` the result has no faces.
    pub fn skeleton(&self, k: i64) -> Self {
        let faces = self.faces.iter().copied().filter(|f| f.dim() <= k).collect();
        SimplicialComplex { m: self.m, faces }
    }

    /// Relabels vertices through `map` (old label to new label) onto `[new_m]`.
    pub fn relabel<F: Fn(usize) -> usize>(&self, new_m: usize, map: F) -> Result<Self> {
        check_ambient(new_m)?;
        let mut faces = HashSet::with_capacity(self.faces.len());
        for f in &self.faces {
            let g = VertexSet::from_vertices(f.iter().map(&map))?;
            if g.len() != f.len() {
                return Err(Error::InvalidPermutation("relabeling is not injective".into()));
            }
            if g.max_vertex().unwrap_or(0) > new_m {
                return Err(Error::VertexOutOfRange { vertex: g.max_vertex().unwrap(), m: new_m });
            }
            faces.insert(g);
        }
        Ok(SimplicialComplex { m: new_m, faces })
    }

    /// The order-isomorphic copy of `K_I` on `{1, ..., |I|}`.
    pub fn induced_relabeled(&self, subset: VertexSet) -> Result<Self> {
        let induced = self.induced(subset)?;
        let order: Vec<usize> = subset.to_vec();
        induced.relabel(order.len(), |v| order.iter().position(|&u| u == v).unwrap() + 1)
    }

    /// Cone with apex `m + 1`.
    pub fn cone(&self) -> Result<Self> {
        let apex = self.m + 1;
        check_ambient(apex)?;
        let mut faces = self.faces.clone();
        faces.extend(self.faces.iter().map(|f| f.with(apex)));
        Ok(SimplicialComplex { m: apex, faces })
    }

    /// Minimal non-faces containing `top`: sets `F ∋ top` with `F ∉ K` and
    /// every proper subset of `F` in `K`. Sorted lexicographically.
    ///
    /// For `𝔪(K_I)` call this on `K_I` with `top = max I`.
    pub fn minimal_nonfaces_max(&self, top: usize) -> Vec<VertexSet> {
        if top == 0 || top > self.m {
            return Vec::new();
        }
        let mut out: Vec<VertexSet> = self
            .faces
            .iter()
            .copied()
            .filter(|tau| !tau.contains(top))
            .map(|tau| tau.with(top))
            .filter(|&f| {
                !self.faces.contains(&f)
                    && f.iter().all(|v| v == top || self.faces.contains(&f.without(v)))
            })
            .collect();
        out.sort();
        out
    }

    /// The smallest shifted complex on `[m]` containing `self`.
    pub fn shifted_closure(&self) -> Self {
        let mut faces = self.faces.clone();
        let mut queue: Vec<VertexSet> = faces.iter().copied().collect();
        while let Some(sigma) = queue.pop() {
            for i in sigma.iter() {
                for j in i + 1..=self.m {
                    if sigma.contains(j) {
                        continue;
                    }
                    let shifted = sigma.without(i).with(j);
                    if faces.insert(shifted) {
                        queue.push(shifted);
                        for sub in shifted.subsets() {
                            if faces.insert(sub) {
                                queue.push(sub);
                            }
                        }
                    }
                }
            }
        }
        SimplicialComplex { m: self.m, faces }
    }

    /// Whether every face of `self` is a face of `other` (ambient sets ignored).
    pub fn is_subcomplex_of(&self, other: &SimplicialComplex) -> bool {
        self.faces.iter().all(|f| other.faces.contains(f))
    }

    pub(crate) fn face_set(&self) -> &HashSet<VertexSet> {
        &self.faces
    }
}

/// `∂Δ^F`: all proper subsets of `F`, on the ambient set `[max F]`.
pub fn boundary_simplex(f: VertexSet) -> Result<SimplicialComplex> {
    if f.len() < 2 {
        return Err(Error::BoundaryTooSmall { size: f.len() });
    }
    let faces = f.subsets().filter(|&s| s != f).collect();
    Ok(SimplicialComplex { m: f.max_vertex().unwrap(), faces })
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SimplicialComplex(m={}, facets=[", self.m)?;
        for (k, facet) in self.facets().iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{facet}")?;
        }
        f.write_str("])")
    }
}
