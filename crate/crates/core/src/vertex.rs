//! Vertex subsets of an ordered vertex set `[m] = {1, ..., m}`.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest ambient vertex count a [`VertexSet`] can address.
pub const MAX_VERTICES: usize = 64;

/// Largest ambient vertex count for operations that walk every subset of `[m]`.
pub const MAX_ENUMERATION_M: usize = 16;

/// A finite set of vertices drawn from `{1, ..., 64}`.
///
/// Stored as a bitmask (vertex `v` is bit `v - 1`), which doubles as the
/// canonical encoding used for hashing. Ordering is lexicographic on the
/// increasing vertex sequence, so `{1} < {1,2} < {1,3} < {2}`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    /// Builds a set from vertex labels, rejecting labels outside `1..=64`.
    pub fn from_vertices<I: IntoIterator<Item = usize>>(vertices: I) -> Result<Self> {
        let mut bits = 0u64;
        for v in vertices {
            if v == 0 || v > MAX_VERTICES {
                return Err(Error::VertexOutOfRange { vertex: v, m: MAX_VERTICES });
            }
            bits |= 1 << (v - 1);
        }
        Ok(VertexSet(bits))
    }

    /// The interval `{lo, ..., hi}`; empty when `lo > hi`.
    pub fn interval(lo: usize, hi: usize) -> Self {
        debug_assert!(lo >= 1 && hi <= MAX_VERTICES);
        if lo > hi {
            return VertexSet::EMPTY;
        }
        let width = hi - lo + 1;
        let ones = if width == 64 { u64::MAX } else { (1u64 << width) - 1 };
        VertexSet(ones << (lo - 1))
    }

    /// `[m] = {1, ..., m}`.
    pub fn full(m: usize) -> Self {
        VertexSet::interval(1, m)
    }

    pub fn singleton(v: usize) -> Self {
        debug_assert!((1..=MAX_VERTICES).contains(&v));
        VertexSet(1 << (v - 1))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: usize) -> bool {
        v >= 1 && v <= MAX_VERTICES && self.0 & (1 << (v - 1)) != 0
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: VertexSet) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn with(self, v: usize) -> Self {
        self.union(VertexSet::singleton(v))
    }

    pub fn without(self, v: usize) -> Self {
        self.difference(VertexSet::singleton(v))
    }

    pub fn min_vertex(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize + 1)
    }

    pub fn max_vertex(self) -> Option<usize> {
        (self.0 != 0).then(|| 64 - self.0.leading_zeros() as usize)
    }

    /// Vertices in increasing order.
    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Every subset of `self`, in increasing bitmask order (empty set first).
    pub fn subsets(self) -> impl Iterator<Item = VertexSet> {
        let full = self.0;
        let mut next = Some(0u64);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == full { None } else { Some((cur.wrapping_sub(full)) & full) };
            Some(VertexSet(cur))
        })
    }

    /// Subsets obtained by deleting one vertex.
    pub fn facets_of_boundary(self) -> impl Iterator<Item = VertexSet> {
        self.iter().map(move |v| self.without(v))
    }

    /// Dimension of the simplex spanned by `self` (`-1` for the empty set).
    pub fn dim(self) -> i64 {
        self.len() as i64 - 1
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        if self.0 == other.0 {
            return Ordering::Equal;
        }
        // Below the lowest differing vertex the sequences agree. The set
        // holding that vertex wins unless the other set has nothing left,
        // in which case the other one is a proper prefix.
        let t = (self.0 ^ other.0).trailing_zeros();
        let rest = |bits: u64| if t == 63 { 0 } else { bits >> (t + 1) };
        let (holder_is_self, other_rest) = if self.0 & (1 << t) != 0 {
            (true, rest(other.0))
        } else {
            (false, rest(self.0))
        };
        match (holder_is_self, other_rest != 0) {
            (true, true) => Ordering::Less,
            (true, false) => Ordering::Greater,
            (false, true) => Ordering::Greater,
            (false, false) => Ordering::Less,
        }
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, v) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_vec().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = Vec::<usize>::deserialize(deserializer)?;
        VertexSet::from_vertices(raw).map_err(serde::de::Error::custom)
    }
}

pub struct VertexIter(u64);

impl Iterator for VertexIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let t = self.0.trailing_zeros();
        self.0 &= self.0 - 1;
        Some(t as usize + 1)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for VertexIter {}

impl DoubleEndedIterator for VertexIter {
    fn next_back(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let top = 63 - self.0.leading_zeros();
        self.0 &= !(1 << top);
        Some(top as usize + 1)
    }
}

impl FromIterator<usize> for VertexSet {
    /// Panics on labels outside `1..=64`; use [`VertexSet::from_vertices`] for untrusted input.
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::from_vertices(iter).expect("vertex label out of range")
    }
}

/// All nonempty subsets of `[m]` in lexicographic order.
pub fn nonempty_subsets(m: usize) -> Result<Vec<VertexSet>> {
    if m > MAX_ENUMERATION_M {
        return Err(Error::EnumerationGuard { m, max: MAX_ENUMERATION_M });
    }
    let mut out: Vec<VertexSet> =
        VertexSet::full(m).subsets().filter(|s| !s.is_empty()).collect();
    out.sort();
    Ok(out)
}

/// A subset `F = {d_1 < ... < d_l}` of `[m]` together with the sentinel
/// `d_{l+1} = m + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FSequence {
    d: Vec<usize>,
    m: usize,
}

impl FSequence {
    pub fn new(f: VertexSet, m: usize) -> Result<Self> {
        if f.is_empty() {
            return Err(Error::EmptySubset);
        }
        if m > MAX_VERTICES || f.max_vertex().unwrap() > m {
            return Err(Error::VertexOutOfRange { vertex: f.max_vertex().unwrap(), m });
        }
        Ok(FSequence { d: f.to_vec(), m })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// `l = |F|`.
    pub fn len(&self) -> usize {
        self.d.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `d_i` for `1 <= i <= l + 1`, the last one being the sentinel `m + 1`.
    pub fn d(&self, i: usize) -> usize {
        assert!(i >= 1 && i <= self.d.len() + 1, "index {i} out of range");
        if i == self.d.len() + 1 {
            self.m + 1
        } else {
            self.d[i - 1]
        }
    }

    /// `F_i = {d_1 < ... < d_i}`.
    pub fn prefix(&self, i: usize) -> VertexSet {
        self.d[..i].iter().copied().collect()
    }

    pub fn as_set(&self) -> VertexSet {
        self.prefix(self.d.len())
    }
}
