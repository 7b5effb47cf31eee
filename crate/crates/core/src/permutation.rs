//! Permutations of `[m]` in one-line notation.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::vertex::VertexSet;

/// A bijection of `[m]`; `images[j - 1]` is the image of `j`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
    sign: i8,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let m = images.len();
        let mut seen = vec![false; m];
        for &x in &images {
            if x == 0 || x > m || std::mem::replace(&mut seen[x - 1], true) {
                return Err(Error::InvalidPermutation(format!("{images:?}")));
            }
        }
        let sign = if inversions(&images) % 2 == 0 { 1 } else { -1 };
        Ok(Permutation { images, sign })
    }

    pub fn identity(m: usize) -> Self {
        Permutation { images: (1..=m).collect(), sign: 1 }
    }

    pub fn m(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, v: usize) -> usize {
        self.images[v - 1]
    }

    /// `(-1)^{#inversions}`.
    pub fn sign(&self) -> i8 {
        self.sign
    }

    pub fn inversions(&self) -> usize {
        inversions(&self.images)
    }

    /// Sign from the cycle decomposition, `(-1)^{m - #cycles}`; independent
    /// of the inversion count.
    pub fn sign_by_cycles(&self) -> i8 {
        let m = self.m();
        let mut visited = vec![false; m];
        let mut cycles = 0;
        for start in 1..=m {
            if visited[start - 1] {
                continue;
            }
            cycles += 1;
            let mut v = start;
            while !visited[v - 1] {
                visited[v - 1] = true;
                v = self.apply(v);
            }
        }
        if (m - cycles) % 2 == 0 { 1 } else { -1 }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(j, &x)| x == j + 1)
    }

    /// `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.m() != other.m() {
            return Err(Error::InvalidPermutation(format!(
                "composing permutations of [{}] and [{}]",
                self.m(),
                other.m()
            )));
        }
        Permutation::new(other.images.iter().map(|&x| self.apply(x)).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.m()];
        for (j, &x) in self.images.iter().enumerate() {
            inv[x - 1] = j + 1;
        }
        Permutation { images: inv, sign: self.sign }
    }

    /// Whether every vertex of `set` is fixed.
    pub fn fixes(&self, set: VertexSet) -> bool {
        set.iter().all(|v| v <= self.m() && self.apply(v) == v)
    }
}

fn inversions(images: &[usize]) -> usize {
    let mut count = 0;
    for (a, &x) in images.iter().enumerate() {
        count += images[a + 1..].iter().filter(|&&y| y < x).count();
    }
    count
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (k, x) in self.images.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("]")
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.images.serialize(serializer)
    }
}

/// The reordering permutation `σ(F, I)` of `[m]`.
///
/// It fixes `[m] - I` and sends the `t`-th element of `I` to the `t`-th
/// element of the sequence `b_1 < ... < b_r, a_1 < ... < a_l`, where the
/// `b`s enumerate `I - F` and the `a`s enumerate `F`.
pub fn sigma_permutation(f: VertexSet, i: VertexSet, m: usize) -> Result<Permutation> {
    if f.is_empty() {
        return Err(Error::EmptySubset);
    }
    if !f.is_subset(i) {
        return Err(Error::NotSubset { f: f.to_string(), i: i.to_string() });
    }
    if !i.is_subset(VertexSet::full(m)) {
        return Err(Error::VertexOutOfRange { vertex: i.max_vertex().unwrap(), m });
    }
    reorder(f, i, m)
}

fn reorder(f: VertexSet, i: VertexSet, m: usize) -> Result<Permutation> {
    let mut images: Vec<usize> = (1..=m).collect();
    let targets = i.difference(f).iter().chain(f.iter());
    for (source, target) in i.iter().zip(targets) {
        images[source - 1] = target;
    }
    Permutation::new(images)
}

/// `σ_i = σ([m] - i, [m])`. For `m = 1` the set `[m] - i` is empty and the
/// same reordering rule gives the identity.
pub fn sigma_i(i: usize, m: usize) -> Result<Permutation> {
    if i == 0 || i > m {
        return Err(Error::VertexOutOfRange { vertex: i, m });
    }
    let full = VertexSet::full(m);
    reorder(full.without(i), full, m)
}
