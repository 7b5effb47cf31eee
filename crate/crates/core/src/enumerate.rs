//! Exhaustive enumeration of shifted complexes on small vertex sets and a
//! seeded random generator for larger corpora.

use std::collections::{HashMap, HashSet};

use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::vertex::{VertexSet, MAX_ENUMERATION_M};

/// Largest `m` accepted by [`all_shifted_complexes`].
pub const MAX_EXHAUSTIVE_M: usize = 7;

/// Whether vertices of `[m]` missing from the complex are tolerated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Ghosts {
    Allow,
    Forbid,
}

/// Every shifted complex on `[m]` (the one with no faces included when
/// ghosts are allowed).
///
/// A shifted complex is a down-set of the order generated by `H -> H - v`
/// and `H -> (H - i) ∪ j` for `i < j`, `j ∉ H`; this walks down-sets along a
/// linear extension of that order.
pub fn all_shifted_complexes(m: usize, ghosts: Ghosts) -> Result<Vec<SimplicialComplex>> {
    if m == 0 || m > MAX_EXHAUSTIVE_M {
        return Err(Error::EnumerationGuard { m, max: MAX_EXHAUSTIVE_M });
    }
    let mut order: Vec<VertexSet> = VertexSet::full(m).subsets().collect();
    order.sort_by_key(|s| (s.len(), std::cmp::Reverse(s.iter().sum::<usize>()), *s));
    let position: HashMap<VertexSet, usize> =
        order.iter().enumerate().map(|(i, &s)| (s, i)).collect();
    let below: Vec<Vec<usize>> = order
        .iter()
        .map(|&h| {
            let mut lower: Vec<usize> = h.facets_of_boundary().map(|g| position[&g]).collect();
            for i in h.iter() {
                for j in (i + 1..=m).filter(|&j| !h.contains(j)) {
                    lower.push(position[&h.without(i).with(j)]);
                }
            }
            lower
        })
        .collect();

    let mut out = Vec::new();
    let mut chosen = vec![false; order.len()];
    walk_downsets(0, &order, &below, &mut chosen, &mut |chosen| {
        let faces: HashSet<VertexSet> =
            order.iter().zip(chosen).filter(|(_, &c)| c).map(|(&s, _)| s).collect();
        let k = SimplicialComplex::from_closed_faces(m, faces);
        if ghosts == Ghosts::Allow || !k.has_ghost_vertices() {
            out.push(k);
        }
    });
    Ok(out)
}

fn walk_downsets(
    idx: usize,
    order: &[VertexSet],
    below: &[Vec<usize>],
    chosen: &mut [bool],
    emit: &mut dyn FnMut(&[bool]),
) {
    if idx == order.len() {
        emit(chosen);
        return;
    }
    walk_downsets(idx + 1, order, below, chosen, emit);
    if below[idx].iter().all(|&b| chosen[b]) {
        chosen[idx] = true;
        walk_downsets(idx + 1, order, below, chosen, emit);
        chosen[idx] = false;
    }
}

/// Canonical encoding used to deduplicate complexes.
pub fn canonical_key(k: &SimplicialComplex) -> (usize, Vec<u64>) {
    (k.m(), k.facets().iter().map(|f| f.bits()).collect())
}

/// One random ghost-free shifted complex on `[m]`: all vertices plus one to
/// three random facets, closed under shifting.
pub fn random_shifted_complex(rng: &mut ChaCha8Rng, m: usize) -> Result<SimplicialComplex> {
    let mut seeds: Vec<VertexSet> = (1..=m).map(VertexSet::singleton).collect();
    let extra = rng.random_range(1..=3usize);
    for _ in 0..extra {
        let size = rng.random_range(1..=m);
        let mut pool: Vec<usize> = (1..=m).collect();
        let mut facet = VertexSet::EMPTY;
        for _ in 0..size {
            let pick = rng.random_range(0..pool.len());
            facet = facet.with(pool.swap_remove(pick));
        }
        seeds.push(facet);
    }
    Ok(SimplicialComplex::from_facets(m, seeds)?.shifted_closure())
}

fn check_corpus_m(m: usize) -> Result<()> {
    if m == 0 || m > MAX_ENUMERATION_M {
        return Err(Error::EnumerationGuard { m, max: MAX_ENUMERATION_M });
    }
    Ok(())
}

/// Up to this `m` corpora are drawn uniformly from the full enumeration.
pub const UNIFORM_CORPUS_M: usize = 6;

/// `size` distinct ghost-free shifted complexes on `[m]`, reproducible from `seed`.
///
/// For `m <= UNIFORM_CORPUS_M` this is a uniform sample without replacement;
/// above that, distinct closures of random seed facets.
pub fn generate_corpus(seed: u64, size: usize, m: usize) -> Result<Vec<SimplicialComplex>> {
    check_corpus_m(m)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    if m <= UNIFORM_CORPUS_M {
        let all = all_shifted_complexes(m, Ghosts::Forbid)?;
        if size > all.len() {
            return Err(Error::CorpusExhausted { found: all.len(), wanted: size, attempts: 0 });
        }
        let picks = rand::seq::index::sample(&mut rng, all.len(), size);
        return Ok(picks.into_iter().map(|i| all[i].clone()).collect());
    }
    let mut seen = HashSet::new();
    let mut out = Vec::with_capacity(size);
    let max_attempts = 200 * size + 1000;
    let mut attempts = 0;
    while out.len() < size {
        if attempts == max_attempts {
            return Err(Error::CorpusExhausted { found: out.len(), wanted: size, attempts });
        }
        attempts += 1;
        let k = random_shifted_complex(&mut rng, m)?;
        if seen.insert(canonical_key(&k)) {
            out.push(k);
        }
    }
    Ok(out)
}

/// `count` independent draws (duplicates possible), reproducible from `seed`.
pub fn sample_shifted(seed: u64, count: usize, m: usize) -> Result<Vec<SimplicialComplex>> {
    check_corpus_m(m)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_shifted_complex(&mut rng, m)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shifted_complex_counts() {
        assert_eq!(all_shifted_complexes(6, Ghosts::Forbid).unwrap().len(), 1054);
        // with ghosts (including the complex with no faces) / without
        let expected = [(1, 3, 1), (2, 5, 2), (3, 10, 5), (4, 27, 17), (5, 119, 92)];
        for (m, with, without) in expected {
            assert_eq!(all_shifted_complexes(m, Ghosts::Allow).unwrap().len(), with, "m = {m}");
            assert_eq!(all_shifted_complexes(m, Ghosts::Forbid).unwrap().len(), without, "m = {m}");
        }
    }

    #[test]
    fn enumerated_complexes_are_shifted_and_distinct() {
        let all = all_shifted_complexes(4, Ghosts::Allow).unwrap();
        assert!(all.iter().all(SimplicialComplex::is_shifted));
        let keys: HashSet<_> = all.iter().map(|k| (k.num_faces(), canonical_key(k))).collect();
        assert_eq!(keys.len(), all.len());
    }

    #[test]
    fn corpus_is_distinct_shifted_and_reproducible() {
        let a = generate_corpus(1, 10, 5).unwrap();
        let b = generate_corpus(1, 10, 5).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.len(), 10);
        assert!(a.iter().all(|k| k.is_shifted() && !k.has_ghost_vertices()));
        let keys: HashSet<_> = a.iter().map(canonical_key).collect();
        assert_eq!(keys.len(), 10);
        assert!(generate_corpus(1, 0, 5).unwrap().is_empty());
    }

    #[test]
    fn corpus_exhaustion_is_reported() {
        // only two ghost-free shifted complexes exist on [2]
        assert!(matches!(generate_corpus(3, 3, 2), Err(Error::CorpusExhausted { found: 2, .. })));
    }

    #[test]
    fn corpus_guard() {
        assert!(generate_corpus(1, 1, 17).is_err());
        assert!(all_shifted_complexes(8, Ghosts::Allow).is_err());
    }
}
