//! Symbolic iterated Whitehead products describing the pinch map
//! `Z_K(CX, X) -> Z_K(ΣX, *)` on each wedge summand of a shifted complex.
//!
//! On the summand `(I, F)` the pinch map is
//!
//! ```text
//! [e_{i_1}, [ ... [e_{i_l}, j∘ω_F] ... ]] ∘ (sgn σ(F,I) ∧ σ̂(F,I))
//! ```
//!
//! with `I - F = {i_1 < ... < i_l}`, `ω_F` the higher Whitehead product over
//! `∂Δ^F` and `j` the inclusion of the fat wedge on `F`.

use std::fmt;

use serde::Serialize;

use crate::complex::SimplicialComplex;
use crate::decomposition::{decompose, minimal_nonfaces_of_induced, summand_dimension, SphereAssignment, WedgeSummand};
use crate::error::{Error, Result};
use crate::permutation::{sigma_i, sigma_permutation, Permutation};
use crate::vertex::VertexSet;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum WhiteheadExpr {
    /// The inclusion `e_i: ΣX_i -> Z_K(ΣX, *)`.
    Gen(usize),
    /// `ω_F`, the `(|F| - 1)`-st order Whitehead product of the `e_i`, `i ∈ F`.
    HigherProduct(VertexSet),
    Bracket(Box<WhiteheadExpr>, Box<WhiteheadExpr>),
    /// `j ∘ inner`, where `j` includes into the polyhedral product over `ambient`.
    Inclusion { ambient: VertexSet, inner: Box<WhiteheadExpr> },
    /// `inner ∘ (sign ∧ perm^)`.
    PermTwist { sign: i8, perm: Permutation, inner: Box<WhiteheadExpr> },
}

use WhiteheadExpr::*;

impl WhiteheadExpr {
    pub fn bracket(a: WhiteheadExpr, b: WhiteheadExpr) -> Self {
        Bracket(Box::new(a), Box::new(b))
    }

    pub fn include(ambient: VertexSet, inner: WhiteheadExpr) -> Self {
        Inclusion { ambient, inner: Box::new(inner) }
    }

    pub fn twist(sign: i8, perm: Permutation, inner: WhiteheadExpr) -> Self {
        PermTwist { sign, perm, inner: Box::new(inner) }
    }

    /// Replaces every `ω_{a,b}` by the ordinary bracket `[e_a, e_b]`.
    pub fn expand_binary_products(&self) -> WhiteheadExpr {
        match self {
            HigherProduct(f) if f.len() == 2 => {
                let v = f.to_vec();
                WhiteheadExpr::bracket(Gen(v[0]), Gen(v[1]))
            }
            Gen(_) | HigherProduct(_) => self.clone(),
            Bracket(a, b) => WhiteheadExpr::bracket(a.expand_binary_products(), b.expand_binary_products()),
            Inclusion { ambient, inner } => WhiteheadExpr::include(*ambient, inner.expand_binary_products()),
            PermTwist { sign, perm, inner } => {
                WhiteheadExpr::twist(*sign, perm.clone(), inner.expand_binary_products())
            }
        }
    }

    /// Hoists top-level twists into a coefficient and a single permutation.
    pub fn normalize(&self, coefficient: i64) -> NormalForm {
        let mut coefficient = coefficient;
        let mut perm: Option<Permutation> = None;
        let mut body = self;
        while let PermTwist { sign, perm: p, inner } = body {
            coefficient *= *sign as i64;
            // (x ∘ p_inner) ∘ p_outer = x ∘ (p_inner ∘ p_outer)
            perm = Some(match perm {
                None => p.clone(),
                Some(outer) => p.compose(&outer).unwrap_or(outer),
            });
            body = inner;
        }
        NormalForm { coefficient, perm: perm.filter(|p| !p.is_identity()), body: body.clone() }
    }

    fn fmt_inner(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gen(i) => write!(f, "e{i}"),
            HigherProduct(set) => write!(f, "ω{set}"),
            Bracket(a, b) => {
                f.write_str("[")?;
                a.fmt_inner(f)?;
                f.write_str(", ")?;
                b.fmt_inner(f)?;
                f.write_str("]")
            }
            Inclusion { ambient, inner } => {
                // Including ω_F into the complex on F itself is the identity.
                if !matches!(inner.as_ref(), HigherProduct(s) if s == ambient) {
                    f.write_str("j∘")?;
                }
                inner.fmt_inner(f)
            }
            PermTwist { sign, perm, inner } => {
                if *sign < 0 {
                    f.write_str("-")?;
                }
                inner.fmt_inner(f)?;
                if !perm.is_identity() {
                    write!(f, " ∘ (1∧σ̂{perm})")?;
                }
                Ok(())
            }
        }
    }
}

impl fmt::Display for WhiteheadExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_inner(f)
    }
}

/// An expression with its top-level twists folded into `coefficient` and `perm`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalForm {
    pub coefficient: i64,
    /// `None` when the combined permutation is the identity.
    pub perm: Option<Permutation>,
    pub body: WhiteheadExpr,
}

impl NormalForm {
    /// The structured form of a right-nested chain `[e_{i_1}, [..., ω_F]]`.
    pub fn as_chain(&self) -> Option<ChainForm> {
        let mut chain = Vec::new();
        let mut node = &self.body;
        loop {
            match node {
                Bracket(a, b) => match a.as_ref() {
                    Gen(i) => {
                        chain.push(*i);
                        node = b;
                    }
                    _ => return None,
                },
                Inclusion { inner, .. } => node = inner,
                HigherProduct(f) => {
                    return Some(ChainForm {
                        sign: self.coefficient,
                        perm: self.perm.as_ref().map(|p| p.images().to_vec()),
                        chain,
                        omega: *f,
                    })
                }
                _ => return None,
            }
        }
    }
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.coefficient {
            1 => {}
            -1 => f.write_str("-")?,
            c => write!(f, "{c}·")?,
        }
        write!(f, "{}", self.body)?;
        if let Some(p) = &self.perm {
            write!(f, " ∘ (1∧σ̂{p})")?;
        }
        Ok(())
    }
}

/// Structured rendering `{"sign", "perm", "chain", "omega"}`; `perm` is null
/// for the identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChainForm {
    pub sign: i64,
    pub perm: Option<Vec<usize>>,
    pub chain: Vec<usize>,
    pub omega: VertexSet,
}

/// Source-sphere dimension of an expression when `X_i = S^{n_i}`.
///
/// `e_i` has source `ΣX_i`; `ω_F` has source `Σ|∂Δ^F| ∧ X^F`; a bracket of
/// maps from `S^a` and `S^b` has source `S^{a+b-1}`; inclusions and twists
/// keep the source dimension.
pub fn degree_of(expr: &WhiteheadExpr, spheres: &SphereAssignment) -> Result<i64> {
    let dim = |v: usize| {
        spheres
            .get(v)
            .map(|n| n as i64)
            .ok_or_else(|| Error::MalformedExpr(format!("no sphere dimension for vertex {v}")))
    };
    match expr {
        Gen(i) => Ok(dim(*i)? + 1),
        HigherProduct(f) => {
            if f.len() < 2 {
                return Err(Error::MalformedExpr(format!("ω{f} needs at least two vertices")));
            }
            let smash: i64 = f.iter().map(dim).sum::<Result<i64>>()?;
            Ok(f.len() as i64 - 2 + 1 + smash)
        }
        Bracket(a, b) => Ok(degree_of(a, spheres)? + degree_of(b, spheres)? - 1),
        Inclusion { inner, .. } => degree_of(inner, spheres),
        PermTwist { sign, inner, .. } => {
            if sign.abs() != 1 {
                return Err(Error::MalformedExpr(format!("twist sign {sign}")));
            }
            degree_of(inner, spheres)
        }
    }
}

/// The right-nested bracket `[e_{i_1}, [... [e_{i_l}, j∘ω_F]]] ∘ (sgn σ ∧ σ̂)`
/// for `F ⊆ I ⊆ [m]`, without checking that `(I, F)` is a summand of any
/// particular complex.
pub fn pinch_formula(m: usize, s: &WedgeSummand) -> Result<WhiteheadExpr> {
    if s.nonface.len() < 2 {
        return Err(Error::BoundaryTooSmall { size: s.nonface.len() });
    }
    let sigma = sigma_permutation(s.nonface, s.index_set, m)?;
    let core = WhiteheadExpr::include(VertexSet::full(m), HigherProduct(s.nonface));
    let chain = s
        .index_set
        .difference(s.nonface)
        .iter()
        .rev()
        .fold(core, |acc, i| WhiteheadExpr::bracket(Gen(i), acc));
    Ok(WhiteheadExpr::twist(sigma.sign(), sigma, chain))
}

/// The pinch map restricted to the summand `s` of the shifted complex `k`.
pub fn pinch_expression(k: &SimplicialComplex, s: &WedgeSummand) -> Result<WhiteheadExpr> {
    if k.has_ghost_vertices() {
        return Err(Error::GhostVertex { vertex: k.ghost_vertices()[0], m: k.m() });
    }
    if !k.is_shifted() {
        return Err(Error::NotShifted);
    }
    let is_summand = !s.index_set.is_empty()
        && s.index_set.is_subset(VertexSet::full(k.m()))
        && minimal_nonfaces_of_induced(k, s.index_set)?.contains(&s.nonface);
    if !is_summand {
        return Err(Error::NotASummand { i: s.index_set.to_string(), f: s.nonface.to_string() });
    }
    pinch_formula(k.m(), s)
}

/// One expression per summand, in [`decompose`] order. Each expression's
/// source dimension is checked against the summand's sphere dimension.
pub fn full_pinch_map(
    k: &SimplicialComplex,
    spheres: &SphereAssignment,
) -> Result<Vec<(WedgeSummand, WhiteheadExpr)>> {
    decompose(k)?
        .into_iter()
        .map(|s| {
            let expr = pinch_expression(k, &s)?;
            let expr_dim = degree_of(&expr, spheres)?;
            let summand_dim = summand_dimension(&s, spheres);
            if expr_dim != summand_dim {
                return Err(Error::DegreeMismatch {
                    i: s.index_set.to_string(),
                    f: s.nonface.to_string(),
                    expr: expr_dim,
                    summand: summand_dim,
                });
            }
            Ok((s, expr))
        })
        .collect()
}

/// A formal integer combination of expressions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormalSum {
    pub terms: Vec<(i64, WhiteheadExpr)>,
}

impl FormalSum {
    pub fn normalized_terms(&self) -> Vec<NormalForm> {
        self.terms.iter().map(|(c, e)| e.normalize(*c)).collect()
    }
}

impl fmt::Display for FormalSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, (c, e)) in self.terms.iter().enumerate() {
            let sign = if *c < 0 { "-" } else { "+" };
            if k == 0 {
                if *c < 0 {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            if c.abs() != 1 {
                write!(f, "{}·", c.abs())?;
            }
            write!(f, "{e}")?;
        }
        f.write_str(" = 0")
    }
}

/// The higher Jacobi identity on the `(m-3)`-skeleton of `Δ^[m]`:
///
/// ```text
/// sum_{i=1}^{m} (-1)^{i-1} [e_i, j_i∘ω_{[m]-i}] ∘ (1∧σ̂_i) = 0
/// ```
///
/// with `σ_i = σ([m] - i, [m])`.
pub fn jacobi_sum(m: usize) -> Result<FormalSum> {
    if m < 3 {
        return Err(Error::Parameter(format!("the higher Jacobi identity needs m >= 3, got {m}")));
    }
    let full = VertexSet::full(m);
    let terms = (1..=m)
        .map(|i| {
            let coefficient = if (i - 1) % 2 == 0 { 1 } else { -1 };
            let body = WhiteheadExpr::bracket(
                Gen(i),
                WhiteheadExpr::include(full, HigherProduct(full.without(i))),
            );
            Ok((coefficient, WhiteheadExpr::twist(1, sigma_i(i, m)?, body)))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(FormalSum { terms })
}

/// Compares each term of [`jacobi_sum`] with the pinch expression of the
/// summand `([m], [m] - i)` of `(Δ^[m])^{m-3}`. For `i = m` the set `[m-1]`
/// misses the top vertex, so that term is compared with the same formula
/// built directly from `σ([m-1], [m])`.
pub fn jacobi_terms_match_pinch(m: usize) -> Result<Vec<bool>> {
    let sum = jacobi_sum(m)?;
    let k = SimplicialComplex::full_simplex(m)?.skeleton(m as i64 - 3);
    let full = VertexSet::full(m);
    sum.terms
        .iter()
        .enumerate()
        .map(|(idx, (c, term))| {
            let i = idx + 1;
            let s = WedgeSummand { index_set: full, nonface: full.without(i) };
            let pinch = if i < m { pinch_expression(&k, &s)? } else { pinch_formula(m, &s)? };
            Ok(term.normalize(*c) == pinch.normalize(1))
        })
        .collect()
}
