//! The free graded Lie algebra inside the integral tensor algebra, used as an
//! independent check of the graded Jacobi identity for Whitehead products.
//!
//! Whitehead products of classes in `π_p, π_q, π_r` are translated to graded
//! commutators of generators in degrees `p-1, q-1, r-1` by a sign dictionary.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::sign_poly::SignPolynomial;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GradedGenerator {
    name: String,
    degree: u32,
}

impl GradedGenerator {
    pub fn new(name: impl Into<String>, degree: u32) -> Result<Self> {
        if degree == 0 {
            return Err(Error::Parameter("generator degrees must be at least 1".into()));
        }
        Ok(GradedGenerator { name: name.into(), degree })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }
}

type Word = Vec<GradedGenerator>;

fn word_degree(w: &Word) -> u64 {
    w.iter().map(|g| g.degree as u64).sum()
}

/// An integral combination of tensor words; zero coefficients are never stored.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct GradedLieElement {
    terms: BTreeMap<Word, i64>,
}

impl GradedLieElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn generator(g: &GradedGenerator) -> Self {
        Self::word(vec![g.clone()], 1)
    }

    pub fn word(word: Vec<GradedGenerator>, coefficient: i64) -> Self {
        let mut out = Self::zero();
        out.add_term(word, coefficient);
        out
    }

    fn add_term(&mut self, word: Word, coefficient: i64) {
        if coefficient == 0 {
            return;
        }
        match self.terms.entry(word) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += coefficient;
                if *e.get() == 0 {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                e.insert(coefficient);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[GradedGenerator], i64)> {
        self.terms.iter().map(|(w, c)| (w.as_slice(), *c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// The common degree of all words; `Ok(None)` for zero.
    pub fn degree(&self) -> Result<Option<u64>> {
        let mut degrees = self.terms.keys().map(word_degree);
        match degrees.next() {
            None => Ok(None),
            Some(d) if degrees.all(|e| e == d) => Ok(Some(d)),
            Some(_) => Err(Error::Inhomogeneous),
        }
    }

    pub fn scale(&self, k: i64) -> Self {
        if k == 0 {
            return Self::zero();
        }
        GradedLieElement { terms: self.terms.iter().map(|(w, c)| (w.clone(), c * k)).collect() }
    }

    /// Concatenation product in the tensor algebra.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let mut w = a.clone();
                w.extend(b.iter().cloned());
                out.add_term(w, x * y);
            }
        }
        out
    }
}

impl Add for &GradedLieElement {
    type Output = GradedLieElement;

    fn add(self, rhs: &GradedLieElement) -> GradedLieElement {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), *c);
        }
        out
    }
}

impl Sub for &GradedLieElement {
    type Output = GradedLieElement;

    fn sub(self, rhs: &GradedLieElement) -> GradedLieElement {
        self + &rhs.scale(-1)
    }
}

impl Neg for &GradedLieElement {
    type Output = GradedLieElement;

    fn neg(self) -> GradedLieElement {
        self.scale(-1)
    }
}

impl fmt::Display for GradedLieElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (w, c)) in self.terms.iter().enumerate() {
            match (k, *c < 0) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if c.abs() != 1 {
                write!(f, "{}", c.abs())?;
            }
            for g in w {
                f.write_str(&g.name)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for GradedLieElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GradedLieElement({self})")
    }
}

fn sign(exponent: u64) -> i64 {
    if exponent % 2 == 0 { 1 } else { -1 }
}

/// The graded commutator `⟨x, y⟩ = xy - (-1)^{|x||y|} yx`.
pub fn bracket(x: &GradedLieElement, y: &GradedLieElement) -> Result<GradedLieElement> {
    let (Some(dx), Some(dy)) = (x.degree()?, y.degree()?) else {
        return Ok(GradedLieElement::zero());
    };
    Ok(&x.mul(y) - &y.mul(x).scale(sign(dx * dy)))
}

/// `(-1)^{|a||c|}⟨a,⟨b,c⟩⟩ + (-1)^{|b||a|}⟨b,⟨c,a⟩⟩ + (-1)^{|c||b|}⟨c,⟨a,b⟩⟩`.
pub fn graded_jacobi_residual(
    a: &GradedLieElement,
    b: &GradedLieElement,
    c: &GradedLieElement,
) -> Result<GradedLieElement> {
    let deg = |x: &GradedLieElement| x.degree().map(|d| d.unwrap_or(0));
    let (da, db, dc) = (deg(a)?, deg(b)?, deg(c)?);
    let t1 = bracket(a, &bracket(b, c)?)?.scale(sign(da * dc));
    let t2 = bracket(b, &bracket(c, a)?)?.scale(sign(db * da));
    let t3 = bracket(c, &bracket(a, b)?)?.scale(sign(dc * db));
    Ok(&(&t1 + &t2) + &t3)
}

/// A dictionary `λ[u, v] = (-1)^{ε(u,v)} ⟨λu, λv⟩` with
/// `ε(u,v) = c0 + c_u·deg u + c_v·deg v + c_uv·deg u·deg v`, degrees taken in
/// homotopy (before desuspension).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SignConvention {
    pub c0: bool,
    pub c_u: bool,
    pub c_v: bool,
    pub c_uv: bool,
}

impl SignConvention {
    /// `ε(u, v) = deg u`.
    pub const SAMELSON: SignConvention = SignConvention { c0: false, c_u: true, c_v: false, c_uv: false };
    /// `ε = 0`: brackets translate to commutators with no extra sign.
    pub const PLAIN: SignConvention = SignConvention { c0: false, c_u: false, c_v: false, c_uv: false };

    pub fn all() -> impl Iterator<Item = SignConvention> {
        (0..16u8).map(|b| SignConvention { c0: b & 1 != 0, c_u: b & 2 != 0, c_v: b & 4 != 0, c_uv: b & 8 != 0 })
    }

    pub fn exponent(&self, du: u64, dv: u64) -> u64 {
        self.c0 as u64 + self.c_u as u64 * du + self.c_v as u64 * dv + self.c_uv as u64 * du * dv
    }

    pub fn exponent_poly(&self, du: &SignPolynomial, dv: &SignPolynomial) -> SignPolynomial {
        let mut e = SignPolynomial::constant(self.c0);
        if self.c_u {
            e = &e + du;
        }
        if self.c_v {
            e = &e + dv;
        }
        if self.c_uv {
            e = &e + &(du * dv);
        }
        e
    }
}

impl fmt::Display for SignConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let u = SignPolynomial::var(0);
        let v = SignPolynomial::var(1);
        let e = self.exponent_poly(&u, &v).to_string().replace('p', "|u|").replace('q', "|v|");
        write!(f, "ε(u,v) = {e}")
    }
}

fn check_pqr(p: u32, q: u32, r: u32) -> Result<()> {
    if p < 2 || q < 2 || r < 2 {
        return Err(Error::Parameter(format!("p, q, r must be at least 2, got ({p}, {q}, {r})")));
    }
    Ok(())
}

/// `(-1)^{p(r-1)}[α,[β,γ]] + (-1)^{q(p-1)}[β,[γ,α]] + (-1)^{r(q-1)}[γ,[α,β]]`
/// translated with the Samelson dictionary. It is zero exactly when the
/// identity holds in the free model.
pub fn whitehead_jacobi_residual(p: u32, q: u32, r: u32) -> Result<GradedLieElement> {
    whitehead_jacobi_residual_with(p, q, r, SignConvention::SAMELSON)
}

pub fn whitehead_jacobi_residual_with(p: u32, q: u32, r: u32, conv: SignConvention) -> Result<GradedLieElement> {
    check_pqr(p, q, r)?;
    let a = GradedLieElement::generator(&GradedGenerator::new("a", p - 1)?);
    let b = GradedLieElement::generator(&GradedGenerator::new("b", q - 1)?);
    let c = GradedLieElement::generator(&GradedGenerator::new("c", r - 1)?);
    let (p, q, r) = (p as u64, q as u64, r as u64);
    // [x,[y,z]] with homotopy degrees dx, dy, dz; [y,z] has degree dy + dz - 1
    let term = |corollary: u64, x: &GradedLieElement, dx: u64, y: &GradedLieElement, dy: u64, z: &GradedLieElement, dz: u64| {
        let dictionary = conv.exponent(dx, dy + dz - 1) + conv.exponent(dy, dz);
        Ok::<_, Error>(bracket(x, &bracket(y, z)?)?.scale(sign(corollary + dictionary)))
    };
    let t1 = term(p * (r - 1), &a, p, &b, q, &c, r)?;
    let t2 = term(q * (p - 1), &b, q, &c, r, &a, p)?;
    let t3 = term(r * (q - 1), &c, r, &a, p, &b, q)?;
    Ok(&(&t1 + &t2) + &t3)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JacobiSweepEntry {
    pub pqr: [u32; 3],
    pub residual_zero: bool,
}

/// `whitehead_jacobi_residual` for every `(p, q, r)` in `[lo, hi]^3`.
pub fn jacobi_sweep(lo: u32, hi: u32, conv: SignConvention) -> Result<Vec<JacobiSweepEntry>> {
    check_pqr(lo, lo, lo)?;
    let triples: Vec<[u32; 3]> = (lo..=hi)
        .flat_map(|p| (lo..=hi).flat_map(move |q| (lo..=hi).map(move |r| [p, q, r])))
        .collect();
    triples
        .par_iter()
        .map(|&[p, q, r]| {
            Ok(JacobiSweepEntry { pqr: [p, q, r], residual_zero: whitehead_jacobi_residual_with(p, q, r, conv)?.is_zero() })
        })
        .collect()
}

/// Conventions from the 16-element family for which the residual vanishes on
/// all of `[lo, hi]^3`.
pub fn consistent_conventions(lo: u32, hi: u32) -> Result<Vec<SignConvention>> {
    let mut out = Vec::new();
    for conv in SignConvention::all() {
        if jacobi_sweep(lo, hi, conv)?.iter().all(|e| e.residual_zero) {
            out.push(conv);
        }
    }
    Ok(out)
}

/// For each of the three terms, the exponent of
/// (corollary sign · dictionary sign) / (graded Jacobi sign) as a polynomial in
/// the parities of `p, q, r`. The identity transfers when all three agree.
pub fn ratio_exponents(conv: SignConvention) -> [SignPolynomial; 3] {
    let one = SignPolynomial::one();
    let (p, q, r) = (SignPolynomial::var(0), SignPolynomial::var(1), SignPolynomial::var(2));
    // desuspended degrees
    let (a, b, c) = (&p + &one, &q + &one, &r + &one);
    let ratio = |corollary: SignPolynomial, x: &SignPolynomial, y: &SignPolynomial, z: &SignPolynomial, graded: SignPolynomial| {
        let inner = &(y + z) + &one;
        let dictionary = &conv.exponent_poly(x, &inner) + &conv.exponent_poly(y, z);
        &(&corollary + &dictionary) + &graded
    };
    [
        ratio(&p * &(&r + &one), &p, &q, &r, &a * &c),
        ratio(&q * &(&p + &one), &q, &r, &p, &b * &a),
        ratio(&r * &(&q + &one), &r, &p, &q, &c * &b),
    ]
}
