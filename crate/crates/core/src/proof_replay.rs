//! Replays the sign arithmetic that turns the three-term consequence of the
//! higher Jacobi identity into the classical graded Jacobi identity for
//! Whitehead products of `α ∈ π_p`, `β ∈ π_q`, `γ ∈ π_r`.
//!
//! Terms are double brackets `[x, [y, z]]` with coefficient `(-1)^e`, where
//! `e` is a [`SignPolynomial`] in the degree variables `p, q, r`.

use std::fmt;

use serde::Serialize;

use crate::sign_poly::SignPolynomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Symbol {
    Alpha,
    Beta,
    Gamma,
}

impl Symbol {
    pub const ALL: [Symbol; 3] = [Symbol::Alpha, Symbol::Beta, Symbol::Gamma];

    /// Degree variable: `p` for α, `q` for β, `r` for γ.
    pub fn degree(self) -> SignPolynomial {
        SignPolynomial::var(self as usize)
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Symbol::Alpha => "α",
            Symbol::Beta => "β",
            Symbol::Gamma => "γ",
        })
    }
}

/// `(-1)^exponent [outer, [inner.0, inner.1]]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedTerm {
    pub exponent: SignPolynomial,
    pub outer: Symbol,
    pub inner: (Symbol, Symbol),
}

impl SignedTerm {
    pub fn new(exponent: SignPolynomial, outer: Symbol, inner: (Symbol, Symbol)) -> Self {
        SignedTerm { exponent, outer, inner }
    }

    fn shape(&self) -> (Symbol, Symbol, Symbol) {
        (self.outer, self.inner.0, self.inner.1)
    }

    /// The sign at concrete parities of `(p, q, r)`.
    pub fn sign_at(&self, parities: &[bool; 3]) -> i64 {
        self.exponent.sign_at(parities)
    }
}

impl fmt::Display for SignedTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(-1)^({}) [{}, [{}, {}]]", self.exponent, self.outer, self.inner.0, self.inner.1)
    }
}

/// The knobs of the derivation. The defaults are the steps of the proof; the
/// mutation tests change one of them and expect the replay to fail.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReplayConfig {
    /// `e` in the rewrite `[α, γ] = (-1)^e [γ, α]`.
    pub antisymmetry_exponent: SignPolynomial,
    /// The whole identity is multiplied by `(-1)^multiplier`.
    pub multiplier: SignPolynomial,
}

impl Default for ReplayConfig {
    fn default() -> Self {
        let pr = &Symbol::Alpha.degree() * &Symbol::Gamma.degree();
        ReplayConfig { antisymmetry_exponent: &pr + &SignPolynomial::one(), multiplier: pr }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Replay {
    pub intermediate: Vec<SignedTerm>,
    pub multiplied: Vec<SignedTerm>,
    pub rewritten: Vec<SignedTerm>,
    pub target: Vec<SignedTerm>,
    pub ok: bool,
}

fn p() -> SignPolynomial {
    Symbol::Alpha.degree()
}
fn q() -> SignPolynomial {
    Symbol::Beta.degree()
}
fn r() -> SignPolynomial {
    Symbol::Gamma.degree()
}

/// `(-1)^p [α,[β,γ]] - (-1)^{q+pq} [β,[α,γ]] + (-1)^{r+(p+q)r} [γ,[α,β]] = 0`,
/// the higher Jacobi identity for `m = 3` applied to `α, β, γ`.
pub fn intermediate_identity() -> Vec<SignedTerm> {
    use Symbol::*;
    let one = SignPolynomial::one();
    vec![
        SignedTerm::new(p(), Alpha, (Beta, Gamma)),
        SignedTerm::new(&one + &(&q() + &(&p() * &q())), Beta, (Alpha, Gamma)),
        SignedTerm::new(&r() + &(&(&p() + &q()) * &r()), Gamma, (Alpha, Beta)),
    ]
}

/// `(-1)^{p(r-1)} [α,[β,γ]] + (-1)^{q(p-1)} [β,[γ,α]] + (-1)^{r(q-1)} [γ,[α,β]] = 0`.
pub fn target_identity() -> Vec<SignedTerm> {
    use Symbol::*;
    let one = SignPolynomial::one();
    // over GF(2), x - 1 = x + 1
    vec![
        SignedTerm::new(&p() * &(&r() + &one), Alpha, (Beta, Gamma)),
        SignedTerm::new(&q() * &(&p() + &one), Beta, (Gamma, Alpha)),
        SignedTerm::new(&r() * &(&q() + &one), Gamma, (Alpha, Beta)),
    ]
}

pub fn replay(cfg: &ReplayConfig) -> Replay {
    let intermediate = intermediate_identity();
    let multiplied: Vec<SignedTerm> = intermediate
        .iter()
        .map(|t| SignedTerm { exponent: &t.exponent + &cfg.multiplier, ..t.clone() })
        .collect();
    let rewritten: Vec<SignedTerm> = multiplied
        .iter()
        .map(|t| {
            if t.inner == (Symbol::Alpha, Symbol::Gamma) {
                SignedTerm {
                    exponent: &t.exponent + &cfg.antisymmetry_exponent,
                    outer: t.outer,
                    inner: (Symbol::Gamma, Symbol::Alpha),
                }
            } else {
                t.clone()
            }
        })
        .collect();
    let target = target_identity();
    let ok = same_terms(&rewritten, &target);
    Replay { intermediate, multiplied, rewritten, target, ok }
}

fn same_terms(a: &[SignedTerm], b: &[SignedTerm]) -> bool {
    let mut a: Vec<_> = a.iter().map(|t| (t.shape(), t.exponent.clone())).collect();
    let mut b: Vec<_> = b.iter().map(|t| (t.shape(), t.exponent.clone())).collect();
    a.sort();
    b.sort();
    a == b
}

pub fn corollary_proof_check() -> bool {
    corollary_proof_check_with(&ReplayConfig::default())
}

pub fn corollary_proof_check_with(cfg: &ReplayConfig) -> bool {
    replay(cfg).ok
}

/// The same replay with every exponent evaluated at each of the eight parity
/// vectors of `(p, q, r)` before comparing.
pub fn corollary_proof_check_by_parity(cfg: &ReplayConfig) -> bool {
    let run = replay(cfg);
    (0..8u8).all(|bits| {
        let parities = [bits & 1 != 0, bits & 2 != 0, bits & 4 != 0];
        let signs = |terms: &[SignedTerm]| {
            let mut v: Vec<_> = terms.iter().map(|t| (t.shape(), t.sign_at(&parities))).collect();
            v.sort();
            v
        };
        signs(&run.rewritten) == signs(&run.target)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn replay_passes() {
        assert!(corollary_proof_check());
        assert!(corollary_proof_check_by_parity(&ReplayConfig::default()));
    }

    #[test]
    fn rewritten_exponents() {
        let run = replay(&ReplayConfig::default());
        let shown: Vec<String> = run.rewritten.iter().map(|t| t.exponent.to_string()).collect();
        assert_eq!(shown, vec!["pr + p", "pq + q", "qr + r"]);
        assert_eq!(run.rewritten[1].inner, (Symbol::Gamma, Symbol::Alpha));
    }

    #[test]
    fn flipped_antisymmetry_sign_fails() {
        let cfg = ReplayConfig {
            antisymmetry_exponent: &p() * &r(),
            ..ReplayConfig::default()
        };
        assert!(!corollary_proof_check_with(&cfg));
        assert!(!corollary_proof_check_by_parity(&cfg));
    }

    #[test]
    fn missing_multiplier_fails() {
        let cfg = ReplayConfig { multiplier: SignPolynomial::zero(), ..ReplayConfig::default() };
        assert!(!corollary_proof_check_with(&cfg));
        assert!(!corollary_proof_check_by_parity(&cfg));
        let cfg = ReplayConfig { multiplier: &(&p() * &r()) + &SignPolynomial::one(), ..ReplayConfig::default() };
        assert!(!corollary_proof_check_with(&cfg));
    }

    #[test]
    fn symbolic_and_parity_checks_agree_on_all_small_configs() {
        // every multiplier and rewrite exponent drawn from span{1, p, r, pr}
        let basis = [SignPolynomial::one(), p(), r(), &p() * &r()];
        let span: Vec<SignPolynomial> = (0..16u8)
            .map(|mask| {
                (0..4).filter(|b| mask & (1 << b) != 0).fold(SignPolynomial::zero(), |acc, b| &acc + &basis[b])
            })
            .collect();
        let mut passing = 0;
        for a in &span {
            for m in &span {
                let cfg = ReplayConfig { antisymmetry_exponent: a.clone(), multiplier: m.clone() };
                let symbolic = corollary_proof_check_with(&cfg);
                assert_eq!(symbolic, corollary_proof_check_by_parity(&cfg));
                passing += symbolic as usize;
            }
        }
        assert_eq!(passing, 1);
    }
}
