//! Exponents of `(-1)` as polynomials over the two-element field.
//!
//! Only the parity of an exponent matters, and degree variables enter only
//! through their parities, so `x^2 = x`: every polynomial reduces to a sum
//! of square-free monomials. That representation is canonical, so equality
//! of polynomials is equality of the sign functions they define.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, Mul};

/// Default variable names; index `i` prints as `VARIABLE_NAMES[i]`.
pub const VARIABLE_NAMES: [&str; 8] = ["p", "q", "r", "s", "t", "u", "v", "w"];

/// A square-free polynomial over GF(2). Each monomial is a bitmask of
/// variable indices; the empty mask is the constant `1`.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignPolynomial {
    monomials: BTreeSet<u32>,
}

impl SignPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(true)
    }

    pub fn constant(bit: bool) -> Self {
        let mut monomials = BTreeSet::new();
        if bit {
            monomials.insert(0);
        }
        SignPolynomial { monomials }
    }

    /// The variable with index `i` (`p = 0`, `q = 1`, `r = 2`, ...).
    pub fn var(i: usize) -> Self {
        assert!(i < 32, "at most 32 variables");
        SignPolynomial { monomials: [1u32 << i].into_iter().collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn monomials(&self) -> impl Iterator<Item = u32> + '_ {
        self.monomials.iter().copied()
    }

    /// Value at a parity vector (`parities[i]` is the parity of variable `i`).
    pub fn eval(&self, parities: &[bool]) -> bool {
        self.monomials
            .iter()
            .filter(|&&mono| {
                (0..32).filter(|b| mono & (1 << b) != 0).all(|b| parities.get(b).copied().unwrap_or(false))
            })
            .count()
            % 2
            == 1
    }

    /// `(-1)^self` at a parity vector.
    pub fn sign_at(&self, parities: &[bool]) -> i64 {
        if self.eval(parities) { -1 } else { 1 }
    }
}

impl Add for &SignPolynomial {
    type Output = SignPolynomial;

    fn add(self, rhs: &SignPolynomial) -> SignPolynomial {
        let monomials = self.monomials.symmetric_difference(&rhs.monomials).copied().collect();
        SignPolynomial { monomials }
    }
}

impl Add for SignPolynomial {
    type Output = SignPolynomial;

    fn add(self, rhs: SignPolynomial) -> SignPolynomial {
        &self + &rhs
    }
}

impl Mul for &SignPolynomial {
    type Output = SignPolynomial;

    fn mul(self, rhs: &SignPolynomial) -> SignPolynomial {
        let mut monomials = BTreeSet::new();
        for a in &self.monomials {
            for b in &rhs.monomials {
                let product = a | b;
                if !monomials.remove(&product) {
                    monomials.insert(product);
                }
            }
        }
        SignPolynomial { monomials }
    }
}

impl Mul for SignPolynomial {
    type Output = SignPolynomial;

    fn mul(self, rhs: SignPolynomial) -> SignPolynomial {
        &self * &rhs
    }
}

impl fmt::Display for SignPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.monomials.is_empty() {
            return f.write_str("0");
        }
        // Higher-degree monomials first, constant last: "pr + p + 1".
        let mut monos: Vec<Vec<usize>> = self
            .monomials
            .iter()
            .map(|&mono| (0..32).filter(|b| mono & (1 << b) != 0).collect())
            .collect();
        monos.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
        let terms: Vec<String> = monos
            .iter()
            .map(|vars| {
                if vars.is_empty() {
                    return "1".to_string();
                }
                vars.iter()
                    .map(|&b| VARIABLE_NAMES.get(b).map_or_else(|| format!("x{b}"), |s| s.to_string()))
                    .collect()
            })
            .collect();
        f.write_str(&terms.join(" + "))
    }
}

impl fmt::Debug for SignPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SignPolynomial({self})")
    }
}
