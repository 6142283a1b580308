use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::word::FreeWord;

/// A finitely supported integer combination of group elements.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct GroupRingElement {
    /// No zero coefficients.
    terms: BTreeMap<FreeWord, BigInt>,
}

impl GroupRingElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_word(FreeWord::identity())
    }

    pub fn from_word(w: FreeWord) -> Self {
        let mut e = Self::zero();
        e.add_term(w, BigInt::one());
        e
    }

    pub fn terms(&self) -> &BTreeMap<FreeWord, BigInt> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &FreeWord) -> BigInt {
        self.terms.get(w).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn add_term(&mut self, w: FreeWord, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(w.clone()).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&w);
        }
    }

    /// Sum of the coefficients.
    pub fn augmentation(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Apply a word map to every group element, collecting like terms.
    pub fn map_words(&self, f: impl Fn(&FreeWord) -> FreeWord) -> Self {
        let mut out = Self::zero();
        for (w, c) in &self.terms {
            out.add_term(f(w), c.clone());
        }
        out
    }

    pub fn left_mul_word(&self, u: &FreeWord) -> Self {
        self.map_words(|w| u.mul(w))
    }
}

impl Add for &GroupRingElement {
    type Output = GroupRingElement;

    fn add(self, rhs: &GroupRingElement) -> GroupRingElement {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }
}

impl Neg for &GroupRingElement {
    type Output = GroupRingElement;

    fn neg(self) -> GroupRingElement {
        GroupRingElement { terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect() }
    }
}

impl Sub for &GroupRingElement {
    type Output = GroupRingElement;

    fn sub(self, rhs: &GroupRingElement) -> GroupRingElement {
        self + &(-rhs)
    }
}

impl Mul for &GroupRingElement {
    type Output = GroupRingElement;

    fn mul(self, rhs: &GroupRingElement) -> GroupRingElement {
        let mut out = GroupRingElement::zero();
        for (u, a) in &self.terms {
            for (v, b) in &rhs.terms {
                out.add_term(u.mul(v), a * b);
            }
        }
        out
    }
}

impl fmt::Debug for GroupRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(w, c)| format!("{c}·[{w}]")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// `∂w/∂x_j` for 1-based `j`: every occurrence of `x_j` contributes its
/// prefix, every occurrence of `x_j^{-1}` minus its prefix followed by `x_j^{-1}`.
pub fn fox_derivative(w: &FreeWord, j: usize) -> GroupRingElement {
    let j = j as i32;
    let mut out = GroupRingElement::zero();
    let letters = w.letters();
    for (k, &l) in letters.iter().enumerate() {
        if l == j {
            out.add_term(FreeWord::new(letters[..k].iter().copied()), BigInt::one());
        } else if l == -j {
            out.add_term(FreeWord::new(letters[..=k].iter().copied()), -BigInt::one());
        }
    }
    out
}

/// `∂w/∂g_j` for a word `w` in the `x_i`, computed by rewriting `w` in the
/// `g_i`. Group elements of the result are words in the `g_i`.
pub fn fox_derivative_gbasis(w: &FreeWord, j: usize) -> GroupRingElement {
    fox_derivative(&w.to_gbasis(), j)
}

/// `∂w/∂g_j` through the chain rule `Σ_k ∂w/∂x_k · ∂x_k/∂g_j` in the `x`
/// basis, rewritten in the `g_i` afterwards.
pub fn fox_derivative_gbasis_chain(w: &FreeWord, j: usize) -> GroupRingElement {
    let n = w.max_generator();
    let mut out = GroupRingElement::zero();
    // x_k = g_{k-1}^{-1} g_k: only k = j and k = j + 1 depend on g_j
    for k in [j, j + 1] {
        if k == 0 || k > n {
            continue;
        }
        let dx = fox_derivative(w, k).map_words(FreeWord::to_gbasis);
        let inner = if k == 1 {
            GroupRingElement::one()
        } else {
            let g_prev_inv = FreeWord::new([-(k as i32 - 1)]);
            let e = GroupRingElement::from_word(g_prev_inv);
            if k == j {
                e
            } else {
                -&e
            }
        };
        out = &out + &(&dx * &inner);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_letter_derivative() {
        let d = fox_derivative(&FreeWord::new([-1]), 1);
        assert_eq!(d.coeff(&FreeWord::new([-1])), BigInt::from(-1));
        assert_eq!(d.terms().len(), 1);
    }

    #[test]
    fn cancelling_terms_vanish() {
        let x = GroupRingElement::from_word(FreeWord::gen(1));
        assert!((&x - &x).is_zero());
        assert_eq!((&x * &x).augmentation(), BigInt::one());
    }
}
