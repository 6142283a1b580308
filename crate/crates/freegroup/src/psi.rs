use braidcore::Coloring;
use laurent::Poly;
use num_bigint::BigInt;
use num_traits::One;

use crate::ring::GroupRingElement;
use crate::word::FreeWord;

/// A homomorphism from a free group to the monomials of `Λ_μ`, given by the
/// image of each generator, extended linearly to the group ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Psi {
    mu: usize,
    /// Stored (half-step) exponent vector of each generator's image.
    images: Vec<Vec<i32>>,
}

impl Psi {
    /// `x_i ↦ t_{c_i}`.
    pub fn x_basis(c: &Coloring) -> Self {
        let mu = c.mu();
        let images = c
            .colors()
            .iter()
            .map(|&k| {
                let mut e = vec![0; mu];
                e[k - 1] = 2;
                e
            })
            .collect();
        Self { mu, images }
    }

    /// `g_i ↦ t_{c_1}⋯t_{c_i}`.
    pub fn g_basis(c: &Coloring) -> Self {
        let x = Self::x_basis(c);
        let mut acc = vec![0; x.mu];
        let images = x
            .images
            .iter()
            .map(|e| {
                for (a, b) in acc.iter_mut().zip(e) {
                    *a += b;
                }
                acc.clone()
            })
            .collect();
        Self { mu: x.mu, images }
    }

    pub fn mu(&self) -> usize {
        self.mu
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    fn exponents(&self, w: &FreeWord) -> Vec<i32> {
        let mut e = vec![0; self.mu];
        self.accumulate(&mut e, w.letters());
        e
    }

    fn accumulate(&self, e: &mut [i32], letters: &[i32]) {
        for &l in letters {
            let img = &self.images[l.unsigned_abs() as usize - 1];
            for (a, b) in e.iter_mut().zip(img) {
                *a += l.signum() * b;
            }
        }
    }

    pub fn word(&self, w: &FreeWord) -> Poly {
        Poly::monomial(self.exponents(w), BigInt::one())
    }

    pub fn element(&self, e: &GroupRingElement) -> Poly {
        Poly::from_terms(self.mu, e.terms().iter().map(|(w, c)| (self.exponents(w), c.clone())))
    }

    /// `ψ(∂w/∂y_j)` without building the group ring element; `y_j` is the
    /// `j`-th (1-based) generator of whatever free basis `w` is written in.
    pub fn fox(&self, w: &FreeWord, j: usize) -> Poly {
        let j = j as i32;
        let mut e = vec![0; self.mu];
        let mut terms = Vec::new();
        for &l in w.letters() {
            if l == j {
                terms.push((e.clone(), BigInt::one()));
            }
            self.accumulate(&mut e, &[l]);
            if l == -j {
                terms.push((e.clone(), -BigInt::one()));
            }
        }
        Poly::from_terms(self.mu, terms)
    }
}
