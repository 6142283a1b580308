use braidcore::{ColoredBraidWord, Coloring};
use freegroup::{action_images, FreeWord, Psi};
use laurent::{Poly, PolyMat};
use num_bigint::BigInt;
use num_traits::One;

use crate::error::GassnerError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Basis {
    /// Generators `x_1, …, x_n`.
    X,
    /// Generators `g_i = x_1⋯x_i`.
    G,
    /// The top-left `(n-1)`-block of the `G` matrix.
    Reduced,
}

#[derive(Clone, Debug, PartialEq)]
pub struct GassnerMatrix {
    pub matrix: PolyMat,
    pub basis: Basis,
    pub coloring: Coloring,
}

fn t(c: &Coloring, pos: usize) -> Poly {
    Poly::var(c.mu(), c.color(pos) - 1)
}

fn t_inv(c: &Coloring, pos: usize) -> Poly {
    Poly::var_pow(c.mu(), c.color(pos) - 1, -1)
}

/// `m_k = t_{c_1}⋯t_{c_k}` for `k = 0..=n`, 0-based positions.
pub fn prefix_monomials(c: &Coloring) -> Vec<Poly> {
    let mut out = vec![Poly::one(c.mu())];
    for i in 0..c.len() {
        let next = out[i].clone() * t(c, i);
        out.push(next);
    }
    out
}

/// Matrix of a single letter read at a level with coloring `level`.
///
/// With `d_a, d_b` the colors at the two positions involved:
/// `σ_i ↦ [[1 - t_{d_a}, t_{d_b}], [1, 0]]` and
/// `σ_i^{-1} ↦ [[0, 1], [t_{d_a}^{-1}, t_{d_a}^{-1}(t_{d_b} - 1)]]`.
pub fn generator_block(letter: i32, level: &Coloring) -> PolyMat {
    let (mu, n) = (level.mu(), level.len());
    let a = letter.unsigned_abs() as usize - 1;
    let one = Poly::one(mu);
    let mut m = PolyMat::identity(mu, n);
    let (ta, tb) = (t(level, a), t(level, a + 1));
    if letter > 0 {
        m.set(a, a, &one - &ta);
        m.set(a, a + 1, tb);
        m.set(a + 1, a, one);
        m.set(a + 1, a + 1, Poly::zero(mu));
    } else {
        let ta_inv = t_inv(level, a);
        m.set(a, a, Poly::zero(mu));
        m.set(a, a + 1, one.clone());
        m.set(a + 1, a, ta_inv.clone());
        m.set(a + 1, a + 1, &ta_inv * &(&tb - &one));
    }
    m
}

/// Unreduced matrix by Fox calculus on the images `x_i β`.
pub fn gassner_fox(b: &ColoredBraidWord) -> PolyMat {
    let psi = Psi::x_basis(&b.top());
    let images = action_images(b);
    PolyMat::from_fn(b.mu(), b.strands(), b.strands(), |i, j| psi.fox(&images[i], j + 1))
}

/// Unreduced matrix as the product of the letters' blocks in word order.
pub fn gassner_blocks(b: &ColoredBraidWord) -> PolyMat {
    let mut m = PolyMat::identity(b.mu(), b.strands());
    for (&l, level) in b.letters().iter().zip(b.levels()) {
        m = m.checked_mul(&generator_block(l, &level)).expect("square blocks of equal size");
    }
    m
}

/// The unreduced matrix of a color-preserving braid, computed along both
/// paths.
pub fn gassner_unreduced(b: &ColoredBraidWord) -> Result<GassnerMatrix, GassnerError> {
    b.require_color_preserving()?;
    let fox = gassner_fox(b);
    let blocks = gassner_blocks(b);
    if fox != blocks {
        return Err(GassnerError::InternalMismatch(format!(
            "Fox matrix {fox:?} differs from block product {blocks:?}"
        )));
    }
    Ok(GassnerMatrix { matrix: fox, basis: Basis::X, coloring: b.bottom().clone() })
}

/// `P_n` with `(P_n)_{ij} = m_j` for `j ≤ i`, and its inverse.
pub fn change_of_basis(c: &Coloring) -> (PolyMat, PolyMat) {
    let (mu, n) = (c.mu(), c.len());
    let m = prefix_monomials(c);
    let p = PolyMat::from_fn(mu, n, n, |i, j| if j <= i { m[j].clone() } else { Poly::zero(mu) });
    let p_inv = PolyMat::from_fn(mu, n, n, |i, j| {
        let inv = m[i].invert_variables();
        if j == i {
            inv
        } else if j + 1 == i {
            -inv
        } else {
            Poly::zero(mu)
        }
    });
    (p, p_inv)
}

/// Matrix in the `g` basis, entry `(i, j) = ψ(∂(g_i β)/∂g_j)`, from Fox
/// calculus in that basis.
pub fn gassner_gbasis_direct(b: &ColoredBraidWord) -> PolyMat {
    let n = b.strands();
    let psi = Psi::g_basis(&b.top());
    let images = action_images(b);
    PolyMat::from_fn(b.mu(), n, n, |i, j| {
        let gi_beta = FreeWord::prefix_product(i + 1).substitute(&images).to_gbasis();
        psi.fox(&gi_beta, j + 1)
    })
}

/// `P_n B P_n^{-1}`, cross-checked against the direct computation.
pub fn gassner_gbasis(b: &ColoredBraidWord) -> Result<GassnerMatrix, GassnerError> {
    let unreduced = gassner_unreduced(b)?;
    let (p, p_inv) = change_of_basis(b.bottom());
    let conj = p.checked_mul(&unreduced.matrix)?.checked_mul(&p_inv)?;
    let direct = gassner_gbasis_direct(b);
    if conj != direct {
        return Err(GassnerError::InternalMismatch(format!(
            "conjugated matrix {conj:?} differs from g-basis Fox matrix {direct:?}"
        )));
    }
    let n = b.strands();
    let mu = b.mu();
    for j in 0..n {
        let expected = if j + 1 == n { Poly::one(mu) } else { Poly::zero(mu) };
        if conj.get(n - 1, j) != &expected {
            return Err(GassnerError::InternalMismatch(format!("last row of {conj:?} is not (0, …, 0, 1)")));
        }
    }
    Ok(GassnerMatrix { matrix: conj, basis: Basis::G, coloring: b.bottom().clone() })
}

pub fn gassner_reduced(b: &ColoredBraidWord) -> Result<GassnerMatrix, GassnerError> {
    let g = gassner_gbasis(b)?;
    let keep: Vec<usize> = (0..b.strands() - 1).collect();
    Ok(GassnerMatrix { matrix: g.matrix.select(&keep, &keep), basis: Basis::Reduced, coloring: g.coloring })
}

/// `⟨β⟩ = Π t_{b_j}^{-ε_j}` over the letters, `b_j` the over-strand color.
pub fn beta_monomial(b: &ColoredBraidWord) -> Poly {
    let mut e = vec![0; b.mu()];
    for (color, sign) in b.over_strand_colors() {
        e[color - 1] -= 2 * sign;
    }
    Poly::monomial(e, BigInt::one())
}

/// `det((M - I)` with 0-based row `l` and column `m` removed`)`.
pub fn minor_det(m: &PolyMat, l: usize, col: usize) -> Poly {
    m.minus_identity().minor(l, col).det().expect("square minor")
}
