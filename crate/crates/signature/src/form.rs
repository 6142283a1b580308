use laurent::{Torus, C64};
use nalgebra::DMatrix;
use serde::Serialize;

use crate::error::SignatureError;
use crate::system::{sign_vector, SeifertSystem};

/// `H(ω) = Σ_ε Π_i (1 - ω̄_i^{ε_i}) A^ε`.
pub fn hermitian_form(s: &SeifertSystem, z: &Torus) -> Result<DMatrix<C64>, SignatureError> {
    if z.mu() != s.mu() {
        return Err(SignatureError::DimensionMismatch(format!("point has {} coordinates, system has mu = {}", z.mu(), s.mu())));
    }
    if let Some(k) = z.omegas().iter().position(|w| (w - C64::new(1.0, 0.0)).norm() <= z.tolerance()) {
        return Err(SignatureError::NotInTorusStar(k));
    }
    let g = s.size();
    let mut h = DMatrix::<C64>::zeros(g, g);
    for (mask, a) in s.matrices().iter().enumerate() {
        let weight = sign_vector(mask, s.mu())
            .iter()
            .zip(z.omegas())
            .map(|(&e, w)| C64::new(1.0, 0.0) - if e > 0 { w.conj() } else { *w })
            .product::<C64>();
        h += a.map(|x| C64::new(x as f64, 0.0)) * weight;
    }
    let asym = (&h - h.adjoint()).norm();
    assert!(asym <= 1e-12 * (1.0 + h.norm()), "H(ω) is not Hermitian: deviation {asym}");
    Ok(h)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SignaturePoint {
    /// Half-angles `α` with `ω_k = e^{2iα_k}`.
    pub angles: Vec<f64>,
    pub sigma: i64,
    pub eta: usize,
    /// Eigenvalues with `|λ| < tau` count toward the nullity.
    pub tau: f64,
    /// Smallest `|λ|` among the eigenvalues classified nonzero.
    pub gap: Option<f64>,
}

impl SignaturePoint {
    /// Every nonzero eigenvalue is at least `10^3 τ` from zero.
    pub fn well_separated(&self) -> bool {
        self.gap.is_none_or(|g| g >= 1e3 * self.tau)
    }
}

/// Signature and nullity of `H(ω)`, classifying eigenvalues against
/// `τ = 1e-8 (1 + ‖H‖_2)`.
pub fn signature_nullity(s: &SeifertSystem, z: &Torus) -> Result<SignaturePoint, SignatureError> {
    let h = hermitian_form(s, z)?;
    let eigenvalues = if h.nrows() == 0 { Vec::new() } else { h.symmetric_eigenvalues().iter().copied().collect() };
    let spectral = eigenvalues.iter().fold(0.0f64, |m, l| m.max(l.abs()));
    let tau = 1e-8 * (1.0 + spectral);
    let (mut sigma, mut eta, mut gap) = (0i64, 0usize, None::<f64>);
    for l in eigenvalues {
        if l.abs() < tau {
            eta += 1;
        } else {
            sigma += if l > 0.0 { 1 } else { -1 };
            gap = Some(gap.map_or(l.abs(), |g| g.min(l.abs())));
        }
    }
    Ok(SignaturePoint { angles: z.angles(), sigma, eta, tau, gap })
}
