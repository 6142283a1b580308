use alexander::{alexander_poly, potential, vanishing_tolerance};
use braidcore::ColoredBraidWord;
use laurent::{Torus, C64};
use num_rational::Rational64;
use serde::Serialize;

use crate::error::SignatureError;
use crate::form::{signature_nullity, SignaturePoint};
use crate::system::SeifertSystem;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ParityReport {
    pub sigma: i64,
    pub components: usize,
    /// `Σ_{k<j} lk(L_k, L_j)` over the colored sublinks.
    pub sublink_linking: i64,
    /// `i^ν ∇(ω^{1/2})`, real up to rounding; the root is the point's pinned one.
    pub twisted_potential: f64,
    pub holds: bool,
}

/// `σ_L(ω) ≡ ν + Σ_{k<j} lk(L_k, L_j) - sign(i^ν ∇_L(ω^{1/2})) (mod 4)`.
///
/// `s` and `b` must present the same colored link; only the closure's
/// component count and linking numbers are cross-checked.
pub fn parity_check(s: &SeifertSystem, b: &ColoredBraidWord, z: &Torus) -> Result<ParityReport, SignatureError> {
    if s.mu() != b.mu() {
        return Err(SignatureError::DimensionMismatch(format!("system mu {} vs braid mu {}", s.mu(), b.mu())));
    }
    let closure = b.closure()?;
    if let Some(nu) = s.meta.components {
        if nu != closure.num_components() {
            return Err(SignatureError::PreconditionViolated(format!(
                "system describes {nu} components, closure has {}",
                closure.num_components()
            )));
        }
    }
    let delta = alexander_poly(b)?;
    if delta.evaluate(z).norm() <= vanishing_tolerance(&delta) {
        return Err(SignatureError::PreconditionViolated("Alexander polynomial vanishes at the point".into()));
    }
    let point = signature_nullity(s, z)?;
    let nu = closure.num_components();
    let lk = closure.total_sublink_linking();
    let value = C64::new(0.0, 1.0).powi(nu as i32) * potential(b)?.evaluate_half(z);
    let sign = if value.re > 0.0 { 1 } else { -1 };
    let holds = (point.sigma - nu as i64 - lk + sign).rem_euclid(4) == 0;
    Ok(ParityReport { sigma: point.sigma, components: nu, sublink_linking: lk, twisted_potential: value.re, holds })
}

fn nonsingular(s: &SeifertSystem, z: &Torus) -> Result<SignaturePoint, SignatureError> {
    let p = signature_nullity(s, z)?;
    if p.eta > 0 {
        return Err(SignatureError::NullityPositive { angles: p.angles, nullity: p.eta });
    }
    Ok(p)
}

/// `σ_{L_+}(ω) - σ_L(ω)` for systems differing by one crossing change,
/// which must lie in `{0, -2}`.
pub fn crossing_change_delta(s_plus: &SeifertSystem, s: &SeifertSystem, z: &Torus) -> Result<i64, SignatureError> {
    let (plus, base) = match (signature_nullity(s_plus, z)?, signature_nullity(s, z)?) {
        (p, q) if p.eta == 0 && q.eta == 0 => (p, q),
        _ => return Err(SignatureError::PreconditionViolated("positive nullity at the point".into())),
    };
    let delta = plus.sigma - base.sigma;
    if delta != 0 && delta != -2 {
        return Err(SignatureError::UnexpectedDelta(delta));
    }
    Ok(delta)
}

fn require_two_colors(s: &SeifertSystem) -> Result<(), SignatureError> {
    if s.mu() != 2 {
        return Err(SignatureError::DimensionMismatch(format!("needs mu = 2, got {}", s.mu())));
    }
    Ok(())
}

/// `-½ (σ(ω_1, ω_2) + σ(ω_1, ω_2^{-1}))`.
pub fn signature_side(s: &SeifertSystem, z: &Torus) -> Result<Rational64, SignatureError> {
    require_two_colors(s)?;
    let a = nonsingular(s, z)?.sigma;
    let b = nonsingular(s, &z.invert_coordinate(1))?.sigma;
    Ok(Rational64::new(-(a + b), 2))
}

/// `-¼ Σ σ(ω_1^{±1}, ω_2^{±1})`, equal to [`signature_side`] because
/// `σ(ω̄) = σ(ω)`.
pub fn signature_side_four_term(s: &SeifertSystem, z: &Torus) -> Result<Rational64, SignatureError> {
    require_two_colors(s)?;
    let points = [z.clone(), z.invert_coordinate(0), z.invert_coordinate(1), z.conj()];
    let mut total = 0;
    for p in &points {
        total += nonsingular(s, p)?.sigma;
    }
    Ok(Rational64::new(-total, 4))
}

/// `σ_L(ω, …, ω) = σ_L(ω) + Σ_{i<j} lk(K_i, K_j)` for a link colored by its
/// components, `single` being a one-variable Seifert matrix of the same link.
pub fn diagonal_relation_holds(
    multi: &SeifertSystem,
    single: &SeifertSystem,
    z: &Torus,
    linking_sum: i64,
) -> Result<bool, SignatureError> {
    if single.mu() != 1 || z.mu() != 1 {
        return Err(SignatureError::DimensionMismatch("diagonal relation needs a one-variable system and point".into()));
    }
    let diagonal = Torus::from_roots(&vec![z.roots()[0]; multi.mu()]).expect("unit roots");
    Ok(nonsingular(multi, &diagonal)?.sigma == nonsingular(single, z)?.sigma + linking_sum)
}
