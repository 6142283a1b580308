use braidcore::ColoredBraidWord;
use laurent::{Poly, Torus, C64};
use num_bigint::BigInt;
use num_traits::Signed;
use serde::Serialize;

use crate::error::AlexanderError;
use crate::polys::alexander_poly;
use crate::potential::potential;

/// Scale-aware vanishing threshold for an integer polynomial evaluated on
/// the unit torus.
pub fn vanishing_tolerance(p: &Poly) -> f64 {
    1e-9 * (1.0 + p.coeff_abs_sum())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TorresReport {
    pub linking: i64,
    /// `Δ_L(1, 1)`.
    pub value_at_ones: String,
    /// `|Δ_L(1, 1)| = |ℓ|`.
    pub value_matches: bool,
    /// `Δ_L(t, 1) ≐ (t^{|ℓ|} - 1)/(t - 1) · Δ_{K_1}(t)`, with `K_1` the
    /// color-1 component read off the braid itself.
    pub one_variable_matches: bool,
}

impl TorresReport {
    pub fn passed(&self) -> bool {
        self.value_matches && self.one_variable_matches
    }
}

/// Torres conditions for a two-component closure colored by its components.
pub fn torres_check(b: &ColoredBraidWord) -> Result<TorresReport, AlexanderError> {
    let closure = b.closure()?;
    if closure.num_components() != 2 {
        return Err(AlexanderError::WrongComponentCount { expected: 2, found: closure.num_components() });
    }
    if b.mu() != 2 {
        return Err(AlexanderError::PreconditionViolated("each component needs its own color".into()));
    }
    let lk = closure.linking(0, 1);
    let delta = alexander_poly(b)?;
    let at_ones: BigInt = delta.terms().values().sum();
    let value_matches = at_ones.abs() == BigInt::from(lk.abs());

    let knot = alexander_poly(&b.restrict_to_colors(&[1])?)?;
    let lifted = knot.merge_variables(&[0], 2);
    let t = Poly::var(2, 0);
    let mut geometric = Poly::zero(2);
    for k in 0..lk.unsigned_abs() {
        geometric = geometric + t.pow(k as u32);
    }
    let rhs = &geometric * &lifted;
    let lhs = delta.specialize_one(1);
    let one_variable_matches = if rhs.is_zero() || lhs.is_zero() {
        rhs.is_zero() && lhs.is_zero()
    } else {
        lhs.equal_up_to_units(&rhs)
    };
    Ok(TorresReport { linking: lk, value_at_ones: at_ones.to_string(), value_matches, one_variable_matches })
}

/// Whether `Δ_L(λ_1^2, …, λ_μ^2) = 0`, the criterion for a reducible
/// non-abelian representation sending meridians of color `k` to upper
/// triangular matrices with diagonal `(λ_k, λ_k^{-1})`.
pub fn reducible_nonabelian_exists(b: &ColoredBraidWord, lambda: &[C64]) -> Result<bool, AlexanderError> {
    if lambda.len() != b.mu() {
        return Err(AlexanderError::PreconditionViolated(format!(
            "{} coordinates for {} colors",
            lambda.len(),
            b.mu()
        )));
    }
    if lambda.iter().any(|l| l.norm() < 1e-12 || (l - C64::new(1.0, 0.0)).norm() < 1e-12) {
        return Err(AlexanderError::PreconditionViolated("coordinates must avoid 0 and 1".into()));
    }
    let delta = alexander_poly(b)?;
    // stored exponent 2e is t^e, so evaluating at roots λ gives Δ(λ^2)
    let value = delta.evaluate_roots(lambda);
    let scale: f64 = lambda.iter().map(|l| l.norm().max(l.norm().recip())).product::<f64>();
    let bound = vanishing_tolerance(&delta) * scale.powi(delta_degree_span(&delta));
    Ok(value.norm() < bound)
}

fn delta_degree_span(p: &Poly) -> i32 {
    match (p.min_exponents(), p.max_exponents()) {
        (Some(lo), Some(hi)) => lo.iter().zip(&hi).map(|(a, b)| (b - a) / 2).max().unwrap_or(0),
        _ => 0,
    }
}

/// The `2^μ` points `(e^{2iε_1α_1}, …)` carried as torus points with roots
/// `e^{iε_kα_k}`, in the order of `ε` read as binary with `+1 ↦ 0`.
pub fn sign_points(alpha: &[f64]) -> Vec<(Vec<i32>, Torus)> {
    let mu = alpha.len();
    (0..1usize << mu)
        .map(|mask| {
            let eps: Vec<i32> = (0..mu).map(|k| if mask >> k & 1 == 1 { -1 } else { 1 }).collect();
            let angles: Vec<f64> = alpha.iter().zip(&eps).map(|(a, &e)| a * f64::from(e)).collect();
            (eps, Torus::from_angles(&angles))
        })
        .collect()
}

/// Whether `Δ_L(ω_ε) ≠ 0` at every point of `S(α)`.
pub fn casson_lin_defined(b: &ColoredBraidWord, alpha: &[f64]) -> Result<bool, AlexanderError> {
    if alpha.len() != b.mu() {
        return Err(AlexanderError::PreconditionViolated(format!("{} angles for {} colors", alpha.len(), b.mu())));
    }
    let delta = alexander_poly(b)?;
    let tol = vanishing_tolerance(&delta);
    Ok(sign_points(alpha).iter().all(|(_, z)| delta.evaluate(z).norm() > tol))
}

/// `Δ_L(t, …, t)(t - 1) ≐ Δ_L(t)` for a closure whose colors are exactly its
/// components, `Δ_L(t)` being computed from the same braid colored uniformly.
pub fn diagonal_check(b: &ColoredBraidWord) -> Result<bool, AlexanderError> {
    let nu = b.closure()?.num_components();
    if nu != b.mu() || nu < 2 {
        return Err(AlexanderError::PreconditionViolated("needs one color per component and two components".into()));
    }
    let multi = alexander_poly(b)?;
    let diagonal = multi.merge_variables(&vec![0; b.mu()], 1);
    let uniform = ColoredBraidWord::new(b.strands(), braidcore::Coloring::uniform(b.strands()), b.letters().to_vec())?;
    let single = alexander_poly(&uniform)?;
    let lhs = &diagonal * &(Poly::var(1, 0) - Poly::one(1));
    Ok(if lhs.is_zero() || single.is_zero() { lhs.is_zero() && single.is_zero() } else { lhs.equal_up_to_units(&single) })
}

/// `∇(t^{-1}) = (-1)^ν ∇(t)`.
pub fn symmetry_holds(b: &ColoredBraidWord) -> Result<bool, AlexanderError> {
    let p = potential(b)?;
    let nu = b.closure()?.num_components();
    Ok(p.invert_variables() == p.scale_sign(nu % 2 == 1))
}
