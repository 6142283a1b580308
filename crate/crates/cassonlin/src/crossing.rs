use alexander::{potential, sign_points};
use braidcore::ColoredBraidWord;
use laurent::C64;
use serde::Serialize;

use crate::error::CassonLinError;
use crate::invariant::casson_lin;
use crate::solver::SolverOptions;

#[derive(Clone, Debug, Serialize)]
pub struct CrossingReport {
    /// `#{ω ∈ S_j(α) : ∇_{L+}(ω^{1/2}) / ∇_L(ω^{1/2}) < 0}`.
    pub predicted: i64,
    /// `h(σ_1^2 β) - h(β)`.
    pub observed: i64,
    pub h_before: i64,
    pub h_after: i64,
    /// The potential quotients at the points of `S_j(α)`.
    pub quotients: Vec<f64>,
    /// Largest imaginary part of a quotient, relative to its modulus.
    pub max_imaginary: f64,
}

/// Predicted and observed change of `h` when a negative crossing between the
/// first two strands (same color `j`) is made positive, i.e. `β ↦ σ_1^2 β`.
pub fn crossing_delta(b: &ColoredBraidWord, alpha: &[f64], opts: &SolverOptions) -> Result<CrossingReport, CassonLinError> {
    b.require_color_preserving()?;
    if b.strands() < 2 || b.bottom().color(0) != b.bottom().color(1) {
        return Err(CassonLinError::PreconditionViolated("the first two strands must share a color".into()));
    }
    if alpha.len() != b.mu() {
        return Err(CassonLinError::PreconditionViolated(format!("{} angles for {} colors", alpha.len(), b.mu())));
    }
    let j = b.bottom().color(0) - 1;
    let plus = b.left_multiply(&[1, 1])?;
    if ((4.0 * alpha[j]).cos() - 1.0).abs() < 1e-9 {
        return Err(CassonLinError::PreconditionViolated("omega_j^2 = 1".into()));
    }
    let (nabla, nabla_plus) = (potential(b)?, potential(&plus)?);
    let mut quotients = Vec::new();
    let mut max_imaginary = 0.0f64;
    for (eps, z) in sign_points(alpha) {
        if eps[j] != 1 {
            continue;
        }
        let total: C64 = b.bottom().colors().iter().map(|&c| z.omegas()[c - 1]).product();
        if (total - C64::new(1.0, 0.0)).norm() < 1e-9 {
            return Err(CassonLinError::PreconditionViolated("product of the omegas is 1".into()));
        }
        let (p, q) = (nabla_plus.evaluate_half(&z), nabla.evaluate_half(&z));
        if p.norm() < 1e-9 || q.norm() < 1e-9 {
            return Err(CassonLinError::PreconditionViolated("a potential function vanishes on S_j(alpha)".into()));
        }
        let r = p / q;
        max_imaginary = max_imaginary.max(r.im.abs() / r.norm());
        quotients.push(r.re);
    }
    let predicted = quotients.iter().filter(|r| **r < 0.0).count() as i64;
    let h_before = casson_lin(b, alpha, opts)?.h;
    let h_after = casson_lin(&plus, alpha, opts)?.h;
    Ok(CrossingReport { predicted, observed: h_after - h_before, h_before, h_after, quotients, max_imaginary })
}
