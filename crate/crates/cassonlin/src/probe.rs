use alexander::{alexander_poly, vanishing_tolerance};
use braidcore::ColoredBraidWord;
use laurent::Torus;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::action::is_abelian;
use crate::class::distance_to_abelian_orbit;
use crate::error::CassonLinError;
use crate::quat::{norm3, tangent_frame};
use crate::solver::{solve_from, strand_angles, SolverOptions};

#[derive(Clone, Debug, Serialize)]
pub struct ProbeReport {
    pub eps: Vec<i32>,
    pub radius: f64,
    pub starts: usize,
    pub converged: usize,
    /// Converged irreducible fixed points within `radius` of the abelian orbit.
    pub irreducible_nearby: usize,
}

/// Multistart search for irreducible fixed points near the abelian tuple
/// `𝐚_ε`, which should find none when `Δ_L(ω_ε^2) ≠ 0`.
pub fn reducibility_probe(
    b: &ColoredBraidWord,
    alpha: &[f64],
    eps: &[i32],
    radius: f64,
    opts: &SolverOptions,
) -> Result<ProbeReport, CassonLinError> {
    b.require_color_preserving()?;
    if alpha.len() != b.mu() || eps.len() != b.mu() {
        return Err(CassonLinError::PreconditionViolated("one angle and one sign per color".into()));
    }
    let doubled: Vec<f64> = alpha.iter().zip(eps).map(|(a, e)| 2.0 * a * f64::from(*e)).collect();
    let delta = alexander_poly(b)?;
    if delta.evaluate(&Torus::from_angles(&doubled)).norm() <= vanishing_tolerance(&delta) {
        return Err(CassonLinError::PreconditionViolated("Alexander polynomial vanishes at omega_eps^2".into()));
    }
    let theta = strand_angles(b, alpha);
    let signs: Vec<f64> = b.bottom().colors().iter().map(|&c| f64::from(eps[c - 1])).collect();
    let axes: Vec<[f64; 3]> = signs.iter().map(|s| [*s, 0.0, 0.0]).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let starts = opts.batch_size * opts.saturation;
    let (mut converged, mut nearby) = (0, 0);
    for _ in 0..starts {
        let start: Vec<[f64; 3]> = axes
            .iter()
            .map(|q| {
                let (u, w) = tangent_frame(*q);
                let (s, t): (f64, f64) = (rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
                let v = [q[0] + radius * (s * u[0] + t * w[0]), q[1] + radius * (s * u[1] + t * w[1]), q[2] + radius * (s * u[2] + t * w[2])];
                let n = norm3(v);
                [v[0] / n, v[1] / n, v[2] / n]
            })
            .collect();
        let (x, res) = solve_from(b, &theta, &start, opts);
        if res >= opts.residual_tol {
            continue;
        }
        converged += 1;
        if !is_abelian(&x, opts.abelian_tol) && distance_to_abelian_orbit(&x, &signs) < radius {
            nearby += 1;
        }
    }
    Ok(ProbeReport { eps: eps.to_vec(), radius, starts, converged, irreducible_nearby: nearby })
}
