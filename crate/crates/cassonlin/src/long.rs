//! Finite-difference linearization of the braid action at an abelian tuple,
//! compared with the permutation matrix and the evaluated colored Gassner
//! matrix.
//!
//! Tangent vectors at `X` are written `ξ X` with `ξ = a i + (c + d i) j`, so
//! that `su(2) = iR ⊕ jC`; the `jC` coordinate is `z = c + d i`.

use braidcore::ColoredBraidWord;
use gassner::{evaluate, gassner_unreduced};
use laurent::{Torus, C64};
use nalgebra::DMatrix;
use serde::Serialize;

use crate::action::{abelian_rep, braid_act_su2};
use crate::error::CassonLinError;
use crate::quat::{norm3, Quat64};

pub const FD_STEP: f64 = 1e-5;
pub const LONG_TOLERANCE: f64 = 1e-6;

fn log_pure(q: Quat64) -> [f64; 3] {
    let v = q.imag();
    let s = norm3(v);
    if s == 0.0 {
        return [0.0; 3];
    }
    let t = s.atan2(q.a) / s;
    [v[0] * t, v[1] * t, v[2] * t]
}

/// Central-difference Jacobian of `X ↦ X β` at a fixed point, in the
/// coordinates `(a, c, d)` of each strand.
pub fn action_jacobian(b: &ColoredBraidWord, x: &[Quat64], step: f64) -> DMatrix<f64> {
    let n = x.len();
    let mut jac = DMatrix::zeros(3 * n, 3 * n);
    for i in 0..n {
        for axis in 0..3 {
            for (sign, weight) in [(1.0, 0.5 / step), (-1.0, -0.5 / step)] {
                let mut v = [0.0; 3];
                v[axis] = sign * step;
                let mut xp = x.to_vec();
                xp[i] = Quat64::exp_pure(v) * x[i];
                let y = braid_act_su2(&xp, b);
                for r in 0..n {
                    let l = log_pure(y[r] * x[r].conj());
                    for k in 0..3 {
                        jac[(3 * r + k, 3 * i + axis)] += weight * l[k];
                    }
                }
            }
        }
    }
    jac
}

/// `P[r][c] = 1` when the strand starting at position `r` ends at position `c`.
pub fn permutation_matrix(b: &ColoredBraidWord) -> DMatrix<f64> {
    let perm = b.induced_permutation();
    let n = b.strands();
    DMatrix::from_fn(n, n, |r, c| if perm.apply(r) == c { 1.0 } else { 0.0 })
}

#[derive(Clone, Debug, Serialize)]
pub struct LongReport {
    pub eps: Vec<i32>,
    /// Relative error of the `iR` block against the permutation matrix.
    pub permutation_error: f64,
    /// Relative error of the `jC` block against the Gassner matrix at `ω_ε`.
    pub gassner_error: f64,
    /// Size of the blocks mixing `iR` and `jC`, and of the part of the `jC`
    /// block that is not complex linear.
    pub structure_error: f64,
    pub passed: bool,
}

/// The check at `𝐚_ε` with `ω_ε = (e^{2iε_1α_1}, …)`.
pub fn long_differential_check(b: &ColoredBraidWord, alpha: &[f64], eps: &[i32]) -> Result<LongReport, CassonLinError> {
    b.require_color_preserving()?;
    if alpha.len() != b.mu() || eps.len() != b.mu() {
        return Err(CassonLinError::PreconditionViolated("one angle and one sign per color".into()));
    }
    let n = b.strands();
    let x = abelian_rep(alpha, eps, b.bottom());
    let jac = action_jacobian(b, &x, FD_STEP);

    let angles: Vec<f64> = alpha.iter().zip(eps).map(|(a, e)| a * f64::from(*e)).collect();
    let gassner = evaluate(&gassner_unreduced(b)?.matrix, &Torus::from_angles(&angles));
    let real_block = DMatrix::from_fn(n, n, |r, c| jac[(3 * r, 3 * c)]);
    let complex_block = DMatrix::from_fn(n, n, |r, c| C64::new(jac[(3 * r + 1, 3 * c + 1)], jac[(3 * r + 2, 3 * c + 1)]));

    let perm = permutation_matrix(b);
    let permutation_error = (&real_block - &perm).norm() / perm.norm().max(1.0);
    let gassner_error = (&complex_block - &gassner).norm() / gassner.norm().max(1.0);
    let mut structure = 0.0f64;
    for r in 0..n {
        for c in 0..n {
            structure = structure
                .max(jac[(3 * r, 3 * c + 1)].abs())
                .max(jac[(3 * r, 3 * c + 2)].abs())
                .max(jac[(3 * r + 1, 3 * c)].abs())
                .max(jac[(3 * r + 2, 3 * c)].abs())
                .max((jac[(3 * r + 1, 3 * c + 1)] - jac[(3 * r + 2, 3 * c + 2)]).abs())
                .max((jac[(3 * r + 2, 3 * c + 1)] + jac[(3 * r + 1, 3 * c + 2)]).abs());
        }
    }
    let structure_error = structure / gassner.norm().max(1.0);
    let passed = permutation_error < LONG_TOLERANCE && gassner_error < LONG_TOLERANCE && structure_error < LONG_TOLERANCE;
    Ok(LongReport { eps: eps.to_vec(), permutation_error, gassner_error, structure_error, passed })
}

/// The check at every `ε ∈ {±1}^μ`, in the order of `alexander::sign_points`.
pub fn long_check_all_signs(b: &ColoredBraidWord, alpha: &[f64]) -> Result<Vec<LongReport>, CassonLinError> {
    let mu = b.mu();
    (0..1usize << mu)
        .map(|mask| {
            let eps: Vec<i32> = (0..mu).map(|k| if mask >> k & 1 == 1 { -1 } else { 1 }).collect();
            long_differential_check(b, alpha, &eps)
        })
        .collect()
}
