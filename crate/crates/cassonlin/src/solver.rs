use braidcore::ColoredBraidWord;
use nalgebra::{DMatrix, DVector};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, UnitSphere};
use rayon::prelude::*;
use serde::Serialize;

use crate::action::{braid_act_su2, braid_act_tangent, is_abelian};
use crate::class::{fingerprint_distance, RepClass};
use crate::quat::{tangent_frame, Quat64};

/// Orientation of the ambient space used for intersection signs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Orientation {
    Standard,
    /// The opposite ambient orientation; every sign flips.
    Reversed,
}

#[derive(Clone, Debug, Serialize)]
pub struct SolverOptions {
    pub seed: u64,
    pub batch_size: usize,
    /// Stop after this many consecutive batches without a new class.
    pub saturation: usize,
    pub max_batches: usize,
    pub residual_tol: f64,
    pub max_iterations: usize,
    /// Tuples with all commutators below this are abelian.
    pub abelian_tol: f64,
    pub dedup_tol: f64,
    /// Linearizations with a larger condition number are not transverse.
    pub max_condition: f64,
    pub orientation: Orientation,
}

impl Default for SolverOptions {
    fn default() -> Self {
        Self {
            seed: 0x5eed,
            batch_size: 200,
            saturation: 3,
            max_batches: 40,
            residual_tol: 1e-10,
            max_iterations: 200,
            abelian_tol: 1e-6,
            dedup_tol: 1e-6,
            max_condition: 1e8,
            orientation: Orientation::Standard,
        }
    }
}

/// Per-strand trace angles `θ_i = α_{c_i}`.
pub fn strand_angles(b: &ColoredBraidWord, alpha: &[f64]) -> Vec<f64> {
    b.bottom().colors().iter().map(|&c| alpha[c - 1]).collect()
}

fn point(theta: &[f64], axes: &[[f64; 3]]) -> Vec<Quat64> {
    theta.iter().zip(axes).map(|(&t, &q)| Quat64::from_polar(t, q)).collect()
}

fn residual(b: &ColoredBraidWord, x: &[Quat64]) -> DVector<f64> {
    let y = braid_act_su2(x, b);
    DVector::from_iterator(4 * x.len(), y.iter().zip(x).flat_map(|(p, q)| (*p - *q).as_array()))
}

/// Columns are the derivatives of the residual along `δX_i = u_i, w_i`
/// (tangent frame of each axis), strand by strand.
fn residual_jacobian(b: &ColoredBraidWord, x: &[Quat64], frames: &[([f64; 3], [f64; 3])], theta: &[f64]) -> DMatrix<f64> {
    let n = x.len();
    let mut jac = DMatrix::zeros(4 * n, 2 * n);
    for i in 0..n {
        for (s, dir) in [frames[i].0, frames[i].1].into_iter().enumerate() {
            let mut v = vec![Quat64::zero(); n];
            v[i] = Quat64::pure(dir).scale(theta[i].sin());
            let (_, dy) = braid_act_tangent(x, &v, b);
            for (r, (d, vv)) in dy.iter().zip(&v).enumerate() {
                let col = (*d - *vv).as_array();
                for k in 0..4 {
                    jac[(4 * r + k, 2 * i + s)] = col[k];
                }
            }
        }
    }
    jac
}

pub(crate) fn axes_of(x: &[Quat64]) -> Vec<[f64; 3]> {
    x.iter().map(|q| q.to_polar().expect("trace is not ±2").1).collect()
}

/// Levenberg-Marquardt on the product of trace spheres, starting from the
/// given axes; returns the final tuple and residual norm.
pub fn solve_from(b: &ColoredBraidWord, theta: &[f64], start: &[[f64; 3]], opts: &SolverOptions) -> (Vec<Quat64>, f64) {
    let mut axes = start.to_vec();
    let mut x = point(theta, &axes);
    let mut f = residual(b, &x);
    let mut cost = f.norm_squared();
    let mut lambda = 1e-3;
    for _ in 0..opts.max_iterations {
        if cost.sqrt() < opts.residual_tol * 1e-2 {
            break;
        }
        let frames: Vec<_> = axes.iter().map(|q| tangent_frame(*q)).collect();
        let jac = residual_jacobian(b, &x, &frames, theta);
        let jtj = jac.transpose() * &jac;
        let g = jac.transpose() * &f;
        let mut improved = false;
        for _ in 0..12 {
            let mut a = jtj.clone();
            for d in 0..a.nrows() {
                a[(d, d)] += lambda * (1.0 + jtj[(d, d)]);
            }
            let Some(step) = a.cholesky().map(|c| c.solve(&(-&g))) else {
                lambda *= 10.0;
                continue;
            };
            let trial: Vec<[f64; 3]> = axes
                .iter()
                .zip(&frames)
                .enumerate()
                .map(|(i, (q, (u, w)))| {
                    let (s, t) = (step[2 * i], step[2 * i + 1]);
                    let v = [q[0] + s * u[0] + t * w[0], q[1] + s * u[1] + t * w[1], q[2] + s * u[2] + t * w[2]];
                    let n = crate::quat::norm3(v);
                    [v[0] / n, v[1] / n, v[2] / n]
                })
                .collect();
            let xt = point(theta, &trial);
            let ft = residual(b, &xt);
            let ct = ft.norm_squared();
            if ct < cost {
                axes = trial;
                x = xt;
                f = ft;
                cost = ct;
                lambda = (lambda * 0.3).max(1e-12);
                improved = true;
                break;
            }
            lambda *= 10.0;
        }
        if !improved {
            break;
        }
    }
    (x, cost.sqrt())
}

fn random_start(seed: u64, stream: u64, n: usize) -> Vec<[f64; 3]> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    (0..n).map(|_| UnitSphere.sample(&mut rng)).collect()
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct SearchStats {
    pub starts: usize,
    pub batches: usize,
    pub converged: usize,
    pub abelian: usize,
    /// Converged irreducible solutions that matched an already known class.
    pub collisions: usize,
    /// Whether the search stopped because `saturation` batches found nothing new.
    pub saturated: bool,
}

/// Irreducible fixed classes of `β` on the product of trace spheres, by
/// seeded multistart. Batches run in parallel and merge in start order, so
/// the result depends only on the options.
pub fn search_fixed_classes(b: &ColoredBraidWord, alpha: &[f64], opts: &SolverOptions) -> (Vec<RepClass>, SearchStats) {
    let n = b.strands();
    let mut stats = SearchStats::default();
    let mut classes: Vec<RepClass> = Vec::new();
    if n < 2 {
        stats.saturated = true;
        return (classes, stats);
    }
    let theta = strand_angles(b, alpha);
    let mut quiet = 0;
    for batch in 0..opts.max_batches {
        let base = (batch * opts.batch_size) as u64;
        let results: Vec<(Vec<Quat64>, f64)> = (0..opts.batch_size as u64)
            .into_par_iter()
            .map(|k| solve_from(b, &theta, &random_start(opts.seed, base + k, n), opts))
            .collect();
        stats.batches += 1;
        stats.starts += results.len();
        let before = classes.len();
        for (x, res) in results {
            if res >= opts.residual_tol {
                continue;
            }
            stats.converged += 1;
            if is_abelian(&x, opts.abelian_tol) {
                stats.abelian += 1;
                continue;
            }
            let cls = RepClass::from_point(&x);
            if classes.iter().any(|c| fingerprint_distance(&c.fingerprint, &cls.fingerprint) < opts.dedup_tol) {
                stats.collisions += 1;
            } else {
                classes.push(cls);
            }
        }
        quiet = if classes.len() > before { 0 } else { quiet + 1 };
        if quiet >= opts.saturation {
            stats.saturated = true;
            break;
        }
    }
    (classes, stats)
}

/// Whether `x` is a fixed point of `β` to within `tol`.
pub fn fixed_residual(b: &ColoredBraidWord, x: &[Quat64]) -> f64 {
    residual(b, x).norm()
}
