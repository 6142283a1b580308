//! Local intersection sign of the diagonal and the graph of `β` in the
//! quotient of `{(X, Y) : X_1⋯X_n = Y_1⋯Y_n}` by conjugation.
//!
//! At a fixed point the pair of tangent spaces reduces to the map
//! `df - I : T R̂ → K`, from the tangent space of the quotient `R̂` to the
//! kernel `K` of the differential of the product map. Orientations:
//! - each trace sphere is oriented as the boundary of `{tr X > 2 cos θ}`,
//!   which in the axis `Q` is the outward orientation of `S^2`;
//! - `T R` carries the product orientation in strand order;
//! - `T R̂` is oriented so that (orbit directions, `T R̂`) is positive, the
//!   orbit being oriented by the conjugation action of `i, j, k`;
//! - `K` is oriented so that (`K`, normal) is positive, the normal being
//!   oriented by the product map onto the left-invariant orientation of
//!   `SU(2)`.
//!
//! `ORIENTATION_SIGN` fixes the remaining global sign; it is set so that the
//! trefoil at `α = π/2` has `h = -σ(-1)/2 = 1`.

use braidcore::ColoredBraidWord;
use nalgebra::DMatrix;

use crate::action::braid_act_tangent;
use crate::quat::{dot3, tangent_frame, Quat64};
use crate::solver::{axes_of, Orientation};

pub const ORIENTATION_SIGN: i32 = 1;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LocalSign {
    pub sign: i32,
    /// Condition number of the reduced linearization `df - I`.
    pub condition: f64,
}

fn coords(v: &[Quat64], frames: &[([f64; 3], [f64; 3])]) -> Vec<f64> {
    v.iter().zip(frames).flat_map(|(q, (u, w))| [dot3(q.imag(), *u), dot3(q.imag(), *w)]).collect()
}

/// Orthonormal columns spanning the orthogonal complement of `a`'s columns,
/// oriented so that `[a | complement]` has positive determinant.
fn oriented_complement(a: &DMatrix<f64>) -> DMatrix<f64> {
    let (rows, k) = a.shape();
    let mut padded = DMatrix::zeros(rows, k + rows);
    padded.columns_mut(0, k).copy_from(a);
    padded.columns_mut(k, rows).fill_with_identity();
    let q = padded.qr().q();
    let mut comp = q.columns(k, rows - k).into_owned();
    let mut full = DMatrix::zeros(rows, rows);
    full.columns_mut(0, k).copy_from(a);
    full.columns_mut(k, rows - k).copy_from(&comp);
    if full.determinant() < 0.0 {
        let last = rows - k - 1;
        comp.column_mut(last).neg_mut();
    }
    comp
}

/// The sign at a fixed point `x` of `β` with at least two strands.
pub fn intersection_sign_at(b: &ColoredBraidWord, x: &[Quat64], orientation: Orientation) -> LocalSign {
    let n = x.len();
    let dim = 2 * n;
    let axes = axes_of(x);
    let frames: Vec<_> = axes.iter().map(|q| tangent_frame(*q)).collect();

    // df - I in the frames, column by column
    let mut jac = DMatrix::zeros(dim, dim);
    for i in 0..n {
        for (s, dir) in [frames[i].0, frames[i].1].into_iter().enumerate() {
            let mut v = vec![Quat64::zero(); n];
            v[i] = Quat64::pure(dir);
            let (_, dy) = braid_act_tangent(x, &v, b);
            let c = coords(&dy, &frames);
            for r in 0..dim {
                jac[(r, 2 * i + s)] = c[r] - if r == 2 * i + s { 1.0 } else { 0.0 };
            }
        }
    }

    let basis = [Quat64::i(), Quat64::j(), Quat64::k()];
    let mut orbit = DMatrix::zeros(dim, 3);
    for (col, xi) in basis.iter().enumerate() {
        let v: Vec<Quat64> = x.iter().map(|q| *xi * *q - *q * *xi).collect();
        orbit.column_mut(col).copy_from_slice(&coords(&v, &frames));
    }

    // differential of the product, left-translated to the identity
    let total = x.iter().fold(Quat64::one(), |p, q| p * *q);
    let mut dprod = DMatrix::zeros(3, dim);
    for i in 0..n {
        let left = x[..i].iter().fold(Quat64::one(), |p, q| p * *q);
        let right = x[i + 1..].iter().fold(Quat64::one(), |p, q| p * *q);
        for (s, dir) in [frames[i].0, frames[i].1].into_iter().enumerate() {
            let d = total.conj() * left * Quat64::pure(dir) * right;
            let v = d.imag();
            for r in 0..3 {
                dprod[(r, 2 * i + s)] = v[r];
            }
        }
    }

    let quotient = oriented_complement(&orbit);
    let normal = dprod.transpose();
    // K = complement of the normal, with (K, normal) positive
    let mut kernel = oriented_complement(&normal);
    let mut frame = DMatrix::zeros(dim, dim);
    frame.columns_mut(0, dim - 3).copy_from(&kernel);
    frame.columns_mut(dim - 3, 3).copy_from(&normal);
    if frame.determinant() < 0.0 {
        kernel.column_mut(0).neg_mut();
    }

    let reduced = kernel.transpose() * &jac * &quotient;
    let sv = reduced.clone().singular_values();
    let (smax, smin) = (sv.max(), sv.min());
    let condition = if smin > 0.0 { smax / smin } else { f64::INFINITY };
    let det_sign = if reduced.determinant() > 0.0 { 1 } else { -1 };
    let flip = match orientation {
        Orientation::Standard => 1,
        Orientation::Reversed => -1,
    };
    LocalSign { sign: ORIENTATION_SIGN * flip * det_sign, condition }
}
