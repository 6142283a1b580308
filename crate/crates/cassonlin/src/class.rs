use serde::Serialize;

use crate::action::max_commutator;
use crate::quat::{cross, dot3, norm3, Quat64};

/// A conjugacy class of irreducible representations, stored through its
/// canonical representative: `X_1` has axis `i`, and the first `X_j` not
/// commuting with `X_1` has axis in the upper half of the `(i, j)` plane.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RepClass {
    pub representative: Vec<Quat64>,
    /// Traces of `X_i X_j` and `X_i X_j X_k`, `i < j < k`.
    pub fingerprint: Vec<f64>,
    /// `max ‖[X_i, X_j]‖`; zero exactly on abelian tuples.
    pub commutator: f64,
}

fn conjugate(x: &[Quat64], g: Quat64) -> Vec<Quat64> {
    let gi = g.conj();
    x.iter().map(|q| (g * *q * gi).normalize()).collect()
}

/// Unit quaternion whose conjugation action rotates the unit vector `u` onto `v`.
fn rotation_taking(u: [f64; 3], v: [f64; 3]) -> Quat64 {
    let g = Quat64::one() - Quat64::pure(v) * Quat64::pure(u);
    if g.norm() > 1e-8 {
        return g.normalize();
    }
    let (w, _) = crate::quat::tangent_frame(u);
    Quat64::pure(w)
}

pub fn canonicalize(x: &[Quat64]) -> Vec<Quat64> {
    let axis = |q: &Quat64| q.to_polar().map(|(_, a)| a);
    let Some(a1) = x.first().and_then(axis) else {
        return x.to_vec();
    };
    let y = conjugate(x, rotation_taking(a1, [1.0, 0.0, 0.0]));
    let second = y.iter().skip(1).filter_map(axis).find(|a| norm3(cross(*a, [1.0, 0.0, 0.0])) > 1e-8);
    let Some(a) = second else {
        return y;
    };
    // rotate about i so that (a_j, a_k) points along +j
    let phi = -a[2].atan2(a[1]);
    conjugate(&y, Quat64::new((phi / 2.0).cos(), (phi / 2.0).sin(), 0.0, 0.0))
}

pub fn fingerprint(x: &[Quat64]) -> Vec<f64> {
    let n = x.len();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            out.push((x[i] * x[j]).trace());
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                out.push((x[i] * x[j] * x[k]).trace());
            }
        }
    }
    out
}

pub fn fingerprint_distance(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

impl RepClass {
    pub fn from_point(x: &[Quat64]) -> Self {
        let representative = canonicalize(x);
        Self { fingerprint: fingerprint(&representative), commutator: max_commutator(&representative), representative }
    }
}

/// Distance from `x` to the conjugation orbit of the abelian tuple whose
/// axes are `signs[i] · i`, measured on axes.
pub fn distance_to_abelian_orbit(x: &[Quat64], signs: &[f64]) -> f64 {
    let axes: Vec<[f64; 3]> = x.iter().map(|q| q.to_polar().map_or([1.0, 0.0, 0.0], |(_, a)| a)).collect();
    let mut mean = [0.0; 3];
    for (a, s) in axes.iter().zip(signs) {
        for k in 0..3 {
            mean[k] += s * a[k];
        }
    }
    let n = norm3(mean);
    if n < 1e-12 {
        return f64::INFINITY;
    }
    let v = [mean[0] / n, mean[1] / n, mean[2] / n];
    axes.iter()
        .zip(signs)
        .map(|(a, s)| (2.0 - 2.0 * s * dot3(*a, v)).max(0.0).sqrt())
        .fold(0.0, f64::max)
}
