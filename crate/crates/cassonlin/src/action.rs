use braidcore::{ColoredBraidWord, Coloring};
use num_traits::Float;

use crate::quat::{Quat, Quat64};

fn act_letter<T: Float>(x: &mut [Quat<T>], letter: i32) {
    let a = letter.unsigned_abs() as usize - 1;
    let (u, v) = (x[a], x[a + 1]);
    if letter > 0 {
        x[a] = u * v * u.inverse();
        x[a + 1] = u;
    } else {
        x[a] = v;
        x[a + 1] = v.inverse() * u * v;
    }
}

fn act_letter_tangent<T: Float>(x: &mut [Quat<T>], dx: &mut [Quat<T>], letter: i32) {
    let a = letter.unsigned_abs() as usize - 1;
    let (u, v, du, dv) = (x[a], x[a + 1], dx[a], dx[a + 1]);
    let (ui, vi) = (u.inverse(), v.inverse());
    if letter > 0 {
        let p = u * v * ui;
        dx[a] = du * v * ui + u * dv * ui - p * du * ui;
        dx[a + 1] = du;
        x[a] = p;
        x[a + 1] = u;
    } else {
        let q = vi * u * v;
        dx[a] = dv;
        dx[a + 1] = -(vi * dv * q) + vi * du * v + vi * u * dv;
        x[a] = v;
        x[a + 1] = q;
    }
}

/// `X β` for a tuple of unit quaternions: the tuple `ρ(x_i β)` of the
/// representation `x_i ↦ X_i`. Letters act from the right end of the word,
/// `(X_1, X_2) σ_1 = (X_1 X_2 X_1^{-1}, X_1)`.
pub fn braid_act_su2<T: Float>(x: &[Quat<T>], b: &ColoredBraidWord) -> Vec<Quat<T>> {
    assert_eq!(x.len(), b.strands());
    let mut y = x.to_vec();
    for &l in b.letters().iter().rev() {
        act_letter(&mut y, l);
    }
    y
}

/// `(X β, d(X β)[V])`, the action and its exact differential along `V`.
pub fn braid_act_tangent<T: Float>(
    x: &[Quat<T>],
    v: &[Quat<T>],
    b: &ColoredBraidWord,
) -> (Vec<Quat<T>>, Vec<Quat<T>>) {
    assert_eq!(x.len(), b.strands());
    assert_eq!(v.len(), b.strands());
    let (mut y, mut dy) = (x.to_vec(), v.to_vec());
    for &l in b.letters().iter().rev() {
        act_letter_tangent(&mut y, &mut dy, l);
    }
    (y, dy)
}

/// The abelian tuple `X_i = e^{ε_{c_i} i α_{c_i}}`, with `alpha` and `eps`
/// indexed by color.
pub fn abelian_rep(alpha: &[f64], eps: &[i32], coloring: &Coloring) -> Vec<Quat64> {
    coloring
        .colors()
        .iter()
        .map(|&c| Quat64::from_polar(f64::from(eps[c - 1]) * alpha[c - 1], [1.0, 0.0, 0.0]))
        .collect()
}

/// Largest `‖[X_i, X_j]‖` over pairs.
pub fn max_commutator(x: &[Quat64]) -> f64 {
    let mut m = 0.0f64;
    for i in 0..x.len() {
        for j in i + 1..x.len() {
            m = m.max(x[i].commutator(&x[j]).norm());
        }
    }
    m
}

pub fn is_abelian(x: &[Quat64], tol: f64) -> bool {
    max_commutator(x) < tol
}

/// Product `X_1 ⋯ X_n`.
pub fn product(x: &[Quat64]) -> Quat64 {
    x.iter().fold(Quat64::one(), |p, q| p * *q)
}
