use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Float;
use serde::{Deserialize, Serialize};

use laurent::Complex;

/// A quaternion `a + b i + c j + d k`; unit quaternions are elements of
/// `SU(2)` through `[[a + b i, c + d i], [-c + d i, a - b i]]`.
#[derive(Clone, Copy, Debug, PartialEq, Default, Serialize, Deserialize)]
pub struct Quat<T> {
    pub a: T,
    pub b: T,
    pub c: T,
    pub d: T,
}

pub type Quat64 = Quat<f64>;

impl<T: Float> Quat<T> {
    pub fn new(a: T, b: T, c: T, d: T) -> Self {
        Self { a, b, c, d }
    }

    pub fn one() -> Self {
        Self::new(T::one(), T::zero(), T::zero(), T::zero())
    }

    pub fn zero() -> Self {
        Self::new(T::zero(), T::zero(), T::zero(), T::zero())
    }

    pub fn i() -> Self {
        Self::new(T::zero(), T::one(), T::zero(), T::zero())
    }

    pub fn j() -> Self {
        Self::new(T::zero(), T::zero(), T::one(), T::zero())
    }

    pub fn k() -> Self {
        Self::new(T::zero(), T::zero(), T::zero(), T::one())
    }

    pub fn pure(v: [T; 3]) -> Self {
        Self::new(T::zero(), v[0], v[1], v[2])
    }

    /// `cos θ + sin θ Q` for a pure unit `Q`.
    pub fn from_polar(theta: T, q: [T; 3]) -> Self {
        let (s, c) = theta.sin_cos();
        Self::new(c, s * q[0], s * q[1], s * q[2])
    }

    /// `(θ, Q)` with `θ ∈ [0, π]`; `None` when the trace is `±2`.
    pub fn to_polar(&self) -> Option<(T, [T; 3])> {
        let v = self.imag();
        let s = norm3(v);
        if s <= T::epsilon() * T::from(16).unwrap() {
            return None;
        }
        Some((s.atan2(self.a), [v[0] / s, v[1] / s, v[2] / s]))
    }

    pub fn as_array(&self) -> [T; 4] {
        [self.a, self.b, self.c, self.d]
    }

    pub fn from_array(v: [T; 4]) -> Self {
        Self::new(v[0], v[1], v[2], v[3])
    }

    pub fn imag(&self) -> [T; 3] {
        [self.b, self.c, self.d]
    }

    pub fn conj(&self) -> Self {
        Self::new(self.a, -self.b, -self.c, -self.d)
    }

    pub fn norm_sqr(&self) -> T {
        self.a * self.a + self.b * self.b + self.c * self.c + self.d * self.d
    }

    pub fn norm(&self) -> T {
        self.norm_sqr().sqrt()
    }

    pub fn normalize(&self) -> Self {
        self.scale(self.norm().recip())
    }

    pub fn inverse(&self) -> Self {
        self.conj().scale(self.norm_sqr().recip())
    }

    pub fn scale(&self, s: T) -> Self {
        Self::new(self.a * s, self.b * s, self.c * s, self.d * s)
    }

    /// Matrix trace, `2a`.
    pub fn trace(&self) -> T {
        self.a + self.a
    }

    pub fn dot(&self, o: &Self) -> T {
        self.a * o.a + self.b * o.b + self.c * o.c + self.d * o.d
    }

    pub fn commutator(&self, o: &Self) -> Self {
        *self * *o - *o * *self
    }

    /// `exp(v)` for a pure quaternion `v`.
    pub fn exp_pure(v: [T; 3]) -> Self {
        let t = norm3(v);
        if t == T::zero() {
            return Self::one();
        }
        Self::from_polar(t, [v[0] / t, v[1] / t, v[2] / t])
    }

    pub fn to_matrix(&self) -> [[Complex<T>; 2]; 2] {
        [
            [Complex::new(self.a, self.b), Complex::new(self.c, self.d)],
            [Complex::new(-self.c, self.d), Complex::new(self.a, -self.b)],
        ]
    }
}

impl<T: Float> Add for Quat<T> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.a + o.a, self.b + o.b, self.c + o.c, self.d + o.d)
    }
}

impl<T: Float> Sub for Quat<T> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(self.a - o.a, self.b - o.b, self.c - o.c, self.d - o.d)
    }
}

impl<T: Float> Neg for Quat<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.a, -self.b, -self.c, -self.d)
    }
}

impl<T: Float> Mul for Quat<T> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        Self::new(
            self.a * o.a - self.b * o.b - self.c * o.c - self.d * o.d,
            self.a * o.b + self.b * o.a + self.c * o.d - self.d * o.c,
            self.a * o.c - self.b * o.d + self.c * o.a + self.d * o.b,
            self.a * o.d + self.b * o.c - self.c * o.b + self.d * o.a,
        )
    }
}

pub fn norm3<T: Float>(v: [T; 3]) -> T {
    (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt()
}

pub fn cross<T: Float>(u: [T; 3], v: [T; 3]) -> [T; 3] {
    [u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]]
}

pub fn dot3<T: Float>(u: [T; 3], v: [T; 3]) -> T {
    u[0] * v[0] + u[1] * v[1] + u[2] * v[2]
}

/// An orthonormal pair `(u, w)` with `(q, u, w)` positively oriented, for a unit `q`.
pub fn tangent_frame<T: Float>(q: [T; 3]) -> ([T; 3], [T; 3]) {
    let axis = if q[0].abs() <= q[1].abs() && q[0].abs() <= q[2].abs() {
        [T::one(), T::zero(), T::zero()]
    } else if q[1].abs() <= q[2].abs() {
        [T::zero(), T::one(), T::zero()]
    } else {
        [T::zero(), T::zero(), T::one()]
    };
    let u = cross(q, axis);
    let n = norm3(u);
    let u = [u[0] / n, u[1] / n, u[2] / n];
    (u, cross(q, u))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_relations() {
        let (i, j, k) = (Quat64::i(), Quat64::j(), Quat64::k());
        assert_eq!(i * j, k);
        assert_eq!(j * k, i);
        assert_eq!(k * i, j);
        assert_eq!(i * i, -Quat64::one());
    }

    #[test]
    fn frame_is_oriented() {
        for q in [[1.0, 0.0, 0.0], [0.0, 0.0, -1.0], [0.6, 0.0, 0.8], [0.48, -0.6, 0.64]] {
            let (u, w) = tangent_frame(q);
            assert!(dot3(q, u).abs() < 1e-15 && dot3(u, w).abs() < 1e-15);
            assert!((dot3(cross(q, u), w) - 1.0).abs() < 1e-15);
        }
    }

    #[test]
    fn polar_round_trip_and_matrix_product() {
        let x = Quat64::from_polar(0.7, [0.0, 0.6, 0.8]);
        let (t, q) = x.to_polar().unwrap();
        assert!((t - 0.7).abs() < 1e-15 && (q[1] - 0.6).abs() < 1e-15);
        assert!(Quat64::one().to_polar().is_none());
        let y = Quat64::new(0.5, -0.5, 0.5, 0.5);
        let (mx, my, mxy) = (x.to_matrix(), y.to_matrix(), (x * y).to_matrix());
        for r in 0..2 {
            for c in 0..2 {
                let p = mx[r][0] * my[0][c] + mx[r][1] * my[1][c];
                assert!((p - mxy[r][c]).norm() < 1e-15);
            }
        }
    }
}
