use num_complex::Complex;
use num_traits::Float;

use crate::error::LaurentError;

/// A point `ω` of the torus `T^μ` together with pinned square roots.
///
/// `roots[i]^2 == omegas[i]`, and roots built from an angle or from the
/// principal branch are `e^{iα}` with `α ∈ [0, π)`.
#[derive(Clone, Debug, PartialEq)]
pub struct TorusPoint<T> {
    omegas: Vec<Complex<T>>,
    roots: Vec<Complex<T>>,
    tolerance: T,
}

impl<T: Float> TorusPoint<T> {
    fn default_tolerance() -> T {
        T::from(1e-9).unwrap()
    }

    /// `ω_i = e^{2iα_i}`, `ω_i^{1/2} = e^{iα_i}`.
    pub fn from_angles(alpha: &[T]) -> Self {
        let roots: Vec<_> = alpha.iter().map(|&a| Complex::from_polar(T::one(), a)).collect();
        let omegas = roots.iter().map(|r| r * r).collect();
        Self { omegas, roots, tolerance: Self::default_tolerance() }
    }

    /// Unit-modulus `ω` with the principal square root `e^{iα}`, `α = arg(ω)/2 ∈ [0, π)`.
    pub fn from_omegas(omegas: &[Complex<T>]) -> Result<Self, LaurentError> {
        let tol = Self::default_tolerance();
        let two_pi = T::from(std::f64::consts::TAU).unwrap();
        let mut alpha = Vec::with_capacity(omegas.len());
        for (i, w) in omegas.iter().enumerate() {
            let r = w.norm();
            if (r - T::one()).abs() > tol {
                return Err(LaurentError::OffCircle(i, r.to_f64().unwrap()));
            }
            let mut a = w.arg();
            if a < T::zero() {
                a = a + two_pi;
            }
            alpha.push(a / (T::one() + T::one()));
        }
        let mut z = Self::from_angles(&alpha);
        z.omegas = omegas.to_vec();
        Ok(z)
    }

    /// Point with explicitly chosen roots (`ω_i = roots_i^2`).
    pub fn from_roots(roots: &[Complex<T>]) -> Result<Self, LaurentError> {
        let tol = Self::default_tolerance();
        for (i, r) in roots.iter().enumerate() {
            if (r.norm() - T::one()).abs() > tol {
                return Err(LaurentError::OffCircle(i, r.norm().to_f64().unwrap()));
            }
        }
        let omegas = roots.iter().map(|r| r * r).collect();
        Ok(Self { omegas, roots: roots.to_vec(), tolerance: tol })
    }

    pub fn with_tolerance(mut self, tolerance: T) -> Self {
        self.tolerance = tolerance;
        self
    }

    pub fn mu(&self) -> usize {
        self.omegas.len()
    }

    pub fn omegas(&self) -> &[Complex<T>] {
        &self.omegas
    }

    pub fn roots(&self) -> &[Complex<T>] {
        &self.roots
    }

    pub fn tolerance(&self) -> T {
        self.tolerance
    }

    /// Half-angles `α_i = arg(ω_i^{1/2})`.
    pub fn angles(&self) -> Vec<T> {
        self.roots.iter().map(|r| r.arg()).collect()
    }

    /// No coordinate equals `1`.
    pub fn in_t_star(&self) -> bool {
        self.omegas.iter().all(|w| (w - Complex::new(T::one(), T::zero())).norm() > self.tolerance)
    }

    /// Coordinatewise conjugate, on the principal branch.
    pub fn conj(&self) -> Self {
        let omegas: Vec<_> = self.omegas.iter().map(|w| w.conj()).collect();
        Self::from_omegas(&omegas).unwrap().with_tolerance(self.tolerance)
    }

    /// Replace `ω_k` by `ω_k^{-1}`, on the principal branch.
    pub fn invert_coordinate(&self, k: usize) -> Self {
        let mut omegas = self.omegas.clone();
        omegas[k] = omegas[k].conj();
        Self::from_omegas(&omegas).unwrap().with_tolerance(self.tolerance)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn principal_branch() {
        let z = TorusPoint::from_omegas(&[Complex::new(-1.0, 0.0)]).unwrap();
        assert!((z.roots()[0] - Complex::new(0.0, 1.0)).norm() < 1e-15);
        let w = TorusPoint::from_omegas(&[Complex::from_polar(1.0, -0.5)]).unwrap();
        let a = w.angles()[0];
        assert!(a > 0.0 && a < std::f64::consts::PI);
    }

    #[test]
    fn off_circle() {
        assert!(TorusPoint::from_omegas(&[Complex::new(2.0, 0.0)]).is_err());
    }

    #[test]
    fn t_star() {
        assert!(!TorusPoint::from_angles(&[0.0f64, 1.0]).in_t_star());
        assert!(TorusPoint::from_angles(&[0.3f64, 1.0]).in_t_star());
    }
}
