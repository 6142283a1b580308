//! Exact arithmetic in `Z[t_1^{±1/2}, …, t_μ^{±1/2}]`.
//!
//! Exponents are stored in half-steps: a stored exponent `2` is `t^1`, a
//! stored `1` is `t^{1/2}`. Integral polynomials (all stored exponents even)
//! form the ring of ordinary Laurent polynomials.
//!
//! The polynomial and matrix types are generic over the coefficient ring
//! (any `num_integer::Integer`); the rest of the workspace uses the
//! arbitrary-precision aliases [`Poly`] and [`PolyMat`]. Torus points are
//! generic over `num_traits::Float`, with [`Torus`] fixing `f64`.

mod error;
mod matrix;
mod poly;
mod serial;
mod torus;

pub use error::LaurentError;
pub use matrix::PolyMatrix;
pub use poly::{Coeff, LaurentPoly};
pub use serial::{poly_from_json, poly_to_json, PolyTerm};
pub use torus::TorusPoint;

pub use num_bigint::BigInt;
pub use num_complex::Complex;

pub type Poly = LaurentPoly<BigInt>;
pub type PolyMat = PolyMatrix<BigInt>;
pub type Torus = TorusPoint<f64>;
pub type C64 = Complex<f64>;
