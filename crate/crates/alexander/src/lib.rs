//! Potential function and multivariable Alexander polynomial of a colored
//! braid closure, computed from the reduced colored Gassner matrix.
//!
//! `∇` is normalized so that `∇(t^{-1}) = (-1)^ν ∇(t)` for a `ν`-component
//! closure and the positive Hopf link has `∇ = 1`. `Δ` is returned in unit
//! normal form.

mod criteria;
mod error;
mod polys;
mod potential;

pub use criteria::{
    casson_lin_defined, diagonal_check, reducible_nonabelian_exists, sign_points, symmetry_holds, torres_check,
    vanishing_tolerance, TorresReport,
};
pub use error::AlexanderError;
pub use polys::{alexander_from_potential, alexander_poly, link_polynomials, LinkPolynomials};
pub use potential::{potential, potential_literal, Potential};
