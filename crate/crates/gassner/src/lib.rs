//! Colored Gassner matrices.
//!
//! Matrices act on row vectors from the right and a word's matrix is the
//! product of its letters' matrices in word order. Entry `(i, j)` of the
//! unreduced matrix is `ψ(∂(x_i β)/∂x_j)`, where `ψ` sends `x_k` to the
//! variable of the color at position `k` of the top level.

mod error;
mod eval;
mod identities;
mod matrix;

pub use error::GassnerError;
pub use eval::{evaluate, fixed_vector_check, fixed_vector_residual};
pub use identities::{identity_suite, IdentityCheck, IdentityReport, Outcome};
pub use matrix::{
    beta_monomial, change_of_basis, gassner_blocks, gassner_fox, gassner_gbasis, gassner_gbasis_direct,
    gassner_reduced, gassner_unreduced, generator_block, minor_det, prefix_monomials, Basis, GassnerMatrix,
};
