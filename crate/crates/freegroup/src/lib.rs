//! The free group `F_n` on `x_1, …, x_n`, its integral group ring, and the
//! right action of the braid group by automorphisms.
//!
//! Letters are signed 1-based generator indices, as for braids. The same
//! word type also carries words in the alternative generators
//! `g_i = x_1⋯x_i`; which generating set a word refers to is up to the caller.

mod error;
mod psi;
mod ring;
mod word;

pub use error::FreeGroupError;
pub use psi::Psi;
pub use ring::{fox_derivative, fox_derivative_gbasis, fox_derivative_gbasis_chain, GroupRingElement};
pub use word::{action_images, braid_act, FreeWord};
