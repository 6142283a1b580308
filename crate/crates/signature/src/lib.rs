//! Multivariable signatures and nullities of colored links from generalized
//! Seifert matrices, with the parity, crossing-change and two-color
//! Casson-Lin formulas as checkable predicates.
//!
//! Seifert systems are input data; [`library`] ships a few hand-derived ones.

mod error;
mod form;
mod relations;
pub mod library;
mod system;

pub use error::SignatureError;
pub use form::{hermitian_form, signature_nullity, SignaturePoint};
pub use relations::{
    crossing_change_delta, diagonal_relation_holds, parity_check, signature_side, signature_side_four_term, ParityReport,
};
pub use system::{sign_key, sign_vector, SeifertMeta, SeifertSystem, SignMask};
