//! Command-line plumbing: file input, run reports, and the verification
//! suites behind `verify` and the acceptance harness.

mod error;
mod io;
pub mod random;
mod report;
pub mod suites;
mod signature_formula;
mod verify;

pub use error::CliError;
pub use io::{check_arity, parse_point, read_braid, read_seifert, torus_from_arguments};
pub use report::{Budget, Check, Conventions, RunReport};
pub use signature_formula::{signature_formula_demo, signature_formula_point, SignatureFormulaRow};
pub use verify::{verify, Scope, IDENTITY_BRAIDS, LONG_BRAIDS, TORRES_CLOSURES};
