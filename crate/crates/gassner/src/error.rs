use braidcore::BraidError;
use laurent::LaurentError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GassnerError {
    #[error(transparent)]
    Braid(#[from] BraidError),
    #[error(transparent)]
    Laurent(#[from] LaurentError),
    /// Two computations that must agree did not; always a bug.
    #[error("internal mismatch: {0}")]
    InternalMismatch(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
}
