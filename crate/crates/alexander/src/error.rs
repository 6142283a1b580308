use braidcore::BraidError;
use gassner::GassnerError;
use laurent::LaurentError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum AlexanderError {
    #[error(transparent)]
    Braid(#[from] BraidError),
    #[error(transparent)]
    Gassner(#[from] GassnerError),
    #[error(transparent)]
    Laurent(#[from] LaurentError),
    /// The potential's defining quotient was not exact; always a bug.
    #[error("potential numerator is not divisible by its denominator")]
    NotDivisible,
    #[error("potential has exponents that cannot be halved")]
    HalfExponentResidue,
    #[error("expected {expected} components, found {found}")]
    WrongComponentCount { expected: usize, found: usize },
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
}
