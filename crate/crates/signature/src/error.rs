use alexander::AlexanderError;
use braidcore::BraidError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SignatureError {
    #[error("coordinate {0} of the point equals 1")]
    NotInTorusStar(usize),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("invalid Seifert system: {0}")]
    InvalidSystem(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("signature changed by {0}, expected 0 or -2")]
    UnexpectedDelta(i64),
    #[error("nullity {nullity} at angles {angles:?}")]
    NullityPositive { angles: Vec<f64>, nullity: usize },
    #[error(transparent)]
    Alexander(#[from] AlexanderError),
    #[error(transparent)]
    Braid(#[from] BraidError),
}
