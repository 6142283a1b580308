use alexander::AlexanderError;
use braidcore::BraidError;
use gassner::GassnerError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CassonLinError {
    #[error("the Alexander polynomial vanishes at a point of S(alpha)")]
    NotDefinedHere,
    #[error("fixed point is not transverse (condition number {condition:.3e}); perturb alpha by about 1e-3")]
    NonTransverse { condition: f64 },
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error(transparent)]
    Alexander(#[from] AlexanderError),
    #[error(transparent)]
    Braid(#[from] BraidError),
    #[error(transparent)]
    Gassner(#[from] GassnerError),
}
