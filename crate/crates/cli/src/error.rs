use thiserror::Error;

/// Everything that makes a run unable to produce results. Identity
/// failures are not errors; they are recorded in the report.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Laurent(#[from] laurent::LaurentError),
    #[error(transparent)]
    Braid(#[from] braidcore::BraidError),
    #[error(transparent)]
    Gassner(#[from] gassner::GassnerError),
    #[error(transparent)]
    Alexander(#[from] alexander::AlexanderError),
    #[error(transparent)]
    Signature(#[from] signature::SignatureError),
    #[error(transparent)]
    CassonLin(#[from] cassonlin::CassonLinError),
}
