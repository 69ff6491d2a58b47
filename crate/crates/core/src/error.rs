use thiserror::Error;

/// Errors shared by every stage of the pipeline.
///
/// The variants line up with the CLI exit codes: `Parse` is a malformed
/// description, `Shape` and `InvalidInput` are well-formed but invalid
/// requests, and `Unsupported` marks cases with no established answer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("unsupported case: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
