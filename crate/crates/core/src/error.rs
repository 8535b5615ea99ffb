use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    Argument(String),
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("contract violation: {0}")]
    Contract(String),
    #[error("point is outside the moduli set: {0}")]
    Infeasible(String),
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
    #[error("numeric failure: {0}")]
    Numeric(String),
    #[error("transcription fault: {0}")]
    Transcription(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn arg<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Argument(msg.into()))
}
