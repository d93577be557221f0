use std::io;

use thiserror::Error;

/// Errors produced by code construction, signal analysis and the experiment harness.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("invalid generator: {0}")]
    InvalidGenerator(String),

    #[error("enumeration capacity exceeded: k = {k} > {max}")]
    Capacity { k: usize, max: usize },

    #[error("construction invariant violated: {0}")]
    ConstructionInvariant(String),

    #[error("PAPR undefined for a signal with zero mean power")]
    UndefinedPapr,

    #[error("insufficient data: {0}")]
    InsufficientData(String),

    #[error("cannot parse code spec `{spec}`: {reason}")]
    Parse { spec: String, reason: String },

    #[error(transparent)]
    Io(#[from] io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}
