use thiserror::Error;

/// Failure modes shared by every module.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("parse error: {0}")]
    Parse(String),

    /// A documented precondition of an operation does not hold. `label`
    /// names the inequality or rule that failed.
    #[error("precondition failed [{label}]: {detail}")]
    Precondition { label: String, detail: String },

    #[error("enumeration cap exceeded: {what} is {value}, cap {cap}")]
    CapExceeded { what: String, value: usize, cap: usize },

    #[error("degenerate functional (all coefficients vanish)")]
    Degenerate,

    #[error("point outside the box")]
    OutsideBox,

    #[error("not found: {0}")]
    NotFound(String),

    #[error("ambiguous result, candidates {candidates:?}")]
    Ambiguous { candidates: Vec<usize> },
}

impl Error {
    pub fn precondition(label: impl Into<String>, detail: impl Into<String>) -> Self {
        Error::Precondition { label: label.into(), detail: detail.into() }
    }

    pub fn invalid(detail: impl Into<String>) -> Self {
        Error::Invalid(detail.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
