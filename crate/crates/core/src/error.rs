use thiserror::Error;

/// Errors raised by the algebra engine and the report builders.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("variable count mismatch: expected {expected}, found {found}")]
    ArityMismatch { expected: usize, found: usize },

    #[error("resource exhausted: {0}")]
    ResourceExhausted(String),

    #[error("ideal is not zero-dimensional: variable x{0} has no pure-power leading term")]
    NotZeroDimensional(usize),

    #[error("no stabilization below truncation cap {cap}")]
    NoStabilization { cap: u32 },

    #[error("splitting mismatch: sum of products differs from the potential")]
    SplittingMismatch,

    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("cache i/o: {0}")]
    Io(#[from] std::io::Error),

    #[error("cache encoding: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// True for the errors the CLI maps to the "resource cap" exit code.
    pub fn is_resource_cap(&self) -> bool {
        matches!(
            self,
            Error::ResourceExhausted(_) | Error::NoStabilization { .. }
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
