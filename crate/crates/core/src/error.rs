use thiserror::Error;

/// Everything that can go wrong inside the kernel or while loading input.
///
/// Identity failures are not errors: they are reported as verdicts. Errors are
/// reserved for malformed input, violated preconditions and internal limits.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("truncation order mismatch: {left} vs {right}")]
    TruncationMismatch { left: usize, right: usize },

    #[error("not invertible: {0}")]
    NotInvertible(String),

    #[error("parse error in {field}: {message}")]
    Parse { field: String, message: String },

    #[error("schema error: {0}")]
    Schema(String),

    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),

    #[error("parity mismatch: {0}")]
    ParityMismatch(String),

    #[error("element is not even: {0}")]
    EvennessViolation(String),

    #[error("word of length {len} exceeds the degree cap of {cap} letters")]
    DegreeCapExceeded { len: usize, cap: usize },

    #[error("leg count mismatch: {left} vs {right}")]
    LegCountMismatch { left: usize, right: usize },

    #[error("bad leg specification: {0}")]
    BadLeg(String),

    #[error("u and u^-1 are not mutually inverse: {0}")]
    UInverseMismatch(String),

    #[error("twist rejected: {0}")]
    InvalidTwist(String),

    #[error("representation rejected: {0}")]
    InvalidRepresentation(String),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn parse(field: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            field: field.into(),
            message: message.into(),
        }
    }
}
