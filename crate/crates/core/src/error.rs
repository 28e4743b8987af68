use thiserror::Error;

/// Errors raised by the algebra engine and its text front end.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A mathematical precondition does not hold (zero divisor, element outside the monoid, ...).
    #[error("domain error: {0}")]
    Domain(String),
    /// Malformed input text. `offset` is a byte offset into the input.
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },
    /// Well-formed input that names a value outside the allowed range (negative exponent, zero denominator, ...).
    #[error("semantic error at byte {offset}: {message}")]
    Semantic { offset: usize, message: String },
    /// A computation would exceed a configured size limit.
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
