use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// An argument is outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// An operation was applied to the wrong kind of value.
    #[error("usage error: {0}")]
    Usage(String),

    #[error("line {line}: {message}")]
    Ingestion { line: usize, message: String },

    #[error("unknown graph `{name}` (valid names: {})", valid.join(", "))]
    UnknownGraph { name: String, valid: Vec<String> },

    /// The graph does not satisfy a structural requirement (regularity,
    /// girth, degree).
    #[error("{0}")]
    Certification(String),

    #[error("generation failed: {0}")]
    Generation(String),
}
