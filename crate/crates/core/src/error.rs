use thiserror::Error;

/// Errors raised by the exact kernels and the tensor operations built on them.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("unsupported format: {0}")]
    Format(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("structure error: {0}")]
    Structure(String),
    #[error("series error: {0}")]
    Series(String),
    #[error("resultant undefined: {0}")]
    UndefinedResultant(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("zero pivot: {0}")]
    Pivot(String),
    #[error("size limit exceeded: {0}")]
    SizeLimit(String),
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("integer overflow: {0}")]
    Overflow(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
