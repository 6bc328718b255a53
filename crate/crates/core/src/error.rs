use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty partition")]
    EmptyPartition,

    #[error("size mismatch: {0}")]
    SizeMismatch(String),

    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("maps live on different super spaces")]
    SpaceMismatch,

    #[error("size guard exceeded: {what} = {size} > {limit}")]
    SizeGuard {
        what: &'static str,
        size: usize,
        limit: usize,
    },

    #[error("hypothesis fails: {0}")]
    HypothesisFails(String),

    #[error("parse error: {0}")]
    Parse(String),
}
