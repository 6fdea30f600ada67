use thiserror::Error;

/// Failure modes shared by every solver entry point.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid instance: {0}")]
    InvalidInstance(String),
    #[error("instance is unbounded: {0}")]
    Unbounded(String),
    #[error("composition infeasible: S_min is not contained in S_max")]
    InvalidComposition,
    #[error("oracle guard exceeded: {0}")]
    GuardExceeded(String),
}

pub type Result<T> = std::result::Result<T, Error>;
