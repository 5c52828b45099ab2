use thiserror::Error;

/// Errors raised by the root-system and grading machinery.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// A (family, rank) pair that is not in the Cartan–Killing list.
    #[error("not a simple type: {0}")]
    Classification(String),
    #[error("invalid argument: {0}")]
    Argument(String),
    /// A matrix that violates the Cartan axioms or is not of finite type.
    #[error("invalid Cartan matrix: {0}")]
    Structure(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("out of range: {0}")]
    Range(String),
    /// A proved identity failed on concrete data. Never expected to fire.
    #[error("internal consistency failure: {0}")]
    Consistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
