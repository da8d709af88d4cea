use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not a prime below 2^31")]
    NotPrime(u64),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),
    #[error("invalid module: {0}")]
    InvalidModule(String),
    #[error("algebra mismatch: {0}")]
    AlgebraMismatch(String),
    #[error("map is not well defined on the tensor product: {0}")]
    IllDefined(String),
    #[error("subspace is not stable: {0}")]
    NotStable(String),
    #[error("zero module")]
    ZeroModule,
    #[error("homomorphism is not injective: {0}")]
    NotInjective(String),
    #[error("module is not projective: {0}")]
    NotProjective(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
    #[error("invalid grouplike: {0}")]
    InvalidGrouplike(String),
    #[error("invalid coring: {0}")]
    InvalidCoring(String),
    #[error("internal disagreement between equivalent criteria: {0}")]
    InternalDisagreement(String),
    #[error("search budget exhausted: {0}")]
    Budget(String),
    #[error("malformed scene: {0}")]
    Scene(String),
}

pub type Result<T> = std::result::Result<T, Error>;
