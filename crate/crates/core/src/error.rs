use thiserror::Error;

/// Errors raised across the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("group order exceeds the configured cap of {cap}")]
    OrderCapExceeded { cap: usize },
    #[error("permutation degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("not a permutation: {0}")]
    NotAPermutation(String),
    #[error("subgroup is not normal in the given overgroup")]
    NotNormal,
    #[error("division by zero")]
    DivisionByZero,
    #[error("matrix is singular")]
    Singular,
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("module chopping exceeded its budget of {attempts} attempts; retry with another seed")]
    ChopBudgetExceeded { attempts: usize },
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("element does not normalize both bounds of the interval")]
    NotFixed,
    #[error("index sets differ in size: |E(G)| = {species}, |C(G)| = {basis}")]
    SizeMismatch { species: usize, basis: usize },
    #[error("species system is singular")]
    SingularSystem,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0} is not prime")]
    NotPrime(u32),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
