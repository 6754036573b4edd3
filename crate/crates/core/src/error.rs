use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CycError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("zero has no multiplicative order")]
    ZeroHasNoOrder,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("parent mismatch: {0} vs {1}")]
    ParentMismatch(String, String),
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("slot {slot} out of range for rank {rank}")]
    SlotOutOfRange { slot: usize, rank: usize },
    #[error("rank {0} exceeds the supported maximum")]
    RankTooLarge(usize),
    #[error("element is singular: {witness}")]
    Singular { witness: String },
    #[error("linear system of dimension {0} is too large for general inversion")]
    TooLarge(usize),
    #[error(transparent)]
    Field(#[from] CycError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("n must lie in 2..=15 (got {0})")]
    InvalidN(usize),
    #[error("exponent {e} is not coprime to n^2 = {modulus}")]
    NotPrimitive { e: i64, modulus: usize },
    #[error("{what} leaves the subalgebra A: offending term {witness}")]
    Closure { what: String, witness: String },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Invalid command-line or configuration input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{0}")]
pub struct InputError(pub String);
