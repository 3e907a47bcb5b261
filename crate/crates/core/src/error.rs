use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("valuation of zero is undefined")]
    UndefinedValuation,
    #[error("element is not a unit of the valuation ring")]
    NotAUnit,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("operation requires a non-null tropical polynomial")]
    EmptyPolynomial,
    #[error("projective point needs at least one finite coordinate")]
    InvalidProjectivePoint,
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("Hilbert function did not stabilize up to degree {d_max}; increase d_max")]
    NoStabilization { d_max: u32 },
    #[error("degenerate input: {0}")]
    DegenerateInput(String),
    #[error("wrong Hilbert polynomial: expected dim I_d = {expected}, found {found}")]
    WrongHilbertPolynomial { expected: usize, found: usize },
    #[error("point lies on the tropical variety; no witness polynomial exists")]
    NoWitness,
    #[error("non-generic input: {0}")]
    NonGenericInput(String),
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
