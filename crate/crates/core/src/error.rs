use thiserror::Error;

use crate::field::FieldTag;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("field tag mismatch: {left} vs {right}")]
    TagMismatch { left: FieldTag, right: FieldTag },
    #[error("sqrt({0}) is not a square-free integer > 1")]
    NotSquareFree(u64),
    #[error("cannot parse field value {0:?}")]
    Parse(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("matrix is singular")]
    Singular,
    #[error("rows are linearly dependent")]
    DependentRows,
    #[error("zero vector")]
    ZeroVector,
    #[error("point count {count} out of range 1..={max}")]
    CountOutOfRange { count: usize, max: usize },
    #[error("{0}")]
    Invalid(String),
    #[error("{0}")]
    Precondition(String),
    #[error("input too large: {0}")]
    TooLarge(String),
    #[error("unknown fixture id {0:?}")]
    UnknownFixture(String),
    #[error("no match: {0}")]
    NoMatch(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
