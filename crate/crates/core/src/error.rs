use thiserror::Error;

/// Errors raised by the exact algebra routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("inversion of zero")]
    ZeroInverse,
    #[error("mismatched ambient cyclotomic orders {left} and {right}")]
    OrderMismatch { left: u32, right: u32 },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix is not invertible")]
    Singular,
    #[error("group mismatch: {0}")]
    GroupMismatch(String),
    #[error("set of characters is not a subgroup")]
    NotClosed,
    #[error("invalid group element: {0}")]
    InvalidElement(String),
    #[error("elements belong to different algebras")]
    AlgebraMismatch,
    #[error("inapplicable operation: {0}")]
    Inapplicable(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
    #[error("grading is not fine: component {0} has dimension greater than one")]
    NotFine(String),
    #[error("no root found: {0}")]
    NoRoot(String),
    #[error("search bound exceeded: {0}")]
    BoundExceeded(String),
    #[error("classification failed: {0}")]
    Classification(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
