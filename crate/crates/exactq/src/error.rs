use thiserror::Error;

/// Failures of exact arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("division is not exact in Z[q, q^-1]")]
    NotDivisible,
    #[error("cannot parse polynomial: {0}")]
    Parse(String),
}
