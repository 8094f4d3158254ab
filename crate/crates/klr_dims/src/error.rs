use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KlrError {
    #[error("height {height} exceeds the enumeration bound {bound}")]
    HeightBoundExceeded { height: i64, bound: i64 },
    #[error("word {word} does not have weight {weight}")]
    WrongWeight { word: String, weight: String },
    #[error("graded dimension of ({i}, {j}) has numerator {found}, the Gram numerator gives {expected}")]
    CrosscheckFailed { i: String, j: String, expected: String, found: String },
    #[error("no numerator convention matches the Gram matrix in heights up to {0}")]
    NoConvention(i64),
}
