use affine_roots::RootError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrderError {
    #[error("order functional must have 1 or 2 rows of length {expected}")]
    BadShape { expected: usize },
    #[error("non-proportional roots {0} and {1} compare equal")]
    AmbiguousOrder(String, String),
    #[error("two-row functional must vanish on delta in its second row")]
    BadTwoRowShape,
    #[error("initial segment of length {0} is not stable when the height bound grows")]
    NotWordTypeAtScale(usize),
    #[error("height bound {0} too small for the requested segment")]
    BoundTooSmall(i64),
    #[error("root {0} does not pull back to a simple root")]
    NotSimpleAfterPullback(String),
    #[error("{0} has no decomposition into two positive roots")]
    NoPairExists(String),
    #[error("cannot parse rational {0:?}")]
    BadRational(String),
    #[error(transparent)]
    Root(#[from] RootError),
}
