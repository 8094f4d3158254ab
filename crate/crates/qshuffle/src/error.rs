use std::path::PathBuf;

use exactq::ExactError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ShuffleError {
    #[error("weight {0} exceeds the configured height bound {1}")]
    WeightOverflowGuard(String, i64),
    #[error("weights do not add up: {0}")]
    WeightMismatch(String),
    #[error("vector is not in the image of the Gram matrix")]
    InconsistentSystem,
    #[error("cannot mix f-side and dual-side vectors")]
    SideMismatch,
    #[error("gram cache file {path} is corrupt: {reason}")]
    CacheCorrupt { path: PathBuf, reason: String },
    #[error("cache I/O error on {path}: {source}")]
    CacheIo { path: PathBuf, source: std::io::Error },
    #[error("cannot parse word {0:?}")]
    BadWord(String),
    #[error(transparent)]
    Exact(#[from] ExactError),
}
