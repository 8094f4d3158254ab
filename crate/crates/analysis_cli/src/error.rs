use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("config line {line}: {message}")]
    Config { line: usize, message: String },
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Order(#[from] convex_order::OrderError),
    #[error(transparent)]
    Pbw(#[from] pbw_engine::PbwError),
    #[error(transparent)]
    Root(#[from] affine_roots::RootError),
    #[error(transparent)]
    Shuffle(#[from] qshuffle::ShuffleError),
    #[error(transparent)]
    Klr(#[from] klr_dims::KlrError),
}
