use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RootError {
    #[error("invalid rank {rank} for affine type {family}")]
    InvalidRank { family: String, rank: usize },
    #[error("unknown affine type tag {0:?}")]
    UnknownType(String),
    #[error("{0:?} is not a root of the finite root system")]
    NotAFiniteRoot(Vec<i64>),
    #[error("word {word:?} is not reduced (fails at position {position})")]
    NotReduced { word: Vec<usize>, position: usize },
    #[error("not a positive system: {0}")]
    NotAPositiveSystem(String),
    #[error("node {0} out of range")]
    BadNode(usize),
}
