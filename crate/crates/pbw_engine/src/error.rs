use affine_roots::RootError;
use convex_order::OrderError;
use exactq::ExactError;
use qshuffle::ShuffleError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum PbwError {
    #[error("weight {weight} exceeds the height bound {bound}")]
    HeightBound { weight: String, bound: i64 },
    #[error("{0} is not a positive real root")]
    NotARealRoot(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("cuspidal space for {root} has dimension {dim}, expected 1")]
    CuspidalDimensionNot1 { root: String, dim: usize },
    #[error("normalizing the root vector for {root} failed: {reason}")]
    NormalizationFailed { root: String, reason: String },
    #[error("Jacobi-Trudi entries for {0} do not commute")]
    EntriesDoNotCommute(String),
    #[error("PBW elements of weight {weight} are dependent: {found} partitions, dim f = {dim}")]
    DependentPbw { weight: String, found: usize, dim: usize },
    #[error("duality <E_{pi}, D_{sigma}> = {value} fails")]
    DualityFailed { pi: String, sigma: String, value: String },
    #[error("dual PBW element {partition} has coordinate {value} at {word}")]
    DualNotPositive { partition: String, word: String, value: String },
    #[error("bar involution is not unitriangular: coefficient {value} of {col} in bar(E_{row})")]
    NotUnitriangular { row: String, col: String, value: String },
    #[error("no canonical solution for {pi} at {sigma}: residual {residual}")]
    NoCanonicalSolution { pi: String, sigma: String, residual: String },
    #[error("commutator of {theta} and {psi} has {partition} in its PBW support")]
    SupportViolation { theta: String, psi: String, partition: String },
    #[error(transparent)]
    Shuffle(#[from] ShuffleError),
    #[error(transparent)]
    Order(#[from] OrderError),
    #[error(transparent)]
    Root(#[from] RootError),
    #[error(transparent)]
    Exact(#[from] ExactError),
}

impl PbwError {
    /// Errors that report a failed theorem check rather than bad input.
    pub fn is_theorem_violation(&self) -> bool {
        matches!(
            self,
            PbwError::CuspidalDimensionNot1 { .. }
                | PbwError::NormalizationFailed { .. }
                | PbwError::EntriesDoNotCommute(_)
                | PbwError::DependentPbw { .. }
                | PbwError::DualityFailed { .. }
                | PbwError::DualNotPositive { .. }
                | PbwError::NotUnitriangular { .. }
                | PbwError::NoCanonicalSolution { .. }
                | PbwError::SupportViolation { .. }
        )
    }
}
