//! PBW, dual PBW and canonical bases of the positive half `f` of the quantum
//! affine algebra, built from a convex order on the positive roots.
//!
//! [`Engine`] owns a convex order and memoizes everything derived from it:
//! Gram matrices of `f_ν`, cuspidal root vectors, the imaginary elements
//! `ψ_n`, `P_n` and `S_λ`, and the bases of each weight.  Elements of `f` are
//! carried both as free-algebra representatives and as word coordinates in
//! the quantum shuffle algebra (see [`Element`]), so products are shuffles
//! and pairings are dot products with characters.
//!
//! The `check_*` methods turn structural theorems (unitriangularity of the
//! bar involution, positivity, straightening support, inner-product lemmas)
//! into explicit pass/fail results over a weight.

mod basis;
mod canonical;
mod checks;
mod cuspidal;
mod element;
mod engine;
mod error;
mod imaginary;
mod partition;

pub use basis::PbwBasis;
pub use canonical::{BarMatrix, CanonicalBasis, Triangularity, TriangularityReport};


pub use checks::{char_support_and_width, CheckOutcome, LsFactor, LsReport, MvWidth};
pub use cuspidal::{CuspidalCertificate, Construction, DimensionMethod, Direction, RootVector};
pub use element::Element;
pub use engine::{Engine, GramCacheStats, Labeling};
pub use error::PbwError;
pub use partition::{Extension, RootPartition};
