//! Graded dimensions of the idempotent pieces `e_j R(ν) e_i` of a KLR
//! algebra.
//!
//! `R(ν)` has the basis `y^a τ_w e_i` (one reduced expression per
//! permutation `w`), so `e_j R(ν) e_i` is spanned by the permutations
//! sending `i` to `j` tensored with a polynomial ring in `ht ν` generators
//! of degree 2.  [`graded_dim`] enumerates those permutations and returns
//!
//! ```text
//! Σ_{w(i)=j} q^{deg τ_w e_i} · (1 − q²)^{−ht ν}
//! ```
//!
//! [`gram_crosscheck`] compares the numerators with those of the shuffle
//! Gram matrix `⟨θ_i, θ_j⟩ = N_{ij}·(1 − q²)^{−ht ν}`, under a numerator
//! convention that [`detect_convention`] first fixes by brute force in
//! small heights.

mod basis;
mod crosscheck;
mod error;

pub use basis::{graded_dim, graded_dim_numerator, permutations_between, KlrBasisElement, MAX_HEIGHT};
pub use crosscheck::{detect_convention, gram_crosscheck, Convention, CrosscheckReport, CrosscheckRow};
pub use error::KlrError;
