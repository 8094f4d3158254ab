//! Symmetric affine root data.
//!
//! [`CartanDatum`] builds the extended Dynkin diagrams of types A, D and E,
//! finds the minimal imaginary root `δ` as the primitive positive kernel
//! vector of the pairing, and detects the affine node.  Positive roots are
//! enumerated by a norm scan over `ℕI` ([`CartanDatum::positive_roots_up_to`]):
//! real roots are the norm-2 vectors and imaginary roots are the positive
//! multiples of `δ`, with multiplicity `|I| − 1`.
//!
//! The projection `p` to the finite root system subtracts `ν_a·δ` (where `a`
//! is the affine node) and forgets the affine coordinate; every module of the
//! workspace shares this section of `p`.

mod cartan;
mod coweights;
mod error;
mod roots;
mod weight;

pub use cartan::{AffineType, CartanDatum, CartanSpec};
pub use coweights::ChamberCoweight;
pub use error::RootError;
pub use roots::{Root, RootKind};
pub use weight::WeightVec;

/// Convenience constructor for the extended diagram of a family and rank.
pub fn build_cartan(family: AffineType, rank: usize) -> Result<CartanDatum, RootError> {
    CartanDatum::build(family, rank)
}
