//! Convex orders on the positive roots of an affine root system.
//!
//! Orders are given by a rational functional `h` with one or two rows:
//! `α ≺ β` when `h(α)/ht(α)` is lexicographically smaller than
//! `h(β)/ht(β)`.  All imaginary roots are equivalent.  On top of the
//! comparison the crate extracts initial segments and their reduced words,
//! the positive systems `p(Φ_{≺δ})` and `p(Φ_{≻δ})`, and minimal pairs, and
//! it checks convexity, including exact cone separation, for any
//! [`RootPreorder`].

mod error;
mod lp;
mod order;
mod rational;
mod segments;
mod verify;

pub use error::OrderError;
pub use lp::nonneg_solution;
pub use order::{ConvexOrderSpec, ExplicitOrder, RootPreorder};
pub use rational::{format_rational, parse_rational};
pub use segments::MinimalPair;
pub use verify::{cones_meet, verify_convexity, ClauseViolation, ConeViolation, ConvexityReport};
