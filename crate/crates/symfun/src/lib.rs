//! Partitions, multipartitions and symmetric functions with integer Schur
//! coordinates.
//!
//! Products and Littlewood–Richardson coefficients are computed by brute
//! force: Schur functions are expanded as sums over semistandard tableaux in
//! enough variables, multiplied as polynomials, and converted back to the
//! Schur basis by peeling off leading monomials.  At the sizes used here
//! (a handful of boxes) this is fast and obviously correct, which makes it a
//! good oracle.

mod error;
mod partition;
mod poly;
mod sym;

pub use error::SymError;
pub use partition::{MultiPartition, Partition};
pub use sym::{
    count_standard_tableaux, lr_coeff, multi_lr_coeff, schur_from_jacobi_trudi, sym_pairing, SymElement,
};
