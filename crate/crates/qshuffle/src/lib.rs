//! The quantum shuffle realization of `f` and `f*`.
//!
//! An element `x ∈ f` is stored through its word coordinates
//! `(⟨x, θ_w⟩)_w`; a character in `f*` through its coefficients on the
//! dual word basis.  In these coordinates multiplication is the twisted
//! shuffle product
//!
//! ```text
//! (a ⋆ b)_w = Σ_S q^{−e(S,w)} a_{w|S} b_{w|S^c},   e(S,w) = Σ_{k∈S, l∉S, l<k} w_l·w_k
//! ```
//!
//! and the coproduct is deconcatenation.  With `⟨θ_i, θ_i⟩ = (1 − q²)⁻¹`
//! the Gram matrix of the words of weight `ν` has rank `dim f_ν`.
//!
//! Vectors keep one common denominator ([`ShuffleVec`]), so products and
//! sums run on Laurent polynomials.  Gram matrices can be cached on disk
//! ([`GramCache`]) and their ranks certified by modular bounds
//! ([`GramMatrix::rank_bounds`]), with exact fraction-free elimination
//! ([`linalg`]) as the fallback.

mod cache;
mod error;
mod gram;
pub mod linalg;
mod pairing;
mod qvec;
mod serre;
mod shuffle;
mod word;

pub use cache::{decode as decode_gram, encode as encode_gram, CacheStatus, GramCache, HEADER as GRAM_HEADER};
pub use error::ShuffleError;
pub use gram::{one_minus_q2, theta_letter, theta_word, GramMatrix, RankBounds};
pub use pairing::{bar_dual, bar_f, divided_power_letter, f_pair};
pub use qvec::{ShuffleVec, Side};
pub use serre::{serre_element, serre_kernel_mod};
pub use shuffle::{concat_mul, deconcat, prefix_weights, shuffle_all, shuffle_mul, shuffle_words, TWIST_SIGN};
pub use word::{words_of_weight, Word};
