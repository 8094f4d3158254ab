//! Exact arithmetic in the quantum parameter `q`.
//!
//! * [`LaurentPoly`] — elements of `ℤ[q, q⁻¹]` with arbitrary-precision
//!   coefficients, the bar involution, exact division and the quantum
//!   integers [`q_int`] and [`q_factorial`];
//! * [`RatFunc`] — the field `ℚ(q)` as reduced fractions;
//! * [`modp`] — word-sized modular arithmetic for evaluation at a point.
//!
//! Both value types render to and parse from a single textual grammar (see
//! [`text`]): terms `c*q^e` in increasing exponent order joined by ` + `, with
//! the zero polynomial spelled `0`.

mod error;
mod laurent;
pub mod modp;
mod ratfunc;
pub mod text;

pub use error::ExactError;
pub use laurent::{q_factorial, q_int, LaurentPoly};
pub use ratfunc::{gcd, RatFunc};

/// `bar(p)`: the involution `q ↦ q⁻¹`.
pub fn bar(p: &LaurentPoly) -> LaurentPoly {
    p.bar()
}

/// Exact division `a / b` in `ℤ[q, q⁻¹]`.
pub fn divide_exact(a: &LaurentPoly, b: &LaurentPoly) -> Result<LaurentPoly, ExactError> {
    a.divide_exact(b)
}
