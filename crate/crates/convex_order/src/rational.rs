use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::OrderError;

/// Parses `p` or `p/q` (decimal integers, optional leading `-` on `p`,
/// `q > 0`) into an exact rational.
pub fn parse_rational(s: &str) -> Result<BigRational, OrderError> {
    let bad = || OrderError::BadRational(s.to_string());
    let int = |t: &str, signed: bool| -> Option<BigInt> {
        let d = if signed { t.strip_prefix('-').unwrap_or(t) } else { t };
        if d.is_empty() || d.len() > 4096 || !d.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        t.parse().ok()
    };
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (int(n, true).ok_or_else(bad)?, int(d, false).ok_or_else(bad)?),
        None => (int(s, true).ok_or_else(bad)?, BigInt::from(1)),
    };
    if d.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(n, d))
}

/// Canonical spelling: `p` for integers, otherwise `p/q` in lowest terms.
pub fn format_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}
