//! Parsing of the textual polynomial grammar.
//!
//! ```text
//! poly    := "0" | term (" + " term)*
//! term    := integer "*q^" integer          (exponents strictly increasing)
//! integer := "-"? digit+
//! ratfunc := poly | "(" poly ")/(" poly ")"
//! ```
//!
//! Every term carries an explicit coefficient and exponent, coefficients are
//! nonzero, and the rendering produced by `Display` is the unique accepted
//! spelling of each value.

use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::ExactError;
use crate::laurent::LaurentPoly;
use crate::ratfunc::RatFunc;

fn parse_int(s: &str) -> Option<BigInt> {
    let digits = s.strip_prefix('-').unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    if digits.len() > 1 && digits.starts_with('0') {
        return None;
    }
    if s.starts_with('-') && digits == "0" {
        return None;
    }
    s.parse().ok()
}

fn parse_exp(s: &str) -> Option<i64> {
    let b = parse_int(s)?;
    i64::try_from(b).ok()
}

impl FromStr for LaurentPoly {
    type Err = ExactError;

    fn from_str(s: &str) -> Result<Self, ExactError> {
        let err = |m: &str| ExactError::Parse(format!("{m} in {s:?}"));
        if s == "0" {
            return Ok(LaurentPoly::zero());
        }
        let mut terms = Vec::new();
        let mut last: Option<i64> = None;
        for term in s.split(" + ") {
            let (c, e) = term.split_once("*q^").ok_or_else(|| err("malformed term"))?;
            let c = parse_int(c).ok_or_else(|| err("bad coefficient"))?;
            let e = parse_exp(e).ok_or_else(|| err("bad exponent"))?;
            if c.is_zero() {
                return Err(err("zero coefficient"));
            }
            if let Some(l) = last {
                if e <= l {
                    return Err(err("exponents not strictly increasing"));
                }
            }
            last = Some(e);
            terms.push((e, c));
        }
        // Guard against absurd exponent gaps, which would otherwise allocate
        // a dense buffer of that length.
        if let (Some(first), Some(l)) = (terms.first(), last) {
            if (l as i128 - first.0 as i128) > 1 << 20 {
                return Err(err("exponent span too large"));
            }
        }
        Ok(LaurentPoly::from_terms(terms))
    }
}

impl FromStr for RatFunc {
    type Err = ExactError;

    fn from_str(s: &str) -> Result<Self, ExactError> {
        if let Some(inner) = s.strip_prefix('(') {
            let inner = inner
                .strip_suffix(')')
                .ok_or_else(|| ExactError::Parse(format!("unbalanced parentheses in {s:?}")))?;
            let (n, d) = inner
                .split_once(")/(")
                .ok_or_else(|| ExactError::Parse(format!("missing ')/(' in {s:?}")))?;
            let n: LaurentPoly = n.parse()?;
            let d: LaurentPoly = d.parse()?;
            let r = RatFunc::new(n, d)?;
            if r.to_string() != s {
                return Err(ExactError::Parse(format!("non-canonical fraction {s:?}")));
            }
            return Ok(r);
        }
        Ok(RatFunc::from(s.parse::<LaurentPoly>()?))
    }
}

/// Splits a whitespace-separated run of polynomials (as found in a line of
/// several polynomial fields) into the individual polynomial spellings.
pub fn split_polys(s: &str) -> Vec<String> {
    let mut out: Vec<String> = Vec::new();
    let toks: Vec<&str> = s.split(' ').collect();
    let mut i = 0;
    while i < toks.len() {
        let mut cur = toks[i].to_string();
        i += 1;
        while i + 1 < toks.len() && toks[i] == "+" {
            cur.push_str(" + ");
            cur.push_str(toks[i + 1]);
            i += 2;
        }
        out.push(cur);
    }
    out
}
