//! Arithmetic modulo a word-sized prime, used for evaluation-based rank
//! bounds.  Every rank computed here at a point `q = a` is a lower bound for
//! the rank over `ℚ(q)` of the matrix it was evaluated from.

use crate::laurent::LaurentPoly;

/// The Mersenne prime 2^61 − 1.
pub const P61: u64 = (1 << 61) - 1;

#[inline]
pub fn add(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

#[inline]
pub fn sub(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

#[inline]
pub fn mul(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub fn pow(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul(r, a, p);
        }
        a = mul(a, a, p);
        e >>= 1;
    }
    r
}

/// Multiplicative inverse of a nonzero residue (p prime).
pub fn inv(a: u64, p: u64) -> u64 {
    debug_assert!(a % p != 0);
    pow(a, p - 2, p)
}

/// `x^e` for a signed exponent.
pub fn pow_signed(x: u64, e: i64, p: u64) -> u64 {
    if e >= 0 {
        pow(x, e as u64, p)
    } else {
        pow(inv(x, p), e.unsigned_abs(), p)
    }
}

/// Evaluates a Laurent polynomial at `q = x` modulo `p`.
pub fn eval_laurent(f: &LaurentPoly, x: u64, p: u64) -> u64 {
    let mut acc = 0u64;
    for (e, c) in f.terms_mod(p) {
        acc = add(acc, mul(c, pow_signed(x, e, p), p), p);
    }
    acc
}

/// Rank of a dense matrix modulo `p` (rows of equal length).
pub fn rank(mut m: Vec<Vec<u64>>, p: u64) -> usize {
    if m.is_empty() {
        return 0;
    }
    let cols = m[0].len();
    let mut r = 0;
    for c in 0..cols {
        let Some(piv) = (r..m.len()).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, piv);
        let iv = inv(m[r][c], p);
        for k in c..cols {
            m[r][k] = mul(m[r][k], iv, p);
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && row[c] != 0 {
                let f = row[c];
                for k in c..cols {
                    row[k] = sub(row[k], mul(f, pivot_row[k], p), p);
                }
            }
        }
        r += 1;
        if r == m.len() {
            break;
        }
    }
    r
}

/// Row-echelon reduction returning the pivot columns of the row space.
pub fn pivot_columns(mut m: Vec<Vec<u64>>, p: u64) -> Vec<usize> {
    let mut pivots = Vec::new();
    if m.is_empty() {
        return pivots;
    }
    let cols = m[0].len();
    let mut r = 0;
    for c in 0..cols {
        let Some(piv) = (r..m.len()).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, piv);
        let iv = inv(m[r][c], p);
        for k in c..cols {
            m[r][k] = mul(m[r][k], iv, p);
        }
        let pivot_row = m[r].clone();
        for row in m.iter_mut().skip(r + 1) {
            if row[c] != 0 {
                let f = row[c];
                for k in c..cols {
                    row[k] = sub(row[k], mul(f, pivot_row[k], p), p);
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    pivots
}
