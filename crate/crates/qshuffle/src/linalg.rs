//! Fraction-free (Bareiss) elimination over `ℤ[q, q⁻¹]`, and solves over
//! `ℚ(q)` built on it.
//!
//! Pivots are chosen deterministically: in each column, the candidate row
//! whose entry has the fewest terms, ties going to the lowest row index.

use exactq::{gcd, LaurentPoly, RatFunc};

/// Row echelon form by Bareiss elimination; returns the pivot columns.
/// Every division performed is exact.
pub fn bareiss_echelon(m: &mut [Vec<LaurentPoly>]) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map(|r| r.len()).unwrap_or(0);
    let mut prev = LaurentPoly::one();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).filter(|&i| !m[i][c].is_zero()).min_by_key(|&i| (m[i][c].term_count(), i)) else {
            continue;
        };
        m.swap(r, p);
        let (top, rest) = m.split_at_mut(r + 1);
        let pivot_row = &top[r];
        let piv = &pivot_row[c];
        for row in rest.iter_mut() {
            let f = std::mem::take(&mut row[c]);
            for j in c + 1..cols {
                let t = &piv.mul_ref(&row[j]) - &f.mul_ref(&pivot_row[j]);
                row[j] = if prev.is_one() { t } else { t.divide_exact(&prev).expect("Bareiss division is exact") };
            }
            row[c] = LaurentPoly::zero();
        }
        prev = m[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Rank over `ℚ(q)` of a Laurent polynomial matrix.
pub fn rank(m: &[Vec<LaurentPoly>]) -> usize {
    let mut a = m.to_vec();
    bareiss_echelon(&mut a).len()
}

/// Clears the denominators of one row of `ℚ(q)` entries.
fn clear_row(row: &[RatFunc]) -> Vec<LaurentPoly> {
    let mut l = LaurentPoly::one();
    for x in row {
        if !x.denom().is_one() {
            let g = gcd(&l, x.denom());
            l = l.mul_ref(&x.denom().divide_exact(&g).expect("gcd divides"));
        }
    }
    row.iter()
        .map(|x| x.numer().mul_ref(&l.divide_exact(x.denom()).expect("common multiple")))
        .collect()
}

/// Back substitution on an echelon form of `[A | B]` with `n` columns in
/// `A`: one solution column per right-hand side, free variables set to 0.
/// `None` if some system is inconsistent.
fn back_substitute(e: &[Vec<LaurentPoly>], pivots: &[usize], n: usize, nrhs: usize) -> Option<Vec<Vec<RatFunc>>> {
    if pivots.iter().any(|&p| p >= n) {
        return None;
    }
    let mut sols = Vec::with_capacity(nrhs);
    for k in 0..nrhs {
        let mut x = vec![RatFunc::zero(); n];
        for (r, &pc) in pivots.iter().enumerate().rev() {
            let mut acc = RatFunc::from(e[r][n + k].clone());
            for j in pc + 1..n {
                if !e[r][j].is_zero() && !x[j].is_zero() {
                    acc = &acc - &x[j].mul_laurent(&e[r][j]);
                }
            }
            x[pc] = (&acc / &RatFunc::from(e[r][pc].clone())).expect("pivot is nonzero");
        }
        sols.push(x);
    }
    Some(sols)
}

/// A solution of `A·x = b` over `ℚ(q)` (free variables 0), or `None`.
pub fn solve(a: &[Vec<RatFunc>], b: &[RatFunc]) -> Option<Vec<RatFunc>> {
    let n = a.first().map(|r| r.len()).unwrap_or(0);
    let mut m: Vec<Vec<LaurentPoly>> = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut full = row.to_vec();
            full.push(bi.clone());
            clear_row(&full)
        })
        .collect();
    let piv = bareiss_echelon(&mut m);
    back_substitute(&m, &piv, n, 1).map(|mut s| s.pop().unwrap())
}

/// The inverse of a square matrix over `ℚ(q)`, or `None` if singular.
pub fn inverse(a: &[Vec<RatFunc>]) -> Option<Vec<Vec<RatFunc>>> {
    let n = a.len();
    let mut m: Vec<Vec<LaurentPoly>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut full = row.to_vec();
            full.extend((0..n).map(|j| if i == j { RatFunc::one() } else { RatFunc::zero() }));
            clear_row(&full)
        })
        .collect();
    let piv = bareiss_echelon(&mut m);
    if piv.len() < n || piv.iter().any(|&p| p >= n) {
        return None;
    }
    let cols = back_substitute(&m, &piv, n, n)?;
    Some((0..n).map(|i| (0..n).map(|j| cols[j][i].clone()).collect()).collect())
}

/// A basis of the right kernel `{x : A·x = 0}` over `ℚ(q)`.
pub fn nullspace(a: &[Vec<RatFunc>]) -> Vec<Vec<RatFunc>> {
    let n = a.first().map(|r| r.len()).unwrap_or(0);
    let mut m: Vec<Vec<LaurentPoly>> = a.iter().map(|r| clear_row(r)).collect();
    let piv = bareiss_echelon(&mut m);
    let mut out = Vec::new();
    for f in (0..n).filter(|c| !piv.contains(c)) {
        let mut x = vec![RatFunc::zero(); n];
        x[f] = RatFunc::one();
        for (r, &pc) in piv.iter().enumerate().rev() {
            let mut acc = RatFunc::zero();
            for j in pc + 1..n {
                if !m[r][j].is_zero() && !x[j].is_zero() {
                    acc = &acc - &x[j].mul_laurent(&m[r][j]);
                }
            }
            x[pc] = (&acc / &RatFunc::from(m[r][pc].clone())).expect("pivot is nonzero");
        }
        out.push(x);
    }
    out
}

/// `A·x` over `ℚ(q)`.
pub fn mat_vec(a: &[Vec<RatFunc>], x: &[RatFunc]) -> Vec<RatFunc> {
    a.iter()
        .map(|row| {
            row.iter().zip(x).filter(|(p, q)| !p.is_zero() && !q.is_zero()).fold(RatFunc::zero(), |acc, (p, q)| &acc + &(p * q))
        })
        .collect()
}
