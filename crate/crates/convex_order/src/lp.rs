//! Exact feasibility of `A·x = b, x ≥ 0` by phase-one simplex over `ℚ`.

use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// Returns a nonnegative solution of `a·x = b`, or `None` when the system is
/// infeasible.  Bland's rule guarantees termination; arithmetic is exact.
pub fn nonneg_solution(a: &[Vec<BigRational>], b: &[BigRational]) -> Option<Vec<BigRational>> {
    let m = a.len();
    let n = a.first().map(|r| r.len()).unwrap_or(0);
    let width = n + m + 1;
    // Tableau rows: original columns, one artificial per row, right-hand side.
    let mut t: Vec<Vec<BigRational>> = Vec::with_capacity(m);
    for (r, row) in a.iter().enumerate() {
        let flip = b[r].is_negative();
        let mut line = vec![BigRational::zero(); width];
        for (j, v) in row.iter().enumerate() {
            line[j] = if flip { -v.clone() } else { v.clone() };
        }
        line[n + r] = BigRational::from_integer(1.into());
        line[width - 1] = if flip { -b[r].clone() } else { b[r].clone() };
        t.push(line);
    }
    let mut basis: Vec<usize> = (n..n + m).collect();
    let is_art = |j: usize| j >= n && j < n + m;
    loop {
        // Reduced cost of column j for the phase-one objective Σ artificials.
        let entering = (0..n + m).filter(|j| !basis.contains(j)).find(|&j| {
            let mut rc = if is_art(j) { BigRational::from_integer(1.into()) } else { BigRational::zero() };
            for (r, &bj) in basis.iter().enumerate() {
                if is_art(bj) {
                    rc -= &t[r][j];
                }
            }
            rc.is_negative()
        });
        let Some(j) = entering else { break };
        let mut leave: Option<(usize, BigRational)> = None;
        for r in 0..m {
            if t[r][j].is_positive() {
                let ratio = &t[r][width - 1] / &t[r][j];
                let better = match &leave {
                    None => true,
                    Some((lr, lv)) => ratio < *lv || (ratio == *lv && basis[r] < basis[*lr]),
                };
                if better {
                    leave = Some((r, ratio));
                }
            }
        }
        // The phase-one objective is bounded below by zero, so a pivot row exists.
        let (p, _) = leave.expect("phase-one objective is bounded");
        let piv = t[p][j].clone();
        for v in t[p].iter_mut() {
            *v /= &piv;
        }
        let prow = t[p].clone();
        for (r, line) in t.iter_mut().enumerate() {
            if r != p && !line[j].is_zero() {
                let f = line[j].clone();
                for (k, v) in line.iter_mut().enumerate() {
                    *v -= &f * &prow[k];
                }
            }
        }
        basis[p] = j;
    }
    let infeasible = basis.iter().enumerate().any(|(r, &bj)| is_art(bj) && !t[r][width - 1].is_zero());
    if infeasible {
        return None;
    }
    let mut x = vec![BigRational::zero(); n];
    for (r, &bj) in basis.iter().enumerate() {
        if bj < n {
            x[bj] = t[r][width - 1].clone();
        }
    }
    Some(x)
}
