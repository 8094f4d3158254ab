//! Integer polynomials in finitely many commuting variables, used to expand
//! symmetric functions by brute force.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use crate::partition::Partition;

/// Exponent vector to coefficient.
pub(crate) type Poly = BTreeMap<Vec<u32>, i64>;

fn add_term(p: &mut Poly, e: Vec<u32>, c: i64) {
    if c == 0 {
        return;
    }
    match p.entry(e) {
        Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if *o.get() == 0 {
                o.remove();
            }
        }
        Entry::Vacant(v) => {
            v.insert(c);
        }
    }
}

pub(crate) fn one(k: usize) -> Poly {
    let mut p = Poly::new();
    p.insert(vec![0; k], 1);
    p
}

pub(crate) fn mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            add_term(&mut out, e, ca * cb);
        }
    }
    out
}

pub(crate) fn add_scaled(a: &mut Poly, b: &Poly, s: i64) {
    for (e, c) in b {
        add_term(a, e.clone(), c * s);
    }
}

/// The complete homogeneous polynomial `h_n(x_1, …, x_k)`; zero for `n < 0`.
pub(crate) fn h_poly(n: i64, k: usize) -> Poly {
    let mut out = Poly::new();
    if n < 0 {
        return out;
    }
    fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Poly) {
        if i + 1 == cur.len() {
            cur[i] = left;
            out.insert(cur.clone(), 1);
            return;
        }
        for x in 0..=left {
            cur[i] = x;
            rec(i + 1, left - x, cur, out);
        }
    }
    if k == 0 {
        if n == 0 {
            out.insert(Vec::new(), 1);
        }
        return out;
    }
    rec(0, n as u32, &mut vec![0; k], &mut out);
    out
}

/// The Schur polynomial `s_λ(x_1, …, x_k)` as a sum over semistandard
/// tableaux of shape `λ` with entries in `1..=k`.
pub(crate) fn schur_poly(lambda: &Partition, k: usize) -> Poly {
    let mut out = Poly::new();
    if lambda.len() > k {
        return out;
    }
    let cells: Vec<(usize, usize)> =
        lambda.parts().iter().enumerate().flat_map(|(i, &r)| (0..r as usize).map(move |j| (i, j))).collect();
    let mut grid: Vec<Vec<usize>> = lambda.parts().iter().map(|&r| vec![0; r as usize]).collect();
    fn rec(idx: usize, cells: &[(usize, usize)], grid: &mut Vec<Vec<usize>>, k: usize, out: &mut Poly) {
        if idx == cells.len() {
            let mut e = vec![0u32; k];
            for row in grid.iter() {
                for &v in row {
                    e[v] += 1;
                }
            }
            add_term(out, e, 1);
            return;
        }
        let (i, j) = cells[idx];
        let lo_row = if j > 0 { grid[i][j - 1] } else { 0 };
        let lo_col = if i > 0 { grid[i - 1][j] + 1 } else { 0 };
        for v in lo_row.max(lo_col)..k {
            grid[i][j] = v;
            rec(idx + 1, cells, grid, k, out);
        }
    }
    rec(0, &cells, &mut grid, k, &mut out);
    out
}

/// Schur coordinates of a symmetric polynomial in `k` variables, found by
/// repeatedly peeling off the lexicographically leading monomial.  Exact
/// whenever `k` is at least the degree.
pub(crate) fn to_schur(p: &Poly, k: usize) -> BTreeMap<Partition, i64> {
    let mut rest = p.clone();
    let mut out = BTreeMap::new();
    while let Some((e, &c)) = rest.iter().next_back() {
        let lambda = Partition::new(e.iter().copied().filter(|&x| x > 0).collect())
            .unwrap_or_else(|_| panic!("polynomial is not symmetric: leading exponent {e:?}"));
        let s = schur_poly(&lambda, k);
        add_scaled(&mut rest, &s, -c);
        out.insert(lambda, c);
    }
    out
}
