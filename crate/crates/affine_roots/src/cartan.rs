use std::fmt;

use num_rational::Ratio;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::RootError;
use crate::weight::WeightVec;

/// Families of simply-laced affine Dynkin diagrams.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum AffineType {
    A,
    D,
    E,
}

impl AffineType {
    pub fn parse(tag: &str) -> Result<Self, RootError> {
        match tag {
            "A" | "a" => Ok(AffineType::A),
            "D" | "d" => Ok(AffineType::D),
            "E" | "e" => Ok(AffineType::E),
            _ => Err(RootError::UnknownType(tag.to_string())),
        }
    }
}

impl fmt::Display for AffineType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            AffineType::A => "A",
            AffineType::D => "D",
            AffineType::E => "E",
        };
        write!(f, "{s}")
    }
}

/// The serialized form `{"type": "...", "rank": n, "pairing": [[...]]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CartanSpec {
    #[serde(rename = "type")]
    pub family: AffineType,
    pub rank: usize,
    pub pairing: Vec<Vec<i64>>,
}

/// A Cartan datum of symmetric affine type: nodes `0..=rank` with a
/// symmetric pairing `i·j` of corank one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanDatum {
    family: AffineType,
    rank: usize,
    pairing: Vec<Vec<i64>>,
    delta: WeightVec,
    affine_node: usize,
}

fn edges(family: AffineType, rank: usize) -> Result<Vec<(usize, usize)>, RootError> {
    let invalid = || RootError::InvalidRank { family: family.to_string(), rank };
    Ok(match family {
        AffineType::A => {
            if rank == 0 {
                return Err(invalid());
            }
            if rank == 1 {
                // Doubled edge: handled by the caller.
                vec![(0, 1)]
            } else {
                (0..=rank).map(|i| (i, (i + 1) % (rank + 1))).collect()
            }
        }
        AffineType::D => {
            if rank < 4 {
                return Err(invalid());
            }
            // Finite D_n on nodes 1..=n: chain 1-…-(n-2), with n-1 and n on
            // n-2; the affine node 0 attaches to node 2.
            let n = rank;
            let mut e: Vec<(usize, usize)> = (1..n - 1).map(|i| (i, i + 1)).collect();
            e.push((n - 2, n));
            e.push((0, 2));
            e
        }
        AffineType::E => {
            // Bourbaki labels: chain 1-3-4-…-n with 2 attached to 4.
            let n = rank;
            if !(6..=8).contains(&n) {
                return Err(invalid());
            }
            let mut e = vec![(1, 3), (2, 4)];
            e.extend((3..n).map(|i| (i, i + 1)));
            let attach = match n {
                6 => 2,
                7 => 1,
                _ => 8,
            };
            e.push((0, attach));
            e
        }
    })
}

type Q = Ratio<i64>;

/// Primitive integer kernel vector of a corank-one integer matrix, or `None`
/// when the corank differs from one.
fn kernel_vector(m: &[Vec<i64>]) -> Option<Vec<i64>> {
    let n = m.len();
    let mut a: Vec<Vec<Q>> = m.iter().map(|r| r.iter().map(|&x| Q::from_integer(x)).collect()).collect();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..n {
        let Some(p) = (row..n).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(row, p);
        let pv = a[row][col];
        for k in 0..n {
            a[row][k] /= pv;
        }
        for r in 0..n {
            if r != row && !a[r][col].is_zero() {
                let f = a[r][col];
                for k in 0..n {
                    let t = a[row][k];
                    a[r][k] -= f * t;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    if pivots.len() + 1 != n {
        return None;
    }
    let free = (0..n).find(|c| !pivots.contains(c)).unwrap();
    let mut v = vec![Q::zero(); n];
    v[free] = Q::from_integer(1);
    for (r, &c) in pivots.iter().enumerate() {
        v[c] = -a[r][free];
    }
    let lcm = v.iter().fold(1i64, |l, x| num_integer::lcm(l, *x.denom()));
    let mut iv: Vec<i64> = v.iter().map(|x| (x * Q::from_integer(lcm)).to_integer()).collect();
    let g = iv.iter().fold(0i64, |g, x| num_integer::gcd(g, *x));
    for x in iv.iter_mut() {
        *x /= g;
    }
    if iv.iter().any(|x| x.is_negative()) {
        for x in iv.iter_mut() {
            *x = -*x;
        }
    }
    Some(iv)
}

/// Positive definiteness of a symmetric integer matrix via pivots of
/// elimination without row exchanges (Sylvester's criterion).
fn positive_definite(m: &[Vec<i64>]) -> bool {
    let n = m.len();
    let mut a: Vec<Vec<Q>> = m.iter().map(|r| r.iter().map(|&x| Q::from_integer(x)).collect()).collect();
    for k in 0..n {
        if a[k][k] <= Q::zero() {
            return false;
        }
        for r in k + 1..n {
            let f = a[r][k] / a[k][k];
            for c in k..n {
                let t = a[k][c];
                a[r][c] -= f * t;
            }
        }
    }
    true
}

fn connected(m: &[Vec<i64>]) -> bool {
    let n = m.len();
    if n == 0 {
        return true;
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(i) = stack.pop() {
        for j in 0..n {
            if !seen[j] && m[i][j] != 0 {
                seen[j] = true;
                stack.push(j);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

fn delete_node(m: &[Vec<i64>], node: usize) -> Vec<Vec<i64>> {
    m.iter()
        .enumerate()
        .filter(|(i, _)| *i != node)
        .map(|(_, r)| r.iter().enumerate().filter(|(j, _)| *j != node).map(|(_, &x)| x).collect())
        .collect()
}

impl CartanDatum {
    /// The extended Dynkin diagram of the given family and finite rank.
    pub fn build(family: AffineType, rank: usize) -> Result<Self, RootError> {
        let e = edges(family, rank)?;
        let n = rank + 1;
        let mut m = vec![vec![0i64; n]; n];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 2;
        }
        for (i, j) in e {
            let w = if family == AffineType::A && rank == 1 { -2 } else { -1 };
            m[i][j] = w;
            m[j][i] = w;
        }
        Self::from_pairing(family, rank, m)
    }

    /// Validates a pairing matrix and derives `δ` and the affine node.
    pub fn from_pairing(family: AffineType, rank: usize, pairing: Vec<Vec<i64>>) -> Result<Self, RootError> {
        let n = pairing.len();
        let bad = |m: &str| RootError::InvalidRank { family: format!("{family} ({m})"), rank };
        if n != rank + 1 || pairing.iter().any(|r| r.len() != n) {
            return Err(bad("matrix size"));
        }
        for i in 0..n {
            if pairing[i][i] != 2 {
                return Err(bad("diagonal must be 2"));
            }
            for j in 0..n {
                if pairing[i][j] != pairing[j][i] || (i != j && pairing[i][j] > 0) {
                    return Err(bad("pairing must be symmetric with nonpositive off-diagonal"));
                }
            }
        }
        let delta = kernel_vector(&pairing).ok_or_else(|| bad("corank must be 1"))?;
        if delta.iter().any(|&d| d <= 0) {
            return Err(bad("kernel vector must be strictly positive"));
        }
        let affine_node = (0..n)
            .find(|&a| {
                if delta[a] != 1 {
                    return false;
                }
                let fin = delete_node(&pairing, a);
                positive_definite(&fin) && connected(&fin)
            })
            .ok_or_else(|| bad("no node with delta-coefficient 1 leaves a finite diagram"))?;
        Ok(CartanDatum { family, rank, pairing, delta: WeightVec(delta), affine_node })
    }

    pub fn from_spec(spec: &CartanSpec) -> Result<Self, RootError> {
        Self::from_pairing(spec.family, spec.rank, spec.pairing.clone())
    }

    pub fn spec(&self) -> CartanSpec {
        CartanSpec { family: self.family, rank: self.rank, pairing: self.pairing.clone() }
    }

    pub fn family(&self) -> AffineType {
        self.family
    }

    /// Rank of the finite root system (`|I| − 1`).
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// `|I|`.
    pub fn n_nodes(&self) -> usize {
        self.pairing.len()
    }

    pub fn pairing(&self) -> &[Vec<i64>] {
        &self.pairing
    }

    /// `i·j`.
    #[inline]
    pub fn dot_nodes(&self, i: usize, j: usize) -> i64 {
        self.pairing[i][j]
    }

    /// The symmetric bilinear extension `(a, b)`.
    pub fn form(&self, a: &WeightVec, b: &WeightVec) -> i64 {
        let mut s = 0;
        for (i, &ai) in a.0.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.0.iter().enumerate() {
                s += ai * self.pairing[i][j] * bj;
            }
        }
        s
    }

    /// The minimal positive imaginary root.
    pub fn delta(&self) -> &WeightVec {
        &self.delta
    }

    /// The node removed to obtain the finite diagram.
    pub fn affine_node(&self) -> usize {
        self.affine_node
    }

    /// Nodes of the finite diagram, in increasing order.
    pub fn finite_nodes(&self) -> Vec<usize> {
        (0..self.n_nodes()).filter(|&i| i != self.affine_node).collect()
    }

    /// Stable 64-bit FNV-1a digest of the pairing matrix, as 16 hex digits.
    pub fn hash_hex(&self) -> String {
        let mut h: u64 = 0xcbf2_9ce4_8422_2325;
        let text = format!("{}{}:{:?}", self.family, self.rank, self.pairing);
        for b in text.bytes() {
            h ^= b as u64;
            h = h.wrapping_mul(0x0000_0100_0000_01b3);
        }
        format!("{h:016x}")
    }

    /// Short label such as `A1`.
    pub fn label(&self) -> String {
        format!("{}{}", self.family, self.rank)
    }
}
