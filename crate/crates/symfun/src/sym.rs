use std::collections::BTreeMap;
use std::fmt;

use crate::error::SymError;
use crate::partition::{MultiPartition, Partition};
use crate::poly::{self, Poly};

/// A homogeneous symmetric function with integer coordinates in the Schur
/// basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymElement {
    degree: u32,
    coeffs: BTreeMap<Partition, i64>,
}

impl SymElement {
    pub fn zero(degree: u32) -> Self {
        SymElement { degree, coeffs: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::schur(Partition::empty())
    }

    pub fn schur(lambda: Partition) -> Self {
        let degree = lambda.size();
        let mut coeffs = BTreeMap::new();
        coeffs.insert(lambda, 1);
        SymElement { degree, coeffs }
    }

    /// The complete homogeneous function `h_n = s_{(n)}`.
    pub fn h(n: u32) -> Self {
        Self::schur(Partition::row(n))
    }

    /// `h_{n_1} h_{n_2} ···`.
    pub fn h_product(ns: &[u32]) -> Self {
        ns.iter().fold(Self::one(), |acc, &n| acc.mul(&Self::h(n)))
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn coeffs(&self) -> &BTreeMap<Partition, i64> {
        &self.coeffs
    }

    pub fn coeff(&self, lambda: &Partition) -> i64 {
        self.coeffs.get(lambda).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn to_poly(&self, k: usize) -> Poly {
        let mut out = Poly::new();
        for (l, &c) in &self.coeffs {
            poly::add_scaled(&mut out, &poly::schur_poly(l, k), c);
        }
        out
    }

    fn from_poly(degree: u32, p: &Poly, k: usize) -> Self {
        SymElement { degree, coeffs: poly::to_schur(p, k) }
    }

    /// Longest partition with a nonzero coordinate.
    fn max_len(&self) -> usize {
        self.coeffs.keys().map(Partition::len).max().unwrap_or(0)
    }

    /// Product, computed by expanding both factors as polynomials.  Every
    /// Schur function in `s_λ s_μ` has at most `ℓ(λ) + ℓ(μ)` rows, so that
    /// many variables suffice.
    pub fn mul(&self, other: &SymElement) -> SymElement {
        let d = self.degree + other.degree;
        let k = (self.max_len() + other.max_len()).max(1);
        let p = poly::mul(&self.to_poly(k), &other.to_poly(k));
        Self::from_poly(d, &p, k)
    }

    pub fn add(&self, other: &SymElement) -> Result<SymElement, SymError> {
        if self.degree != other.degree {
            return Err(SymError::DegreeMismatch { left: self.degree, right: other.degree });
        }
        let mut coeffs = self.coeffs.clone();
        for (l, c) in &other.coeffs {
            let e = coeffs.entry(l.clone()).or_insert(0);
            *e += c;
        }
        coeffs.retain(|_, c| *c != 0);
        Ok(SymElement { degree: self.degree, coeffs })
    }

    pub fn scale(&self, s: i64) -> SymElement {
        let mut coeffs = self.coeffs.clone();
        coeffs.values_mut().for_each(|c| *c *= s);
        coeffs.retain(|_, c| *c != 0);
        SymElement { degree: self.degree, coeffs }
    }
}

impl fmt::Display for SymElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self.coeffs.iter().map(|(l, c)| format!("{c}*s{l}")).collect();
        write!(f, "{}", terms.join(" + "))
    }
}

/// The Hall inner product: Schur functions are orthonormal.
pub fn sym_pairing(x: &SymElement, y: &SymElement) -> Result<i64, SymError> {
    if x.degree != y.degree {
        return Err(SymError::DegreeMismatch { left: x.degree, right: y.degree });
    }
    Ok(x.coeffs.iter().map(|(l, c)| c * y.coeff(l)).sum())
}

/// `c^ν_{λμ}`, by expanding `s_λ s_μ` as a polynomial and reading off the
/// Schur coordinate at `ν`.
pub fn lr_coeff(lambda: &Partition, mu: &Partition, nu: &Partition) -> i64 {
    if nu.size() != lambda.size() + mu.size() || !nu.contains(lambda) || !nu.contains(mu) {
        return 0;
    }
    SymElement::schur(lambda.clone()).mul(&SymElement::schur(mu.clone())).coeff(nu)
}

/// Product of the ordinary coefficients over the components.
pub fn multi_lr_coeff(lambda: &MultiPartition, mu: &MultiPartition, nu: &MultiPartition) -> i64 {
    (0..nu.n_components()).map(|k| lr_coeff(lambda.get(k), mu.get(k), nu.get(k))).product()
}

/// `det(h_{λ_i − i + j})` expanded in the Schur basis.  A product of `t`
/// complete functions only involves Schur functions with at most `t` rows,
/// so `t` variables suffice.
pub fn schur_from_jacobi_trudi(lambda: &Partition) -> SymElement {
    let t = lambda.len();
    let d = lambda.size();
    let k = t.max(1);
    // Expand the determinant row by row, indexed by the set of columns
    // already used; the sign counts used columns to the right of the new one.
    let hs: Vec<Poly> = (0..=d as i64).map(|n| poly::h_poly(n, k)).collect();
    let entry = |i: usize, j: usize| -> Option<&Poly> {
        let n = lambda.part(i) as i64 - i as i64 + j as i64;
        if n < 0 {
            None
        } else {
            Some(&hs[n as usize])
        }
    };
    let mut layer: BTreeMap<u32, Poly> = BTreeMap::new();
    layer.insert(0, poly::one(k));
    for i in 0..t {
        let mut next: BTreeMap<u32, Poly> = BTreeMap::new();
        for (mask, acc) in &layer {
            for j in (0..t).filter(|j| mask & (1 << j) == 0) {
                let Some(h) = entry(i, j) else { continue };
                let sign = if (mask >> (j + 1)).count_ones() % 2 == 0 { 1 } else { -1 };
                let slot = next.entry(mask | (1 << j)).or_default();
                poly::add_scaled(slot, &poly::mul(acc, h), sign);
            }
        }
        layer = next;
    }
    let total = layer.remove(&((1u32 << t) - 1)).unwrap_or_default();
    SymElement::from_poly(d, &total, k)
}

/// Counts standard Young tableaux by removing corners recursively.
pub fn count_standard_tableaux(lambda: &Partition) -> u128 {
    if lambda.size() == 0 {
        return 1;
    }
    let parts = lambda.parts();
    let mut total = 0;
    for i in 0..parts.len() {
        if parts[i] > lambda.part(i + 1) {
            let mut smaller = parts.to_vec();
            smaller[i] -= 1;
            total += count_standard_tableaux(&Partition::from_unsorted(smaller));
        }
    }
    total
}
