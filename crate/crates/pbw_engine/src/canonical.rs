use std::cmp::Ordering;
use std::sync::Arc;

use exactq::{LaurentPoly, RatFunc};
use qshuffle::{linalg, ShuffleVec, Side};

use crate::basis::PbwBasis;
use crate::element::Element;
use crate::engine::Engine;
use crate::error::PbwError;
use crate::partition::Extension;

/// Which side of the partial order the off-diagonal part of the bar matrix
/// lives on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Triangularity {
    /// `bar(E_π) − E_π` is supported on `σ > π`.
    Upper,
    /// `bar(E_π) − E_π` is supported on `σ < π`.
    Lower,
}

/// `bar(E_π) = Σ_σ A[π][σ] E_σ`, indexed like the basis.
#[derive(Clone, Debug)]
pub struct BarMatrix {
    pub entries: Vec<Vec<LaurentPoly>>,
}

/// Where the nonzero entries of a bar matrix sit relative to the partial
/// order on root partitions.
#[derive(Clone, Debug, Default)]
pub struct TriangularityReport {
    /// Diagonal entries different from 1.
    pub bad_diagonal: Vec<usize>,
    /// Nonzero `(π, σ)` with `σ > π`.
    pub above: Vec<(usize, usize)>,
    /// Nonzero `(π, σ)` with `σ < π`.
    pub below: Vec<(usize, usize)>,
    /// Nonzero `(π, σ)` with `σ ≠ π` in the same class.
    pub class_mixing: Vec<(usize, usize)>,
    /// Nonzero `(π, σ)` with `σ` and `π` incomparable.
    pub incomparable: Vec<(usize, usize)>,
}

impl TriangularityReport {
    /// The realized direction, if the matrix is unitriangular with respect to
    /// the partial order.  A diagonal matrix counts as `Upper`.
    pub fn direction(&self) -> Option<Triangularity> {
        if !self.bad_diagonal.is_empty() || !self.class_mixing.is_empty() || !self.incomparable.is_empty() {
            return None;
        }
        match (self.above.is_empty(), self.below.is_empty()) {
            (_, true) => Some(Triangularity::Upper),
            (true, false) => Some(Triangularity::Lower),
            (false, false) => None,
        }
    }

    pub fn is_unitriangular(&self) -> bool {
        self.direction().is_some()
    }
}

/// The canonical basis of one weight, as coefficients over the PBW basis.
#[derive(Clone, Debug)]
pub struct CanonicalBasis {
    pub basis: Arc<PbwBasis>,
    pub bar: BarMatrix,
    pub triangularity: TriangularityReport,
    /// `coeffs[π][σ]`: coefficient of `E_σ` in `b_π`.
    pub coeffs: Vec<Vec<LaurentPoly>>,
    pub elements: Vec<Element>,
    /// Off-diagonal coefficients outside `qℕ[q]`.
    pub non_positive: Vec<(usize, usize)>,
}

impl CanonicalBasis {
    pub fn is_positive(&self) -> bool {
        self.non_positive.is_empty()
    }

    /// The dual canonical basis `b*_π`, with `⟨b_π, b*_σ⟩ = δ_{πσ}`.
    pub fn dual_canonical(&self) -> Result<Vec<ShuffleVec>, PbwError> {
        let n = self.coeffs.len();
        let c: Vec<Vec<RatFunc>> =
            self.coeffs.iter().map(|r| r.iter().map(|p| RatFunc::from(p.clone())).collect()).collect();
        let inv = linalg::inverse(&c).ok_or_else(|| PbwError::Precondition("canonical matrix is singular".into()))?;
        let mut out = Vec::with_capacity(n);
        for s in 0..n {
            let mut acc = ShuffleVec::zero(Side::Dual, self.basis.weight.clone());
            for (t, d) in self.basis.duals.iter().enumerate() {
                if !inv[t][s].is_zero() {
                    acc = acc.add_scaled(d, &inv[t][s])?;
                }
            }
            out.push(acc.reduced());
        }
        Ok(out)
    }

    /// Checks that `D_σ = Σ_π ⟨b_π, D_σ⟩ b*_π` with `⟨b_π, D_σ⟩` equal to the
    /// coefficient of `E_σ` in `b_π`, i.e. that the matrix of `{D}` in the
    /// dual canonical basis is the transpose of the matrix of `{b}` in the
    /// PBW basis.
    pub fn transpose_identity_holds(&self) -> Result<bool, PbwError> {
        let duals = self.dual_canonical()?;
        for (s, d) in self.basis.duals.iter().enumerate() {
            let mut acc = ShuffleVec::zero(Side::Dual, self.basis.weight.clone());
            for (p, b) in self.elements.iter().enumerate() {
                let y = b.pair(d);
                if y != RatFunc::from(self.coeffs[p][s].clone()) {
                    return Ok(false);
                }
                acc = acc.add_scaled(&duals[p], &y)?;
            }
            if acc != *d {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl Engine {
    /// Expands `bar(E_π)` in the PBW basis.  Entries must be Laurent.
    pub fn bar_matrix(&self, basis: &PbwBasis) -> Result<BarMatrix, PbwError> {
        let mut entries = Vec::with_capacity(basis.len());
        for (p, e) in basis.elements.iter().enumerate() {
            let bar = e.free.bar();
            let mut row = Vec::with_capacity(basis.len());
            for (s, d) in basis.duals.iter().enumerate() {
                let v = bar.dot(d);
                row.push(v.to_laurent().ok_or_else(|| PbwError::NotUnitriangular {
                    row: basis.partitions[p].to_string(),
                    col: basis.partitions[s].to_string(),
                    value: v.to_string(),
                })?);
            }
            entries.push(row);
        }
        Ok(BarMatrix { entries })
    }

    /// Classifies the nonzero entries of a bar matrix against the partial
    /// order.
    pub fn triangularity(&self, basis: &PbwBasis, bar: &BarMatrix) -> TriangularityReport {
        let mut r = TriangularityReport::default();
        for (p, row) in bar.entries.iter().enumerate() {
            if !row[p].is_one() {
                r.bad_diagonal.push(p);
            }
            for (s, a) in row.iter().enumerate() {
                if s == p || a.is_zero() {
                    continue;
                }
                match self.compare_partitions(&basis.partitions[s], &basis.partitions[p]) {
                    Some(Ordering::Greater) => r.above.push((p, s)),
                    Some(Ordering::Less) => r.below.push((p, s)),
                    Some(Ordering::Equal) => r.class_mixing.push((p, s)),
                    None => r.incomparable.push((p, s)),
                }
            }
        }
        r
    }

    /// Solves for the bar-invariant `b_π = E_π + Σ c_{πσ} E_σ` with
    /// `c ∈ qℤ[q]`, processing partitions along the linear extension `ext`.
    fn solve_canonical(
        &self,
        basis: &PbwBasis,
        bar: &BarMatrix,
        ext: Extension,
        dir: Triangularity,
    ) -> Result<Vec<Vec<LaurentPoly>>, PbwError> {
        let n = basis.len();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| self.cmp_in_extension(&basis.partitions[a], &basis.partitions[b], ext));
        if dir == Triangularity::Lower {
            order.reverse();
        }
        let mut position = vec![0; n];
        for (k, &i) in order.iter().enumerate() {
            position[i] = k;
        }
        for (s, row) in bar.entries.iter().enumerate() {
            for (t, a) in row.iter().enumerate() {
                if s != t && !a.is_zero() && position[s] > position[t] {
                    return Err(PbwError::NotUnitriangular {
                        row: basis.partitions[s].to_string(),
                        col: basis.partitions[t].to_string(),
                        value: a.to_string(),
                    });
                }
            }
        }
        let mut coeffs = vec![vec![LaurentPoly::zero(); n]; n];
        for pi in 0..n {
            coeffs[pi][pi] = LaurentPoly::one();
            for &t in &order {
                if t == pi {
                    continue;
                }
                let mut r = LaurentPoly::zero();
                for s in 0..n {
                    if s != t && !coeffs[pi][s].is_zero() && !bar.entries[s][t].is_zero() {
                        r = &r + &coeffs[pi][s].bar().mul_ref(&bar.entries[s][t]);
                    }
                }
                let c = r.positive_part();
                if r != &c - &c.bar() {
                    return Err(PbwError::NoCanonicalSolution {
                        pi: basis.partitions[pi].to_string(),
                        sigma: basis.partitions[t].to_string(),
                        residual: r.to_string(),
                    });
                }
                coeffs[pi][t] = c;
            }
        }
        Ok(coeffs)
    }

    /// Bar matrix, triangularity report and canonical basis of `f_ν`.
    ///
    /// The canonical basis is solved along both linear extensions; differing
    /// answers are reported as `NoCanonicalSolution`.  Each `b_π` is checked
    /// to be bar-invariant as an element of `f`.
    pub fn canonical_basis(&self, nu: &affine_roots::WeightVec) -> Result<CanonicalBasis, PbwError> {
        let basis = self.pbw_basis(nu)?;
        let bar = self.bar_matrix(&basis)?;
        let triangularity = self.triangularity(&basis, &bar);
        let dir = triangularity.direction().unwrap_or(if triangularity.below.is_empty() {
            Triangularity::Upper
        } else {
            Triangularity::Lower
        });
        let coeffs = self.solve_canonical(&basis, &bar, Extension::Primary, dir)?;
        let second = self.solve_canonical(&basis, &bar, Extension::Secondary, dir)?;
        for (p, (a, b)) in coeffs.iter().zip(&second).enumerate() {
            if let Some(s) = (0..a.len()).find(|&s| a[s] != b[s]) {
                return Err(PbwError::NoCanonicalSolution {
                    pi: basis.partitions[p].to_string(),
                    sigma: basis.partitions[s].to_string(),
                    residual: format!("extensions disagree: {} vs {}", a[s], b[s]),
                });
            }
        }
        let mut elements = Vec::with_capacity(basis.len());
        for (p, row) in coeffs.iter().enumerate() {
            let cs: Vec<RatFunc> = row.iter().map(|c| RatFunc::from(c.clone())).collect();
            let b = basis.combine(&cs)?;
            let bar_b = Element { free: b.free.bar(), vec: b.vec.clone() };
            for (s, d) in basis.duals.iter().enumerate() {
                let v = bar_b.pair(d);
                if v != cs[s] {
                    return Err(PbwError::NoCanonicalSolution {
                        pi: basis.partitions[p].to_string(),
                        sigma: basis.partitions[s].to_string(),
                        residual: format!("b is not bar-invariant: {v} vs {}", cs[s]),
                    });
                }
            }
            elements.push(b);
        }
        let mut non_positive = Vec::new();
        for (p, row) in coeffs.iter().enumerate() {
            for (s, c) in row.iter().enumerate() {
                if s != p && !(c.is_nonnegative() && c.low_exp().map_or(true, |e| e > 0)) {
                    non_positive.push((p, s));
                }
            }
        }
        Ok(CanonicalBasis { basis, bar, triangularity, coeffs, elements, non_positive })
    }
}
