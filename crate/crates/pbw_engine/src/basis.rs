use std::cmp::Ordering;
use std::sync::Arc;
use std::thread;

use affine_roots::WeightVec;
use exactq::{q_factorial, LaurentPoly, RatFunc};
use qshuffle::{linalg, ShuffleVec, Side};

use crate::element::Element;
use crate::engine::Engine;
use crate::error::PbwError;
use crate::partition::RootPartition;

/// PBW and dual PBW bases of `f_ν`.
#[derive(Clone, Debug)]
pub struct PbwBasis {
    pub weight: WeightVec,
    /// Root partitions in the primary linear extension.
    pub partitions: Vec<RootPartition>,
    /// `E_π`.
    pub elements: Vec<Element>,
    /// `D_π` as characters, with `⟨E_π, D_σ⟩ = δ_{πσ}`.
    pub duals: Vec<ShuffleVec>,
    /// `⟨E_π, E_σ⟩`.
    pub pairing: Vec<Vec<RatFunc>>,
    /// Index pairs of different classes with nonzero pairing.
    pub cross_class_pairs: Vec<(usize, usize)>,
}

impl PbwBasis {
    pub fn len(&self) -> usize {
        self.partitions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.partitions.is_empty()
    }

    pub fn index_of(&self, pi: &RootPartition) -> Option<usize> {
        self.partitions.iter().position(|p| p == pi)
    }

    /// Coefficients of `x` in the PBW basis: `⟨x, D_σ⟩`.
    pub fn expand(&self, x: &Element) -> Vec<RatFunc> {
        self.duals.iter().map(|d| x.pair(d)).collect()
    }

    /// `Σ_σ a_σ E_σ`.
    pub fn combine(&self, coeffs: &[RatFunc]) -> Result<Element, PbwError> {
        let mut acc = Element::zero(self.weight.clone());
        for (a, e) in coeffs.iter().zip(&self.elements) {
            acc = acc.add_scaled(e, a)?;
        }
        Ok(acc)
    }
}

fn invert_blocks(b: &[Vec<RatFunc>], blocks: &[Vec<usize>]) -> Option<Vec<Vec<RatFunc>>> {
    let n = b.len();
    let mut inv = vec![vec![RatFunc::zero(); n]; n];
    for block in blocks {
        let sub: Vec<Vec<RatFunc>> = block.iter().map(|&i| block.iter().map(|&j| b[i][j].clone()).collect()).collect();
        let si = linalg::inverse(&sub)?;
        for (a, &i) in block.iter().enumerate() {
            for (c, &j) in block.iter().enumerate() {
                inv[i][j] = si[a][c].clone();
            }
        }
    }
    Some(inv)
}

impl Engine {
    fn power(&self, v: &WeightVec, m: u32) -> Result<Element, PbwError> {
        let c = self.cartan();
        let e = self.root_element(v)?;
        let mut acc = Element::one(c.n_nodes());
        for _ in 0..m {
            acc = acc.mul(c, &e)?;
        }
        Ok(acc.scale(&RatFunc::new(LaurentPoly::one(), q_factorial(m)).expect("nonzero")))
    }

    /// `E_π`: divided powers of real root vectors above `δ` (decreasing),
    /// then `Π_ω S^ω_{λ_ω}`, then divided powers below `δ` (decreasing).
    pub fn pbw_element(&self, pi: &RootPartition) -> Result<Element, PbwError> {
        let c = self.cartan();
        let delta = c.delta();
        let mut real: Vec<(&WeightVec, u32)> = pi.real().iter().map(|(r, &m)| (r, m)).collect();
        real.sort_by(|a, b| self.cmp_roots(b.0, a.0));
        let mut acc = Element::one(c.n_nodes());
        for (r, m) in real.iter().filter(|(r, _)| self.cmp_roots(r, delta) == Ordering::Greater) {
            acc = acc.mul(c, &self.power(r, *m)?)?;
        }
        acc = acc.mul(c, &self.imaginary_product(pi.imaginary())?)?;
        for (r, m) in real.iter().filter(|(r, _)| self.cmp_roots(r, delta) == Ordering::Less) {
            acc = acc.mul(c, &self.power(r, *m)?)?;
        }
        Ok(acc)
    }

    /// Builds `E_π` for every root partition of `ν`, checks that their number
    /// is `dim f_ν`, and solves for the dual basis.  Every dual element must
    /// have coordinates in `ℕ[q, q⁻¹]`.
    pub fn pbw_basis(&self, nu: &WeightVec) -> Result<Arc<PbwBasis>, PbwError> {
        self.bases.get_or_try(nu, || self.build_pbw_basis(nu))
    }

    fn build_pbw_basis(&self, nu: &WeightVec) -> Result<PbwBasis, PbwError> {
        let partitions = self.enumerate_root_partitions(nu)?;
        let dim = self.dim(nu)?;
        let dependent = |found| PbwError::DependentPbw { weight: nu.to_string(), found, dim };
        if partitions.len() != dim {
            return Err(dependent(partitions.len()));
        }
        let elements: Vec<Element> = partitions.iter().map(|p| self.pbw_element(p)).collect::<Result<_, _>>()?;
        let n = elements.len();
        let pairing: Vec<Vec<RatFunc>> =
            elements.iter().map(|a| elements.iter().map(|b| a.pair(&b.vec)).collect()).collect();
        let mut cross_class_pairs = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if !pairing[i][j].is_zero() && !partitions[i].same_class(&partitions[j]) {
                    cross_class_pairs.push((i, j));
                }
            }
        }
        let blocks: Vec<Vec<usize>> = if cross_class_pairs.is_empty() {
            let mut blocks: Vec<Vec<usize>> = Vec::new();
            for i in 0..n {
                match blocks.iter_mut().find(|b| partitions[b[0]].same_class(&partitions[i])) {
                    Some(b) => b.push(i),
                    None => blocks.push(vec![i]),
                }
            }
            blocks
        } else {
            vec![(0..n).collect()]
        };
        let inv = invert_blocks(&pairing, &blocks).ok_or_else(|| dependent(n))?;
        let mut duals = Vec::with_capacity(n);
        for s in 0..n {
            let mut d = ShuffleVec::zero(Side::F, nu.clone());
            for (r, e) in elements.iter().enumerate() {
                if !inv[r][s].is_zero() {
                    d = d.add_scaled(&e.vec, &inv[r][s])?;
                }
            }
            duals.push(d.reduced().with_side(Side::Dual));
        }
        for (p, e) in elements.iter().enumerate() {
            for (s, d) in duals.iter().enumerate() {
                let v = e.pair(d);
                let expected = if p == s { RatFunc::one() } else { RatFunc::zero() };
                if v != expected {
                    return Err(PbwError::DualityFailed {
                        pi: partitions[p].to_string(),
                        sigma: partitions[s].to_string(),
                        value: v.to_string(),
                    });
                }
            }
        }
        for (s, d) in duals.iter().enumerate() {
            for (w, v) in d.coords() {
                if !v.to_laurent().is_some_and(|p| p.is_nonnegative()) {
                    return Err(PbwError::DualNotPositive {
                        partition: partitions[s].to_string(),
                        word: w.to_string(),
                        value: v.to_string(),
                    });
                }
            }
        }
        Ok(PbwBasis { weight: nu.clone(), partitions, elements, duals, pairing, cross_class_pairs })
    }

    /// Builds the bases of several weights concurrently; results are in the
    /// order of `weights`.
    pub fn pbw_bases(&self, weights: &[WeightVec]) -> Vec<Result<Arc<PbwBasis>, PbwError>> {
        thread::scope(|s| {
            let handles: Vec<_> = weights.iter().map(|nu| s.spawn(move || self.pbw_basis(nu))).collect();
            handles.into_iter().map(|h| h.join().expect("basis worker panicked")).collect()
        })
    }
}
