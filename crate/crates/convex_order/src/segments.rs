use std::cmp::Ordering;
use std::collections::BTreeSet;

use affine_roots::{Root, WeightVec};

use crate::error::OrderError;
use crate::order::{ConvexOrderSpec, RootPreorder};

/// A minimal pair `(β, γ)` for a root `α = β + γ` with `γ ≺ β`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimalPair {
    pub beta: Root,
    pub gamma: Root,
}

impl MinimalPair {
    /// True when both members are real roots.
    pub fn is_real(&self) -> bool {
        self.beta.is_real() && self.gamma.is_real()
    }
}

impl ConvexOrderSpec {
    /// All positive roots of height at most `h`, in increasing order.
    pub fn sorted_roots(&self, h: i64) -> Vec<Root> {
        let mut roots = self.cartan().positive_roots_up_to(h);
        self.sort_roots(&mut roots);
        roots
    }

    /// The `n` smallest positive roots.  The answer computed with height
    /// bound `h` must not change when the bound grows by `ht(δ)`.
    pub fn first_n_roots(&self, n: usize, h: i64) -> Result<Vec<Root>, OrderError> {
        if n == 0 {
            return Ok(Vec::new());
        }
        let at = self.sorted_roots(h);
        if at.len() < n {
            return Err(OrderError::BoundTooSmall(h));
        }
        let grown = self.sorted_roots(h + self.cartan().delta().height());
        if at[..n] != grown[..n] {
            return Err(OrderError::NotWordTypeAtScale(n));
        }
        Ok(at[..n].to_vec())
    }

    /// A reduced word `i_1 … i_n` whose inversion sequence
    /// `s_{i_1}⋯s_{i_{k−1}}(α_{i_k})` is the initial segment of length `n`.
    pub fn reduced_word_from_segment(&self, n: usize, h: i64) -> Result<Vec<usize>, OrderError> {
        let segment = self.first_n_roots(n, h)?;
        let c = self.cartan();
        let mut word: Vec<usize> = Vec::with_capacity(n);
        for root in &segment {
            let mut v = root.vector.clone();
            for &j in &word {
                v = c.reflect(j, &v);
            }
            let node = (0..c.n_nodes())
                .find(|&i| v == WeightVec::unit(c.n_nodes(), i))
                .ok_or_else(|| OrderError::NotSimpleAfterPullback(root.to_string()))?;
            word.push(node);
        }
        let inv: BTreeSet<WeightVec> = c.inversion_set(&word)?.into_iter().map(|r| r.vector).collect();
        let seg: BTreeSet<WeightVec> = segment.into_iter().map(|r| r.vector).collect();
        if inv != seg {
            return Err(OrderError::NotSimpleAfterPullback(format!("{word:?}")));
        }
        Ok(word)
    }

    fn projected_side(&self, h: i64, side: Ordering) -> Result<Vec<Vec<i64>>, OrderError> {
        let c = self.cartan();
        let delta = c.delta();
        let mut out: BTreeSet<Vec<i64>> = BTreeSet::new();
        for r in c.positive_roots_up_to(h) {
            if r.is_real() && self.cmp_roots(&r.vector, delta) == side {
                out.insert(c.project_p(&r.vector));
            }
        }
        let out: Vec<Vec<i64>> = out.into_iter().collect();
        c.validate_positive_system(&out)?;
        Ok(out)
    }

    /// `{p(α) : α ≺ δ real, ht(α) ≤ h}`, checked to be a positive system.
    pub fn positive_system_below_delta(&self, h: i64) -> Result<Vec<Vec<i64>>, OrderError> {
        self.projected_side(h, Ordering::Less)
    }

    /// `{p(α) : α ≻ δ real, ht(α) ≤ h}`, checked to be a positive system.
    pub fn positive_system_above_delta(&self, h: i64) -> Result<Vec<Vec<i64>>, OrderError> {
        self.projected_side(h, Ordering::Greater)
    }

    /// A minimal pair for `α`: `α = β + γ` with `γ ≺ β` and no decomposition
    /// `α = β' + γ'` with `γ ≺ γ' ⪯ β' ≺ β`.  Imaginary members are allowed;
    /// among several minimal pairs the one with the greatest `γ` is returned.
    pub fn minimal_pair(&self, alpha: &Root) -> Result<MinimalPair, OrderError> {
        let c = self.cartan();
        let mut pairs: Vec<(Root, Root)> = Vec::new();
        for g in c.positive_roots_up_to(alpha.height - 1) {
            let rest = &alpha.vector - &g.vector;
            if let Some(b) = c.classify(&rest) {
                if self.cmp_roots(&g.vector, &b.vector) == Ordering::Less {
                    pairs.push((b, g));
                }
            }
        }
        let lt = |x: &Root, y: &Root| self.cmp_roots(&x.vector, &y.vector) == Ordering::Less;
        let le = |x: &Root, y: &Root| self.cmp_roots(&x.vector, &y.vector) != Ordering::Greater;
        let minimal: Vec<&(Root, Root)> = pairs
            .iter()
            .filter(|(b, g)| !pairs.iter().any(|(b2, g2)| lt(g, g2) && le(g2, b2) && lt(b2, b)))
            .collect();
        let best = minimal
            .into_iter()
            .max_by(|(_, g1), (_, g2)| self.cmp_roots(&g1.vector, &g2.vector).then(g1.height.cmp(&g2.height)))
            .ok_or_else(|| OrderError::NoPairExists(alpha.to_string()))?;
        Ok(MinimalPair { beta: best.0.clone(), gamma: best.1.clone() })
    }
}
