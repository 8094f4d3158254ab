use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cartan::CartanDatum;
use crate::error::RootError;
use crate::weight::WeightVec;

/// Real roots have norm 2; imaginary roots are `n·δ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RootKind {
    Real,
    Imaginary(i64),
}

/// A positive root of the affine root system.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Root {
    pub vector: WeightVec,
    pub kind: RootKind,
    pub height: i64,
}

impl Root {
    pub fn is_real(&self) -> bool {
        self.kind == RootKind::Real
    }

    pub fn is_imaginary(&self) -> bool {
        !self.is_real()
    }

    /// Root multiplicity: 1 for real roots, `|I| − 1` for imaginary ones.
    pub fn multiplicity(&self, c: &CartanDatum) -> usize {
        match self.kind {
            RootKind::Real => 1,
            RootKind::Imaginary(_) => c.n_nodes() - 1,
        }
    }

    /// A CSV row `coordinates,kind,height` with space-separated coordinates.
    pub fn csv_row(&self) -> String {
        let coords: Vec<String> = self.vector.0.iter().map(|x| x.to_string()).collect();
        let kind = match self.kind {
            RootKind::Real => "real".to_string(),
            RootKind::Imaginary(n) => format!("imaginary{n}"),
        };
        format!("{},{},{}", coords.join(" "), kind, self.height)
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.vector)
    }
}

impl CartanDatum {
    /// Classifies a vector of `ℕI` as a positive root, if it is one.
    pub fn classify(&self, v: &WeightVec) -> Option<Root> {
        if !v.is_nonneg() || v.is_zero() {
            return None;
        }
        let norm = self.form(v, v);
        let height = v.height();
        if norm == 2 {
            return Some(Root { vector: v.clone(), kind: RootKind::Real, height });
        }
        let d = self.delta();
        let n = v.0[self.affine_node()];
        if n > 0 && d.scale(n) == *v {
            return Some(Root { vector: v.clone(), kind: RootKind::Imaginary(n), height });
        }
        None
    }

    /// The root `v`, which must be one.
    pub fn root(&self, v: &WeightVec) -> Root {
        self.classify(v).unwrap_or_else(|| panic!("{v} is not a positive root"))
    }

    /// All positive roots of height at most `h`, sorted by height and then
    /// lexicographically; found by scanning `ℕI` for norm-2 vectors and
    /// multiples of `δ`.
    pub fn positive_roots_up_to(&self, h: i64) -> Vec<Root> {
        let n = self.n_nodes();
        let mut out = Vec::new();
        let mut cur = vec![0i64; n];
        fn rec(c: &CartanDatum, i: usize, left: i64, cur: &mut Vec<i64>, out: &mut Vec<Root>) {
            if i == cur.len() {
                if let Some(r) = c.classify(&WeightVec(cur.clone())) {
                    out.push(r);
                }
                return;
            }
            for x in 0..=left {
                cur[i] = x;
                rec(c, i + 1, left - x, cur, out);
            }
            cur[i] = 0;
        }
        rec(self, 0, h, &mut cur, &mut out);
        out.sort_by(|a, b| a.height.cmp(&b.height).then_with(|| a.vector.cmp(&b.vector)));
        out
    }

    /// The projection `p`: subtract `ν_a·δ` and drop the affine coordinate.
    pub fn project_p(&self, v: &WeightVec) -> Vec<i64> {
        let a = self.affine_node();
        let k = v.0[a];
        self.finite_nodes().into_iter().map(|i| v.0[i] - k * self.delta().0[i]).collect()
    }

    /// Embeds a finite-type vector with affine coordinate 0.
    pub fn embed_finite(&self, beta: &[i64]) -> WeightVec {
        let mut v = vec![0i64; self.n_nodes()];
        for (k, i) in self.finite_nodes().into_iter().enumerate() {
            v[i] = beta[k];
        }
        WeightVec(v)
    }

    /// The roots of the finite root system, as finite-type vectors (both signs).
    pub fn finite_roots(&self) -> Vec<Vec<i64>> {
        let dh = self.delta().height();
        let mut out: Vec<Vec<i64>> = self
            .positive_roots_up_to(dh - 1)
            .into_iter()
            .filter(|r| r.is_real())
            .map(|r| self.project_p(&r.vector))
            .collect();
        out.sort();
        out.dedup();
        out
    }

    /// The minimal positive root in `p⁻¹(β)`.
    pub fn lift_tilde(&self, beta: &[i64]) -> Result<Root, RootError> {
        let fin = self.embed_finite(beta);
        if beta.len() != self.n_nodes() - 1 || self.form(&fin, &fin) != 2 {
            return Err(RootError::NotAFiniteRoot(beta.to_vec()));
        }
        for k in 0.. {
            let v = &fin + &self.delta().scale(k);
            if v.is_nonneg() && !v.is_zero() {
                return Ok(self.root(&v));
            }
            if k > 2 {
                break;
            }
        }
        Err(RootError::NotAFiniteRoot(beta.to_vec()))
    }

    /// The simple reflection `s_i(ν) = ν − (Σ_j (i·j) ν_j) e_i`.
    pub fn reflect(&self, i: usize, v: &WeightVec) -> WeightVec {
        let c: i64 = (0..self.n_nodes()).map(|j| self.dot_nodes(i, j) * v.0[j]).sum();
        let mut out = v.clone();
        out.0[i] -= c;
        out
    }

    /// Inversion set `β_k = s_{i_1}···s_{i_{k-1}}(α_{i_k})` of a reduced word.
    pub fn inversion_set(&self, word: &[usize]) -> Result<Vec<Root>, RootError> {
        let n = self.n_nodes();
        let mut out: Vec<Root> = Vec::with_capacity(word.len());
        for (k, &i) in word.iter().enumerate() {
            if i >= n {
                return Err(RootError::BadNode(i));
            }
            let mut v = WeightVec::unit(n, i);
            for &j in word[..k].iter().rev() {
                v = self.reflect(j, &v);
            }
            let not_reduced = RootError::NotReduced { word: word.to_vec(), position: k };
            let r = self.classify(&v).ok_or(not_reduced.clone())?;
            if out.iter().any(|x| x.vector == r.vector) {
                return Err(not_reduced);
            }
            out.push(r);
        }
        Ok(out)
    }
}
