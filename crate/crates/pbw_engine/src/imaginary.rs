use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use exactq::{q_int, LaurentPoly, RatFunc};
use symfun::{MultiPartition, Partition};

use crate::element::Element;
use crate::engine::{Engine, Labeling};
use crate::error::PbwError;

impl Engine {
    fn coweight_index(&self, k: usize) -> Result<(), PbwError> {
        if k >= self.coweights().len() {
            return Err(PbwError::Precondition(format!("no chamber coweight with index {k}")));
        }
        Ok(())
    }

    /// `ψ_n^ω = E_{nδ−ω₊} E_{ω₊} − q² E_{ω₊} E_{nδ−ω₊}` for the coweight with
    /// index `k`.
    pub fn psi(&self, k: usize, n: u32) -> Result<Arc<Element>, PbwError> {
        self.coweight_index(k)?;
        if n == 0 {
            return Err(PbwError::Precondition("ψ_n needs n ≥ 1".into()));
        }
        self.psis.get_or_try(&(k, n), || {
            let c = self.cartan();
            let plus = self.coweights()[k].plus_lift.vector.clone();
            let rest = &c.delta().scale(n as i64) - &plus;
            self.check_height(&c.delta().scale(n as i64))?;
            let a = self.root_element(&rest)?;
            let b = self.root_element(&plus)?;
            Ok(a.commutator(c, &b, &RatFunc::from(LaurentPoly::monomial_i64(1, 2)))?)
        })
    }

    /// `P_0 = 1`, `P_n = [n]⁻¹ Σ_{s=1}^{n} q^{n−s} ψ_s P_{n−s}`.
    pub fn p_vector(&self, k: usize, n: u32) -> Result<Arc<Element>, PbwError> {
        self.coweight_index(k)?;
        self.ps.get_or_try(&(k, n), || {
            let c = self.cartan();
            if n == 0 {
                return Ok(Element::one(c.n_nodes()));
            }
            let mut acc = Element::zero(c.delta().scale(n as i64));
            for s in 1..=n {
                let term = self.psi(k, s)?.mul(c, &*self.p_vector(k, n - s)?)?;
                acc = acc.add_scaled(&term, &RatFunc::from(LaurentPoly::monomial_i64(1, (n - s) as i64)))?;
            }
            Ok(acc.scale(&RatFunc::new(LaurentPoly::one(), q_int(n)).expect("nonzero")))
        })
    }

    /// `S_λ^ω = det(P_{λ_i − i + j})` over `max(ℓ(λ), 1)` rows.
    pub fn schur_vector(&self, k: usize, lambda: &Partition) -> Result<Arc<Element>, PbwError> {
        self.schur_vector_rows(k, lambda, lambda.len().max(1))
    }

    /// The Jacobi–Trudi determinant with `t ≥ ℓ(λ)` rows.  Entries that
    /// occur together in a nonvanishing term are checked to commute before
    /// the expansion.
    pub fn schur_vector_rows(&self, k: usize, lambda: &Partition, t: usize) -> Result<Arc<Element>, PbwError> {
        self.coweight_index(k)?;
        if t < lambda.len() {
            return Err(PbwError::Precondition(format!("{t} rows cannot hold {lambda}")));
        }
        self.schurs.get_or_try(&(k, lambda.clone(), t), || {
            let c = self.cartan();
            let idx = |i: usize, j: usize| lambda.part(i) as i64 - i as i64 + j as i64;
            // The entries commute, so a term depends only on the multiset of
            // its indices; collect signs per multiset first.
            let mut perm: Vec<usize> = (0..t).collect();
            let mut terms: Vec<(Vec<usize>, i64)> = Vec::new();
            permutations(&mut perm, 0, 1, &mut terms);
            let mut grouped: BTreeMap<Vec<u32>, i64> = BTreeMap::new();
            'perm: for (p, sign) in terms {
                let mut key = Vec::with_capacity(t);
                for (i, &j) in p.iter().enumerate() {
                    let m = idx(i, j);
                    if m < 0 {
                        continue 'perm;
                    }
                    if m > 0 {
                        key.push(m as u32);
                    }
                }
                key.sort_unstable();
                *grouped.entry(key).or_insert(0) += sign;
            }
            // Entries meeting in a nonvanishing term must commute.
            let mut pairs: BTreeSet<(u32, u32)> = BTreeSet::new();
            for key in grouped.keys() {
                for (a, &m) in key.iter().enumerate() {
                    for &n in &key[a + 1..] {
                        if m != n {
                            pairs.insert((m, n));
                        }
                    }
                }
            }
            for (m, n) in pairs {
                let pm = self.p_vector(k, m)?;
                let pn = self.p_vector(k, n)?;
                if !pm.mul(c, &pn)?.same_as(&pn.mul(c, &pm)?) {
                    return Err(PbwError::EntriesDoNotCommute(format!("P_{m}, P_{n}")));
                }
            }
            let mut acc = Element::zero(c.delta().scale(lambda.size() as i64));
            for (key, sign) in grouped.into_iter().filter(|(_, s)| *s != 0) {
                let mut prod = Element::one(c.n_nodes());
                for m in key {
                    prod = prod.mul(c, &*self.p_vector(k, m)?)?;
                }
                acc = acc.add_scaled(&prod, &RatFunc::from(sign))?;
            }
            Ok(acc)
        })
    }

    /// The Schur element standing for the label `λ` at coweight `k` under
    /// the engine's labeling.
    pub fn imaginary_element(&self, k: usize, lambda: &Partition) -> Result<Arc<Element>, PbwError> {
        match self.labeling() {
            Labeling::Direct => self.schur_vector(k, lambda),
            Labeling::Transposed => self.schur_vector(k, &lambda.conjugate()),
        }
    }

    /// `Π_ω S^ω_{λ_ω}` over the coweights, in index order.
    pub fn imaginary_product(&self, labels: &MultiPartition) -> Result<Element, PbwError> {
        let c = self.cartan();
        let mut acc = Element::one(c.n_nodes());
        for (k, lambda) in labels.components().iter().enumerate() {
            if !lambda.is_empty() {
                acc = acc.mul(c, &*self.imaginary_element(k, lambda)?)?;
            }
        }
        Ok(acc)
    }
}

fn permutations(p: &mut Vec<usize>, start: usize, sign: i64, out: &mut Vec<(Vec<usize>, i64)>) {
    if start == p.len() {
        out.push((p.clone(), sign));
        return;
    }
    for i in start..p.len() {
        p.swap(start, i);
        permutations(p, start + 1, if i == start { sign } else { -sign }, out);
        p.swap(start, i);
    }
}
