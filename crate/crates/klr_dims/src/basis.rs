use affine_roots::{CartanDatum, WeightVec};
use exactq::{LaurentPoly, RatFunc};
use qshuffle::{one_minus_q2, Word};

use crate::error::KlrError;

/// Largest height for which permutations are enumerated.
pub const MAX_HEIGHT: i64 = 5;

/// A basis element `y^a τ_w e_i` of `R(ν)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KlrBasisElement {
    pub source: Word,
    /// One-line form: position `k` of the source moves to position `w[k]`.
    pub permutation: Vec<usize>,
    pub exponents: Vec<u32>,
}

impl KlrBasisElement {
    /// The idempotent word `w(i)` on the left.
    pub fn target(&self) -> Word {
        let mut out = vec![0u8; self.source.len()];
        for (k, &p) in self.permutation.iter().enumerate() {
            out[p] = self.source.0[k];
        }
        Word(out)
    }

    /// `Σ 2a_k + Σ_{k<l, w(k)>w(l)} −i_k·i_l`.
    pub fn degree(&self, c: &CartanDatum) -> i64 {
        let w = &self.permutation;
        let i = &self.source.0;
        let poly: i64 = self.exponents.iter().map(|&a| 2 * a as i64).sum();
        let mut cross = 0;
        for k in 0..w.len() {
            for l in k + 1..w.len() {
                if w[k] > w[l] {
                    cross -= c.dot_nodes(i[k] as usize, i[l] as usize);
                }
            }
        }
        poly + cross
    }
}

fn check_pair(nu: &WeightVec, i: &Word, j: &Word) -> Result<(), KlrError> {
    if nu.height() > MAX_HEIGHT {
        return Err(KlrError::HeightBoundExceeded { height: nu.height(), bound: MAX_HEIGHT });
    }
    for w in [i, j] {
        if w.weight(nu.len()) != *nu {
            return Err(KlrError::WrongWeight { word: w.to_string(), weight: nu.to_string() });
        }
    }
    Ok(())
}

/// The elements `τ_w e_i` with `w(i) = j`, in lexicographic order of `w`.
pub fn permutations_between(nu: &WeightVec, i: &Word, j: &Word) -> Result<Vec<KlrBasisElement>, KlrError> {
    check_pair(nu, i, j)?;
    let n = i.len();
    let mut out = Vec::new();
    let mut used = vec![false; n];
    let mut cur = Vec::with_capacity(n);
    fn rec(i: &Word, j: &Word, used: &mut [bool], cur: &mut Vec<usize>, out: &mut Vec<KlrBasisElement>) {
        let k = cur.len();
        if k == i.len() {
            out.push(KlrBasisElement { source: i.clone(), permutation: cur.clone(), exponents: vec![0; i.len()] });
            return;
        }
        for p in 0..i.len() {
            if !used[p] && j.0[p] == i.0[k] {
                used[p] = true;
                cur.push(p);
                rec(i, j, used, cur, out);
                cur.pop();
                used[p] = false;
            }
        }
    }
    rec(i, j, &mut used, &mut cur, &mut out);
    Ok(out)
}

/// `Σ_{w(i)=j} q^{deg τ_w e_i}`.
pub fn graded_dim_numerator(c: &CartanDatum, nu: &WeightVec, i: &Word, j: &Word) -> Result<LaurentPoly, KlrError> {
    let mut acc = LaurentPoly::zero();
    for b in permutations_between(nu, i, j)? {
        acc = &acc + &LaurentPoly::monomial_i64(1, b.degree(c));
    }
    Ok(acc)
}

/// The graded dimension of `e_j R(ν) e_i` as a rational function.
pub fn graded_dim(c: &CartanDatum, nu: &WeightVec, i: &Word, j: &Word) -> Result<RatFunc, KlrError> {
    let num = graded_dim_numerator(c, nu, i, j)?;
    Ok(RatFunc::new(num, one_minus_q2().pow(nu.height() as u32)).expect("nonzero denominator"))
}
