use std::collections::{BTreeMap, HashMap};

use affine_roots::{CartanDatum, WeightVec};
use exactq::{modp, q_factorial, LaurentPoly, RatFunc};

use crate::qvec::{ShuffleVec, Side};
use crate::word::{words_of_weight, Word};

/// `(i, j, m)` for every ordered pair of distinct nodes, with
/// `m = 1 − i·j`.
fn serre_pairs(c: &CartanDatum) -> Vec<(usize, usize, usize)> {
    let n = c.n_nodes();
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                out.push((i, j, (1 - c.dot_nodes(i, j)) as usize));
            }
        }
    }
    out
}

fn serre_word(i: usize, j: usize, k: usize, m: usize) -> Word {
    let mut w = vec![i as u8; k];
    w.push(j as u8);
    w.extend(std::iter::repeat(i as u8).take(m - k));
    Word(w)
}

/// The quantum Serre element `Σ_k (−1)^k θ_i^{(k)} θ_j θ_i^{(m−k)}`,
/// `m = 1 − i·j`, as a free-algebra coefficient vector.
pub fn serre_element(c: &CartanDatum, i: usize, j: usize) -> ShuffleVec {
    let m = (1 - c.dot_nodes(i, j)) as usize;
    let mut coords = BTreeMap::new();
    for k in 0..=m {
        let den = q_factorial(k as u32).mul_ref(&q_factorial((m - k) as u32));
        let sign = if k % 2 == 0 { 1 } else { -1 };
        coords.insert(serre_word(i, j, k, m), RatFunc::new(LaurentPoly::from(sign), den).expect("nonzero"));
    }
    let mut weight = WeightVec::zero(c.n_nodes());
    weight.0[i] += m as i64;
    weight.0[j] += 1;
    ShuffleVec::from_ratfuncs(Side::Free, weight, coords).expect("consistent weight")
}

/// Vectors `u·S_{ij}·v` of weight `ν` evaluated at `q = x` modulo `p`, as
/// dense rows indexed by `index`.  They lie in the radical of the form, so
/// `#words − rank` of these rows bounds `dim f_ν` from above.
pub fn serre_kernel_mod(c: &CartanDatum, nu: &WeightVec, index: &HashMap<Word, usize>, x: u64, p: u64) -> Vec<Vec<u64>> {
    let mut rows = Vec::new();
    for (i, j, m) in serre_pairs(c) {
        let mut rest = nu.clone();
        rest.0[i] -= m as i64;
        rest.0[j] -= 1;
        if !rest.is_nonneg() {
            continue;
        }
        let coeffs: Vec<u64> = (0..=m)
            .map(|k| {
                let d = modp::eval_laurent(&q_factorial(k as u32).mul_ref(&q_factorial((m - k) as u32)), x, p);
                let v = modp::inv(d, p);
                if k % 2 == 0 {
                    v
                } else {
                    modp::sub(0, v, p)
                }
            })
            .collect();
        let middles: Vec<Word> = (0..=m).map(|k| serre_word(i, j, k, m)).collect();
        for r in words_of_weight(&rest) {
            for s in 0..=r.len() {
                let (u, v) = r.split_at(s);
                let mut row = vec![0u64; index.len()];
                for (k, mid) in middles.iter().enumerate() {
                    row[index[&u.concat(mid).concat(&v)]] = coeffs[k];
                }
                rows.push(row);
            }
        }
    }
    rows
}
