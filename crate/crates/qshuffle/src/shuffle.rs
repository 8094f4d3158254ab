use std::collections::{BTreeMap, BTreeSet, HashMap};

use affine_roots::{CartanDatum, WeightVec};
use exactq::{LaurentPoly, RatFunc};

use crate::error::ShuffleError;
use crate::qvec::{Side, ShuffleVec};
use crate::word::Word;

/// Sign of the twist exponent: an interleaving `S` of the letters of the
/// left factor into `w` contributes `q^{TWIST_SIGN · e(S, w)}` with
/// `e(S, w) = Σ_{k∈S, l∉S, l<k} w_l·w_k`.
pub const TWIST_SIGN: i64 = -1;

/// Calls `emit(w, exponent)` once per interleaving `w` of `u` and `v`
/// (letters of `u` keep their order, as do letters of `v`).
pub fn shuffle_words(pairing: &[Vec<i64>], u: &[u8], v: &[u8], mut emit: impl FnMut(&[u8], i64)) {
    let n = pairing.len();
    // pre[j][a] = Σ_{t<j} v_t·a: the cost of placing letter a after j letters of v.
    let mut pre = vec![vec![0i64; n]; v.len() + 1];
    for j in 0..v.len() {
        for a in 0..n {
            pre[j + 1][a] = pre[j][a] + pairing[v[j] as usize][a];
        }
    }
    let mut buf = Vec::with_capacity(u.len() + v.len());
    fn rec(
        u: &[u8],
        v: &[u8],
        i: usize,
        j: usize,
        e: i64,
        pre: &[Vec<i64>],
        buf: &mut Vec<u8>,
        emit: &mut dyn FnMut(&[u8], i64),
    ) {
        if i == u.len() && j == v.len() {
            emit(buf, TWIST_SIGN * e);
            return;
        }
        if i < u.len() {
            buf.push(u[i]);
            rec(u, v, i + 1, j, e + pre[j][u[i] as usize], pre, buf, emit);
            buf.pop();
        }
        if j < v.len() {
            buf.push(v[j]);
            rec(u, v, i, j + 1, e, pre, buf, emit);
            buf.pop();
        }
    }
    rec(u, v, 0, 0, 0, &pre, &mut buf, &mut emit);
}

/// The twisted shuffle product `a ⋆ b`.
pub fn shuffle_mul(c: &CartanDatum, a: &ShuffleVec, b: &ShuffleVec) -> Result<ShuffleVec, ShuffleError> {
    if a.side() != b.side() || a.side() == Side::Free {
        return Err(ShuffleError::SideMismatch);
    }
    let weight = a.weight() + b.weight();
    let mut acc: HashMap<Vec<u8>, LaurentPoly> = HashMap::new();
    for (u, cu) in a.numerators() {
        for (v, cv) in b.numerators() {
            let prod = cu.mul_ref(cv);
            shuffle_words(c.pairing(), &u.0, &v.0, |w, e| match acc.get_mut(w) {
                Some(x) => x.add_assign_scaled_shifted(&prod, e, false),
                None => {
                    acc.insert(w.to_vec(), prod.shift(e));
                }
            });
        }
    }
    let coords: BTreeMap<Word, LaurentPoly> =
        acc.into_iter().filter(|(_, x)| !x.is_zero()).map(|(w, x)| (Word(w), x)).collect();
    ShuffleVec::from_parts(a.side(), weight, coords, a.den().mul_ref(b.den()))
}

/// Shuffle product of several vectors, left to right; the empty product is
/// the empty-word unit.
pub fn shuffle_all(c: &CartanDatum, side: Side, xs: &[&ShuffleVec]) -> Result<ShuffleVec, ShuffleError> {
    let mut acc = ShuffleVec::unit(side, Word::empty(), c.n_nodes());
    for x in xs {
        acc = shuffle_mul(c, &acc, x)?;
    }
    Ok(acc)
}

/// Concatenation product of word vectors (the product of the free algebra
/// when the coordinates are coefficients of `θ`-monomials).
pub fn concat_mul(a: &ShuffleVec, b: &ShuffleVec) -> Result<ShuffleVec, ShuffleError> {
    if a.side() != Side::Free || b.side() != Side::Free {
        return Err(ShuffleError::SideMismatch);
    }
    let mut coords: BTreeMap<Word, LaurentPoly> = BTreeMap::new();
    for (u, cu) in a.numerators() {
        for (v, cv) in b.numerators() {
            let e = coords.entry(u.concat(v)).or_insert_with(LaurentPoly::zero);
            *e = &*e + &cu.mul_ref(cv);
        }
    }
    ShuffleVec::from_parts(a.side(), a.weight() + b.weight(), coords, a.den().mul_ref(b.den()))
}

/// The `(λ, μ)` deconcatenation component: `(w₁, w₂) ↦ x_{w₁w₂}` over words
/// `w₁` of weight `λ`.
pub fn deconcat(
    x: &ShuffleVec,
    lambda: &WeightVec,
    mu: &WeightVec,
) -> Result<BTreeMap<(Word, Word), RatFunc>, ShuffleError> {
    if &(lambda + mu) != x.weight() || !lambda.is_nonneg() || !mu.is_nonneg() {
        return Err(ShuffleError::WeightMismatch(format!("{lambda} + {mu} != {}", x.weight())));
    }
    let k = lambda.height() as usize;
    let n = lambda.len();
    let mut out = BTreeMap::new();
    for w in x.support() {
        let (a, b) = w.split_at(k);
        if &a.weight(n) == lambda {
            out.insert((a, b), x.get(w));
        }
    }
    Ok(out)
}

/// Weights `λ` for which some `(λ, ν − λ)` component of `x` is nonzero.
pub fn prefix_weights(x: &ShuffleVec) -> BTreeSet<WeightVec> {
    let n = x.weight().len();
    let mut out = BTreeSet::new();
    for w in x.support() {
        for k in 0..=w.len() {
            out.insert(w.split_at(k).0.weight(n));
        }
    }
    out
}
