use std::collections::{BTreeMap, HashMap};

use affine_roots::{CartanDatum, WeightVec};
use exactq::{modp, LaurentPoly, RatFunc};

use crate::error::ShuffleError;
use crate::linalg;
use crate::qvec::{ShuffleVec, Side};
use crate::serre::serre_kernel_mod;
use crate::shuffle::shuffle_mul;
use crate::word::{words_of_weight, Word};

/// Evaluation points for modular rank bounds.
const POINTS: [u64; 2] = [0x1d1c_2f3e_4a5b_6c7d % modp::P61, 0x0123_4567_89ab_cdef % modp::P61];

/// `1 − q²`.
pub fn one_minus_q2() -> LaurentPoly {
    LaurentPoly::from_small(0, vec![1, 0, -1])
}

/// `v(θ_i) = (1 − q²)⁻¹·unit_i`.
pub fn theta_letter(c: &CartanDatum, i: usize) -> ShuffleVec {
    ShuffleVec::unit(Side::F, Word::letter(i), c.n_nodes()).scale(&RatFunc::new(LaurentPoly::one(), one_minus_q2()).expect("nonzero"))
}

/// `v(θ_w)`: the shuffle product of the letters of `w`.
pub fn theta_word(c: &CartanDatum, w: &Word) -> ShuffleVec {
    let n = c.n_nodes();
    let mut acc = ShuffleVec::unit(Side::F, Word::empty(), n);
    for &a in &w.0 {
        acc = shuffle_mul(c, &acc, &ShuffleVec::unit(Side::F, Word::letter(a as usize), n)).expect("same side");
    }
    let h = w.len() as u32;
    acc.scale(&RatFunc::new(LaurentPoly::one(), one_minus_q2().pow(h)).expect("nonzero"))
}

/// Lower and upper bounds on the rank of a Gram matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RankBounds {
    /// Rank of the Gram numerator at a point modulo a prime.
    pub lower: usize,
    /// Number of words minus the modular rank of the Serre kernel vectors.
    pub upper: usize,
}

impl RankBounds {
    pub fn is_exact(&self) -> bool {
        self.lower == self.upper
    }
}

/// The matrix `G_{w,w'} = ⟨θ_w, θ_{w'}⟩` on the words of weight `ν`,
/// stored as `N_{w,w'} / (1 − q²)^{ht ν}` with Laurent numerators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GramMatrix {
    weight: WeightVec,
    words: Vec<Word>,
    index: HashMap<Word, usize>,
    num: Vec<Vec<LaurentPoly>>,
}

impl GramMatrix {
    /// Computes the matrix by shuffling letters; column `w` is the
    /// numerator of `v(θ_w)`.
    pub fn build(c: &CartanDatum, nu: &WeightVec) -> Self {
        let words = words_of_weight(nu);
        let n = c.n_nodes();
        let mut memo: HashMap<Word, ShuffleVec> = HashMap::new();
        memo.insert(Word::empty(), ShuffleVec::unit(Side::F, Word::empty(), n));
        // Words are in lexicographic order, so every proper prefix is visited
        // before its extensions; prefixes are built on demand.
        fn column(c: &CartanDatum, w: &Word, memo: &mut HashMap<Word, ShuffleVec>) -> ShuffleVec {
            if let Some(v) = memo.get(w) {
                return v.clone();
            }
            let (p, last) = w.split_at(w.len() - 1);
            let pv = column(c, &p, memo);
            let v = shuffle_mul(c, &pv, &ShuffleVec::unit(Side::F, last, c.n_nodes())).expect("same side");
            memo.insert(w.clone(), v.clone());
            v
        }
        let index: HashMap<Word, usize> = words.iter().cloned().enumerate().map(|(k, w)| (w, k)).collect();
        let mut num = vec![vec![LaurentPoly::zero(); words.len()]; words.len()];
        for (i, w) in words.iter().enumerate() {
            let col = column(c, w, &mut memo);
            for (u, x) in col.numerators() {
                num[index[u]][i] = x.clone();
            }
        }
        GramMatrix { weight: nu.clone(), words, index, num }
    }

    /// Assembles a matrix from numerators (used when reading the cache).
    pub(crate) fn from_numerators(weight: WeightVec, num: Vec<Vec<LaurentPoly>>) -> Self {
        let words = words_of_weight(&weight);
        let index = words.iter().cloned().enumerate().map(|(k, w)| (w, k)).collect();
        GramMatrix { weight, words, index, num }
    }

    pub fn weight(&self) -> &WeightVec {
        &self.weight
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn size(&self) -> usize {
        self.words.len()
    }

    pub fn index_of(&self, w: &Word) -> Option<usize> {
        self.index.get(w).copied()
    }

    pub fn index(&self) -> &HashMap<Word, usize> {
        &self.index
    }

    /// `N_{ij}`.
    pub fn numerator(&self, i: usize, j: usize) -> &LaurentPoly {
        &self.num[i][j]
    }

    pub fn numerators(&self) -> &[Vec<LaurentPoly>] {
        &self.num
    }

    /// The common denominator `(1 − q²)^{ht ν}`.
    pub fn denominator(&self) -> LaurentPoly {
        one_minus_q2().pow(self.weight.height() as u32)
    }

    /// `G_{ij}` as a reduced fraction.
    pub fn entry(&self, i: usize, j: usize) -> RatFunc {
        RatFunc::new(self.num[i][j].clone(), self.denominator()).expect("nonzero")
    }

    pub fn to_ratfunc_matrix(&self) -> Vec<Vec<RatFunc>> {
        (0..self.size()).map(|i| (0..self.size()).map(|j| self.entry(i, j)).collect()).collect()
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.size()).all(|i| (0..i).all(|j| self.num[i][j] == self.num[j][i]))
    }

    /// `v(θ_w)` for a word of this weight.
    pub fn column(&self, w: &Word) -> Option<ShuffleVec> {
        let k = self.index_of(w)?;
        let coords: BTreeMap<Word, LaurentPoly> = self
            .words
            .iter()
            .enumerate()
            .filter(|(i, _)| !self.num[*i][k].is_zero())
            .map(|(i, u)| (u.clone(), self.num[i][k].clone()))
            .collect();
        Some(ShuffleVec::from_parts(Side::F, self.weight.clone(), coords, self.denominator()).expect("nonzero"))
    }

    /// `G·c = Σ_u c_u v(θ_u)` for a free-algebra vector `c`.
    pub fn apply(&self, c: &ShuffleVec) -> Result<ShuffleVec, ShuffleError> {
        if c.side() != Side::Free {
            return Err(ShuffleError::SideMismatch);
        }
        if c.weight() != &self.weight {
            return Err(ShuffleError::WeightMismatch(format!("{} vs {}", c.weight(), self.weight)));
        }
        let mut coords: BTreeMap<Word, LaurentPoly> = BTreeMap::new();
        for (u, cu) in c.numerators() {
            let k = self.index[u];
            for (i, w) in self.words.iter().enumerate() {
                if !self.num[i][k].is_zero() {
                    let e = coords.entry(w.clone()).or_insert_with(LaurentPoly::zero);
                    *e = &*e + &cu.mul_ref(&self.num[i][k]);
                }
            }
        }
        ShuffleVec::from_parts(Side::F, self.weight.clone(), coords, c.den().mul_ref(&self.denominator()))
    }

    /// A free-algebra vector `c` with `G·c = x`.
    pub fn solve(&self, x: &ShuffleVec) -> Result<ShuffleVec, ShuffleError> {
        if x.weight() != &self.weight {
            return Err(ShuffleError::WeightMismatch(format!("{} vs {}", x.weight(), self.weight)));
        }
        let b: Vec<RatFunc> = self.words.iter().map(|w| x.get(w)).collect();
        let sol = linalg::solve(&self.to_ratfunc_matrix(), &b).ok_or(ShuffleError::InconsistentSystem)?;
        let coords = self.words.iter().cloned().zip(sol).filter(|(_, v)| !v.is_zero()).collect();
        ShuffleVec::from_ratfuncs(Side::Free, self.weight.clone(), coords)
    }

    /// Exact rank by fraction-free elimination.
    pub fn rank_exact(&self) -> usize {
        linalg::rank(&self.num)
    }

    /// Rank of the numerator matrix at `q = x` modulo `p`.
    pub fn rank_mod(&self, x: u64, p: u64) -> usize {
        let m: Vec<Vec<u64>> =
            self.num.iter().map(|row| row.iter().map(|e| modp::eval_laurent(e, x, p)).collect()).collect();
        modp::rank(m, p)
    }

    /// Modular lower and upper rank bounds.
    pub fn rank_bounds(&self, c: &CartanDatum) -> RankBounds {
        let p = modp::P61;
        let lower = POINTS.iter().map(|&x| self.rank_mod(x, p)).max().unwrap_or(0);
        let kernel = POINTS
            .iter()
            .map(|&x| modp::rank(serre_kernel_mod(c, &self.weight, &self.index, x, p), p))
            .max()
            .unwrap_or(0);
        RankBounds { lower, upper: self.size() - kernel }
    }

    /// `dim f_ν`: the modular bounds when they meet, exact elimination
    /// otherwise.
    pub fn rank(&self, c: &CartanDatum) -> usize {
        let b = self.rank_bounds(c);
        if b.is_exact() {
            b.lower
        } else {
            self.rank_exact()
        }
    }
}
