use std::collections::BTreeMap;
use std::fmt;

use affine_roots::WeightVec;
use exactq::{gcd, LaurentPoly, RatFunc};
use num_traits::Signed;

use crate::error::ShuffleError;
use crate::word::Word;

/// Which space a vector of word coordinates represents.
///
/// `F` vectors are elements `x ∈ f` written as `(⟨x, θ_w⟩)_w`; `Dual`
/// vectors are elements of `f*` (characters) written in the dual basis of
/// the words.  The shuffle product and deconcatenation act identically on
/// both.  `Free` vectors are coefficients `c_w` of an element `Σ c_w θ_w`
/// of the free algebra on the `θ_i`; they multiply by concatenation and
/// pair with `F` vectors to give the bilinear form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    F,
    Dual,
    Free,
}

/// A homogeneous vector of word coordinates over `ℚ(q)`, stored as Laurent
/// numerators over one common polynomial denominator.
///
/// The denominator has nonzero constant term and positive leading
/// coefficient; it is not necessarily coprime to the numerators until
/// [`ShuffleVec::reduce`] is called.  Equality compares values.
#[derive(Clone, Debug)]
pub struct ShuffleVec {
    side: Side,
    weight: WeightVec,
    den: LaurentPoly,
    coords: BTreeMap<Word, LaurentPoly>,
}

/// Writes `d = ε·q^s·d'` with `d'` normalized; returns `(d', s, ε < 0)`.
fn normalize_den(d: &LaurentPoly) -> (LaurentPoly, i64, bool) {
    let s = d.low_exp().expect("nonzero denominator");
    let mut dd = d.shift(-s);
    let neg = dd.leading_coeff().is_negative();
    if neg {
        dd = -dd;
    }
    (dd, s, neg)
}

fn lcm(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    if a == b {
        return a.clone();
    }
    let g = gcd(a, b);
    a.mul_ref(&b.divide_exact(&g).expect("gcd divides"))
}

impl ShuffleVec {
    pub fn zero(side: Side, weight: WeightVec) -> Self {
        ShuffleVec { side, weight, den: LaurentPoly::one(), coords: BTreeMap::new() }
    }

    /// The basis vector of a single word.
    pub fn unit(side: Side, word: Word, n_nodes: usize) -> Self {
        let weight = word.weight(n_nodes);
        let mut coords = BTreeMap::new();
        coords.insert(word, LaurentPoly::one());
        ShuffleVec { side, weight, den: LaurentPoly::one(), coords }
    }

    /// Builds a vector from numerators over a common denominator.
    pub fn from_parts(
        side: Side,
        weight: WeightVec,
        coords: BTreeMap<Word, LaurentPoly>,
        den: LaurentPoly,
    ) -> Result<Self, ShuffleError> {
        if den.is_zero() {
            return Err(exactq::ExactError::DivisionByZero.into());
        }
        let n = weight.len();
        if let Some(w) = coords.keys().find(|w| w.weight(n) != weight) {
            return Err(ShuffleError::WeightMismatch(format!("word {w} in a vector of weight {weight}")));
        }
        let (d, s, neg) = normalize_den(&den);
        let coords = coords
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(w, c)| {
                let c = c.shift(-s);
                (w, if neg { -c } else { c })
            })
            .collect();
        Ok(ShuffleVec { side, weight, den: d, coords })
    }

    /// Builds a vector from `ℚ(q)` coordinates.
    pub fn from_ratfuncs(side: Side, weight: WeightVec, coords: BTreeMap<Word, RatFunc>) -> Result<Self, ShuffleError> {
        let mut den = LaurentPoly::one();
        for c in coords.values() {
            den = lcm(&den, c.denom());
        }
        let nums = coords
            .into_iter()
            .map(|(w, c)| {
                let f = den.divide_exact(c.denom()).expect("lcm is a multiple");
                (w, c.numer().mul_ref(&f))
            })
            .collect();
        Self::from_parts(side, weight, nums, den)
    }

    pub fn side(&self) -> Side {
        self.side
    }

    /// The same coordinates read on the other side of the pairing.
    pub fn with_side(mut self, side: Side) -> Self {
        self.side = side;
        self
    }

    pub fn weight(&self) -> &WeightVec {
        &self.weight
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    /// Nonzero numerators, by word.
    pub fn numerators(&self) -> &BTreeMap<Word, LaurentPoly> {
        &self.coords
    }

    pub fn support(&self) -> impl Iterator<Item = &Word> {
        self.coords.keys()
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    /// The coordinate at `w`.
    pub fn get(&self, w: &Word) -> RatFunc {
        match self.coords.get(w) {
            None => RatFunc::zero(),
            Some(c) => RatFunc::new(c.clone(), self.den.clone()).expect("nonzero denominator"),
        }
    }

    /// All coordinates as reduced fractions.
    pub fn coords(&self) -> BTreeMap<Word, RatFunc> {
        self.coords.keys().map(|w| (w.clone(), self.get(w))).collect()
    }

    /// Cancels the common factor of the denominator and all numerators.
    pub fn reduce(&mut self) {
        if self.den.is_one() {
            return;
        }
        if self.coords.is_empty() {
            self.den = LaurentPoly::one();
            return;
        }
        let mut g = self.den.clone();
        for c in self.coords.values() {
            g = gcd(&g, c);
            if g.is_one() {
                return;
            }
        }
        // g may carry an integer content that the denominator lacks; only the
        // part dividing the (normalized) denominator is removed.
        let g = gcd(&g, &self.den);
        if g.is_one() {
            return;
        }
        self.den = self.den.divide_exact(&g).expect("gcd divides");
        for c in self.coords.values_mut() {
            *c = c.divide_exact(&g).expect("gcd divides");
        }
    }

    pub fn reduced(mut self) -> Self {
        self.reduce();
        self
    }

    /// True when every coordinate lies in `ℤ[q, q⁻¹]`.
    pub fn is_laurent(&self) -> bool {
        self.clone().reduced().den.is_one()
    }

    /// The coordinates as Laurent polynomials, when they all are.
    pub fn to_laurent(&self) -> Option<BTreeMap<Word, LaurentPoly>> {
        let r = self.clone().reduced();
        r.den.is_one().then_some(r.coords)
    }

    fn check_compatible(&self, other: &ShuffleVec) -> Result<(), ShuffleError> {
        if self.side != other.side {
            return Err(ShuffleError::SideMismatch);
        }
        if self.weight != other.weight {
            return Err(ShuffleError::WeightMismatch(format!("{} vs {}", self.weight, other.weight)));
        }
        Ok(())
    }

    /// `self + s·other`.
    pub fn add_scaled(&self, other: &ShuffleVec, s: &RatFunc) -> Result<ShuffleVec, ShuffleError> {
        self.check_compatible(other)?;
        if s.is_zero() || other.is_zero() {
            return Ok(self.clone());
        }
        let od = other.den.mul_ref(s.denom());
        let den = lcm(&self.den, &od);
        let fa = den.divide_exact(&self.den).expect("lcm");
        let fb = den.divide_exact(&od).expect("lcm").mul_ref(s.numer());
        let mut coords: BTreeMap<Word, LaurentPoly> = if fa.is_one() {
            self.coords.clone()
        } else {
            self.coords.iter().map(|(w, c)| (w.clone(), c.mul_ref(&fa))).collect()
        };
        for (w, c) in &other.coords {
            let t = c.mul_ref(&fb);
            let e = coords.entry(w.clone()).or_insert_with(LaurentPoly::zero);
            *e = &*e + &t;
        }
        coords.retain(|_, c| !c.is_zero());
        Ok(ShuffleVec { side: self.side, weight: self.weight.clone(), den, coords })
    }

    pub fn add(&self, other: &ShuffleVec) -> Result<ShuffleVec, ShuffleError> {
        self.add_scaled(other, &RatFunc::one())
    }

    pub fn sub(&self, other: &ShuffleVec) -> Result<ShuffleVec, ShuffleError> {
        self.add_scaled(other, &RatFunc::from(-1))
    }

    /// `s·self`.
    pub fn scale(&self, s: &RatFunc) -> ShuffleVec {
        if s.is_zero() {
            return ShuffleVec::zero(self.side, self.weight.clone());
        }
        let coords = self.coords.iter().map(|(w, c)| (w.clone(), c.mul_ref(s.numer()))).collect();
        ShuffleVec::from_parts(self.side, self.weight.clone(), coords, self.den.mul_ref(s.denom()))
            .expect("nonzero denominator")
    }

    /// `p·self` for a Laurent polynomial `p`.
    pub fn scale_laurent(&self, p: &LaurentPoly) -> ShuffleVec {
        self.scale(&RatFunc::from(p.clone()))
    }

    /// `Σ_w self_w · other_w`, the evaluation pairing of word coordinates.
    pub fn dot(&self, other: &ShuffleVec) -> RatFunc {
        let (small, large) = if self.len() <= other.len() { (self, other) } else { (other, self) };
        let mut acc = LaurentPoly::zero();
        for (w, c) in &small.coords {
            if let Some(d) = large.coords.get(w) {
                acc = &acc + &c.mul_ref(d);
            }
        }
        RatFunc::new(acc, self.den.mul_ref(&other.den)).expect("nonzero denominator")
    }

    /// Applies `q ↦ q⁻¹` to every coordinate.
    pub fn bar(&self) -> ShuffleVec {
        let coords = self.coords.iter().map(|(w, c)| (w.clone(), c.bar())).collect();
        ShuffleVec::from_parts(self.side, self.weight.clone(), coords, self.den.bar()).expect("nonzero denominator")
    }

    /// Maps every coordinate through `f` (numerators and denominator are
    /// passed as reduced fractions).
    pub fn map_coords(&self, f: impl Fn(&Word, RatFunc) -> RatFunc) -> ShuffleVec {
        let coords = self.coords().into_iter().map(|(w, c)| {
            let v = f(&w, c);
            (w, v)
        });
        ShuffleVec::from_ratfuncs(self.side, self.weight.clone(), coords.filter(|(_, c)| !c.is_zero()).collect())
            .expect("weights preserved")
    }
}

impl PartialEq for ShuffleVec {
    fn eq(&self, other: &Self) -> bool {
        if self.side != other.side || self.weight != other.weight {
            return false;
        }
        if self.coords.len() != other.coords.len() || self.coords.keys().ne(other.coords.keys()) {
            return false;
        }
        self.coords
            .iter()
            .all(|(w, c)| c.mul_ref(&other.den) == other.coords[w].mul_ref(&self.den))
    }
}

impl Eq for ShuffleVec {}

impl fmt::Display for ShuffleVec {
    /// One `word: value` pair per line, in word order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (w, c) in self.coords() {
            writeln!(f, "{w}: {c}")?;
        }
        Ok(())
    }
}
