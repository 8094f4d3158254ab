use std::cmp::Ordering;
use std::collections::HashMap;

use affine_roots::{CartanDatum, Root, WeightVec};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::OrderError;
use crate::rational::format_rational;

/// A total preorder on positive roots, compared by root vector.
pub trait RootPreorder {
    /// `Less` means `a ≺ b`; `Equal` means `a` and `b` are equivalent.
    fn cmp_roots(&self, a: &WeightVec, b: &WeightVec) -> Ordering;

    /// Sorts roots increasingly; equivalent roots are ordered by height.
    fn sort_roots(&self, roots: &mut [Root]) {
        roots.sort_by(|a, b| self.cmp_roots(&a.vector, &b.vector).then(a.height.cmp(&b.height)));
    }
}

/// The order `α ≺ β ⇔ h(α)/ht(α) <_lex h(β)/ht(β)` given by a rational
/// functional `h: ℚI → ℚ^k` with one or two rows.
///
/// With two rows the second row must vanish on `δ`, so that imaginary roots
/// sit at `(x, 0)`.  At construction the order is checked to separate every
/// pair of non-proportional positive roots up to the given height bound.
#[derive(Clone, Debug)]
pub struct ConvexOrderSpec {
    cartan: CartanDatum,
    rows: Vec<Vec<BigRational>>,
    // Each row scaled by a positive integer to clear denominators.
    scaled: Vec<Vec<BigInt>>,
    height_bound: i64,
}

impl ConvexOrderSpec {
    pub fn new(cartan: CartanDatum, rows: Vec<Vec<BigRational>>, height_bound: i64) -> Result<Self, OrderError> {
        let n = cartan.n_nodes();
        if rows.is_empty() || rows.len() > 2 || rows.iter().any(|r| r.len() != n) {
            return Err(OrderError::BadShape { expected: n });
        }
        let scaled: Vec<Vec<BigInt>> = rows
            .iter()
            .map(|r| {
                let l = r.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
                r.iter().map(|x| (x * BigRational::from_integer(l.clone())).to_integer()).collect()
            })
            .collect();
        let spec = ConvexOrderSpec { cartan, rows, scaled, height_bound };
        if spec.rows.len() == 2 && !spec.value(spec.cartan.delta())[1].is_zero() {
            return Err(OrderError::BadTwoRowShape);
        }
        let mut roots = spec.cartan.positive_roots_up_to(height_bound);
        spec.sort_roots(&mut roots);
        for w in roots.windows(2) {
            if spec.cmp_vectors(&w[0].vector, &w[1].vector) == Ordering::Equal && !(w[0].is_imaginary() && w[1].is_imaginary()) {
                return Err(OrderError::AmbiguousOrder(w[0].to_string(), w[1].to_string()));
            }
        }
        Ok(spec)
    }

    pub fn cartan(&self) -> &CartanDatum {
        &self.cartan
    }

    pub fn rows(&self) -> &[Vec<BigRational>] {
        &self.rows
    }

    /// The height bound the order was validated up to.
    pub fn height_bound(&self) -> i64 {
        self.height_bound
    }

    /// Rows rendered as canonical rational strings.
    pub fn rows_text(&self) -> Vec<Vec<String>> {
        self.rows.iter().map(|r| r.iter().map(format_rational).collect()).collect()
    }

    /// `h(v)` up to a positive rescaling of each row.
    fn value(&self, v: &WeightVec) -> Vec<BigInt> {
        self.scaled
            .iter()
            .map(|row| row.iter().zip(&v.0).fold(BigInt::zero(), |acc, (h, x)| acc + h * BigInt::from(*x)))
            .collect()
    }

    fn cmp_vectors(&self, a: &WeightVec, b: &WeightVec) -> Ordering {
        let (ha, hb) = (self.value(a), self.value(b));
        let (na, nb) = (BigInt::from(a.height()), BigInt::from(b.height()));
        for (x, y) in ha.iter().zip(&hb) {
            match (x * &nb).cmp(&(y * &na)) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        Ordering::Equal
    }

    /// Exact comparison of two positive roots; `Equal` is only returned for
    /// two imaginary roots.
    pub fn compare(&self, a: &Root, b: &Root) -> Result<Ordering, OrderError> {
        let o = self.cmp_vectors(&a.vector, &b.vector);
        if o == Ordering::Equal && a.vector != b.vector && !(a.is_imaginary() && b.is_imaginary()) {
            return Err(OrderError::AmbiguousOrder(a.to_string(), b.to_string()));
        }
        Ok(o)
    }
}

impl RootPreorder for ConvexOrderSpec {
    fn cmp_roots(&self, a: &WeightVec, b: &WeightVec) -> Ordering {
        self.cmp_vectors(a, b)
    }
}

/// A preorder given by an explicit ranking of the positive roots up to a
/// height bound; all imaginary roots share one rank.
///
/// Used to exercise the convexity checker on orders that are not of
/// functional form.
#[derive(Clone, Debug)]
pub struct ExplicitOrder {
    delta: WeightVec,
    ranks: HashMap<WeightVec, usize>,
    sequence: Vec<Root>,
}

impl ExplicitOrder {
    /// Ranks `sequence` in the given order; imaginary roots are collapsed to
    /// the position of the first one.
    pub fn new(cartan: &CartanDatum, sequence: Vec<Root>) -> Self {
        let delta = cartan.delta().clone();
        let mut ranks = HashMap::new();
        let mut imag_rank = None;
        for (k, r) in sequence.iter().enumerate() {
            let rank = if r.is_imaginary() { *imag_rank.get_or_insert(k) } else { k };
            ranks.insert(r.vector.clone(), rank);
        }
        ExplicitOrder { delta, ranks, sequence }
    }

    /// The ranking induced by another preorder on the roots up to `height`.
    pub fn from_preorder(cartan: &CartanDatum, order: &impl RootPreorder, height: i64) -> Self {
        let mut roots = cartan.positive_roots_up_to(height);
        order.sort_roots(&mut roots);
        Self::new(cartan, roots)
    }

    /// Exchanges the roots in positions `k` and `k + 1` of the ranking.
    pub fn swap_adjacent(&self, cartan: &CartanDatum, k: usize) -> Option<Self> {
        if k + 1 >= self.sequence.len() {
            return None;
        }
        let mut seq = self.sequence.clone();
        seq.swap(k, k + 1);
        Some(Self::new(cartan, seq))
    }

    pub fn sequence(&self) -> &[Root] {
        &self.sequence
    }

    fn rank(&self, v: &WeightVec) -> usize {
        if let Some(r) = self.ranks.get(v) {
            return *r;
        }
        let k = self.delta.max_multiple_in(v);
        if k > 0 && self.delta.scale(k) == *v {
            if let Some(r) = self.ranks.get(&self.delta) {
                return *r;
            }
        }
        panic!("root {v} is outside the explicit ranking")
    }
}

impl RootPreorder for ExplicitOrder {
    /// # Panics
    /// When a real root outside the ranking is compared.
    fn cmp_roots(&self, a: &WeightVec, b: &WeightVec) -> Ordering {
        self.rank(a).cmp(&self.rank(b))
    }
}
