use affine_roots::{CartanDatum, WeightVec};
use exactq::RatFunc;
use qshuffle::{concat_mul, shuffle_mul, theta_letter, ShuffleError, ShuffleVec, Side, Word};

/// An element of `f` carried in two forms: coefficients `c` of a
/// representative `Σ c_w θ_w` in the free algebra, and its word coordinates
/// `v = (⟨x, θ_w⟩)_w`.
///
/// Products concatenate `c` and shuffle `v`; the pairing with a character
/// `y ∈ f*` is `c·y`.
#[derive(Clone, Debug)]
pub struct Element {
    pub free: ShuffleVec,
    pub vec: ShuffleVec,
}

impl Element {
    pub fn one(n_nodes: usize) -> Self {
        Element {
            free: ShuffleVec::unit(Side::Free, Word::empty(), n_nodes),
            vec: ShuffleVec::unit(Side::F, Word::empty(), n_nodes),
        }
    }

    pub fn zero(weight: WeightVec) -> Self {
        Element { free: ShuffleVec::zero(Side::Free, weight.clone()), vec: ShuffleVec::zero(Side::F, weight) }
    }

    /// The generator `θ_i`.
    pub fn letter(c: &CartanDatum, i: usize) -> Self {
        Element { free: ShuffleVec::unit(Side::Free, Word::letter(i), c.n_nodes()), vec: theta_letter(c, i) }
    }

    pub fn weight(&self) -> &WeightVec {
        self.vec.weight()
    }

    /// Zero in `f` (the free representative may still be a nonzero element of
    /// the radical).
    pub fn is_zero(&self) -> bool {
        self.vec.is_zero()
    }

    pub fn mul(&self, c: &CartanDatum, other: &Element) -> Result<Element, ShuffleError> {
        Ok(Element {
            free: concat_mul(&self.free, &other.free)?.reduced(),
            vec: shuffle_mul(c, &self.vec, &other.vec)?.reduced(),
        })
    }

    pub fn scale(&self, s: &RatFunc) -> Element {
        Element { free: self.free.scale(s).reduced(), vec: self.vec.scale(s).reduced() }
    }

    /// `self + s·other`.
    pub fn add_scaled(&self, other: &Element, s: &RatFunc) -> Result<Element, ShuffleError> {
        Ok(Element {
            free: self.free.add_scaled(&other.free, s)?.reduced(),
            vec: self.vec.add_scaled(&other.vec, s)?.reduced(),
        })
    }

    /// `⟨self, y⟩` for a character `y`, or the bilinear form for an `F`
    /// vector `y`.
    pub fn pair(&self, y: &ShuffleVec) -> RatFunc {
        self.free.dot(y)
    }

    /// Equality in `f`, i.e. of word coordinates.
    pub fn same_as(&self, other: &Element) -> bool {
        self.vec == other.vec
    }

    /// `self ⋆ other − s·other ⋆ self`.
    pub fn commutator(&self, c: &CartanDatum, other: &Element, s: &RatFunc) -> Result<Element, ShuffleError> {
        let ab = self.mul(c, other)?;
        let ba = other.mul(c, self)?;
        ab.add_scaled(&ba, &-s)
    }
}
