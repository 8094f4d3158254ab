use affine_roots::CartanDatum;
use exactq::{q_factorial, RatFunc};

use crate::error::ShuffleError;
use crate::gram::{theta_letter, GramMatrix};
use crate::qvec::{ShuffleVec, Side};
use crate::shuffle::shuffle_mul;
use crate::word::Word;

/// `⟨x, y⟩` for `x ∈ f` given by its word coordinates: solves `G·c = x`
/// and returns `c·y`.  For `y` an `F` vector this is the bilinear form; for
/// a `Dual` vector it is the evaluation pairing of `f` with `f*`.
pub fn f_pair(g: &GramMatrix, x: &ShuffleVec, y: &ShuffleVec) -> Result<RatFunc, ShuffleError> {
    if x.side() != Side::F || y.side() == Side::Free {
        return Err(ShuffleError::SideMismatch);
    }
    let c = g.solve(x)?;
    Ok(c.dot(y))
}

/// The bar involution of `f` (antilinear, fixing every `θ_w`): writes
/// `x = Σ c_w θ_w` and returns `Σ bar(c_w) θ_w`.
pub fn bar_f(g: &GramMatrix, x: &ShuffleVec) -> Result<ShuffleVec, ShuffleError> {
    if x.side() != Side::F {
        return Err(ShuffleError::SideMismatch);
    }
    let c = g.solve(x)?;
    g.apply(&c.bar())
}

/// The bar involution of `f*`: `q ↦ q⁻¹` on every coordinate.
pub fn bar_dual(x: &ShuffleVec) -> Result<ShuffleVec, ShuffleError> {
    if x.side() != Side::Dual {
        return Err(ShuffleError::SideMismatch);
    }
    Ok(x.bar())
}

/// `v(θ_i^{(n)}) = v(θ_i)^{⋆n} / [n]!`.
pub fn divided_power_letter(c: &CartanDatum, i: usize, n: u32) -> ShuffleVec {
    let t = theta_letter(c, i);
    let mut acc = ShuffleVec::unit(Side::F, Word::empty(), c.n_nodes());
    for _ in 0..n {
        acc = shuffle_mul(c, &acc, &t).expect("same side");
    }
    acc.scale(&RatFunc::from(q_factorial(n)).inv().expect("nonzero")).reduced()
}
