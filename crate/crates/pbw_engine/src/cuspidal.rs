use std::cmp::Ordering;
use std::collections::{BTreeMap, HashSet};
use std::sync::Arc;

use affine_roots::{Root, WeightVec};
use exactq::{gcd, modp, q_factorial, LaurentPoly, RatFunc};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use qshuffle::{linalg, one_minus_q2, serre_kernel_mod, ShuffleVec, Side, Word};

use crate::element::Element;
use crate::engine::Engine;
use crate::error::PbwError;

/// Evaluation points for the modular dimension certificate.
const POINTS: [u64; 2] = [0x2545_f491_4f6c_dd1d % modp::P61, 0x0d1e_5a7c_3b29_8f61 % modp::P61];

/// Which side of a root the summands of [`Engine::sum_of_roots_decides`]
/// lie on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Below,
    Above,
}

/// How the dimension of the cuspidal space was established.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DimensionMethod {
    /// Simple roots have no nontrivial splits.
    Trivial,
    /// `#good words − rank` of the Serre radical vectors on the good words,
    /// evaluated modulo a prime, is an upper bound; the explicit nonzero
    /// vector is the lower bound.
    ModularBound,
    /// `rank G − rank(G restricted to the rows of bad words)`, exactly.
    ExactElimination,
}

/// Evidence that the cuspidal space of a real root is one-dimensional.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CuspidalCertificate {
    pub words: usize,
    pub good_words: usize,
    pub dimension: usize,
    pub method: DimensionMethod,
}

/// How a root vector was produced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Construction {
    Simple,
    /// `E_β E_γ − q^{β·γ} E_γ E_β` for `γ ≺ β`; imaginary members are
    /// `ψ_n^ω` for the coweight with the given index.
    Commutator { beta: WeightVec, gamma: WeightVec, beta_label: Option<usize>, gamma_label: Option<usize> },
    /// A nonzero vector of the cuspidal space found by elimination.
    LinearSolve,
}

/// The real root vector `E_α` together with its normalized dual
/// `E_α^* = (1 − q²)E_α`.
#[derive(Clone, Debug)]
pub struct RootVector {
    pub root: Root,
    /// `E_α^*` as a character: Laurent coordinates with nonnegative
    /// coefficients, bar-invariant, primitive.
    pub dual: ShuffleVec,
    pub element: Element,
    pub certificate: CuspidalCertificate,
    pub construction: Construction,
}

fn le(a: &WeightVec, b: &WeightVec) -> bool {
    a.0.iter().zip(&b.0).all(|(x, y)| x <= y)
}

/// `Π [r]!` over the maximal runs of repeated letters of `w`.
fn run_factorial(w: &Word) -> LaurentPoly {
    w.runs().into_iter().fold(LaurentPoly::one(), |acc, r| acc.mul_ref(&q_factorial(r as u32)))
}

fn lcm(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    let g = gcd(a, b);
    a.mul_ref(&b.divide_exact(&g).expect("gcd divides"))
}

/// Scales a character of a real root to the normal form: after dividing
/// each coordinate by the run factorials of its word the coordinates have
/// gcd 1; the result is bar-invariant with nonnegative coefficients.
/// Returns the vector and the scalar `t` with `result = t·y`.
pub(crate) fn normalize_character(y: &ShuffleVec) -> Result<(ShuffleVec, RatFunc), String> {
    let y = y.clone().reduced();
    if y.is_zero() {
        return Err("zero vector".into());
    }
    let mut t = RatFunc::from(y.den().clone());
    let z: BTreeMap<&Word, RatFunc> = y
        .numerators()
        .iter()
        .map(|(w, c)| (w, RatFunc::new(c.clone(), run_factorial(w)).expect("nonzero")))
        .collect();
    let gnum = z.values().fold(LaurentPoly::zero(), |g, v| gcd(&g, v.numer()));
    let gden = z.values().fold(LaurentPoly::one(), |l, v| lcm(&l, v.denom()));
    let s = RatFunc::new(gden, gnum).expect("nonzero gcd");
    let mut scaled: BTreeMap<&Word, LaurentPoly> = BTreeMap::new();
    for (w, v) in &z {
        let p = (v * &s).to_laurent().ok_or_else(|| format!("coordinate at {w} is not Laurent after scaling"))?;
        scaled.insert(*w, p);
    }
    let content = scaled.values().fold(BigInt::zero(), |g, p| g.gcd(&p.content()));
    t = &t * &s;
    t = &t * &RatFunc::new(LaurentPoly::one(), LaurentPoly::constant(content.clone())).expect("nonzero");
    let mut chi: BTreeMap<Word, LaurentPoly> = scaled
        .into_iter()
        .map(|(w, p)| {
            let p = p.divide_exact(&LaurentPoly::constant(content.clone())).expect("content divides");
            (w.clone(), p.mul_ref(&run_factorial(w)))
        })
        .collect();
    let first = chi.values().next().expect("nonzero");
    let (lo, hi) = (first.low_exp().expect("nonzero"), first.high_exp().expect("nonzero"));
    if (lo + hi) % 2 != 0 {
        return Err(format!("no q-power makes {first} bar-invariant"));
    }
    let shift = -(lo + hi) / 2;
    let negative = first.leading_coeff().is_negative();
    for p in chi.values_mut() {
        *p = p.shift(shift);
        if negative {
            *p = -&*p;
        }
    }
    t = t.shift(shift);
    if negative {
        t = -&t;
    }
    for (w, p) in &chi {
        if !p.is_bar_invariant() {
            return Err(format!("coordinate {p} at {w} is not bar-invariant"));
        }
        if !p.is_nonnegative() {
            return Err(format!("coordinate {p} at {w} has a negative coefficient"));
        }
    }
    let out = ShuffleVec::from_parts(Side::Dual, y.weight().clone(), chi, LaurentPoly::one()).expect("consistent");
    Ok((out, t))
}

impl Engine {
    fn related(&self, r: &WeightVec, alpha: &WeightVec, dir: Direction, strict: bool) -> bool {
        match (self.cmp_roots(r, alpha), dir) {
            (Ordering::Less, Direction::Below) | (Ordering::Greater, Direction::Above) => true,
            (Ordering::Equal, _) => !strict,
            _ => false,
        }
    }

    /// All `ℕ`-sums of roots on the given side of `α` that are bounded by
    /// `bound` coordinatewise.
    pub fn root_sums(&self, alpha: &WeightVec, dir: Direction, strict: bool, bound: &WeightVec) -> HashSet<WeightVec> {
        let h = bound.height();
        let gens: Vec<&WeightVec> = self
            .sorted_roots()
            .iter()
            .filter(|r| r.height <= h && self.related(&r.vector, alpha, dir, strict))
            .map(|r| &r.vector)
            .collect();
        let zero = WeightVec::zero(bound.len());
        let mut seen: HashSet<WeightVec> = HashSet::new();
        seen.insert(zero.clone());
        let mut stack = vec![zero];
        while let Some(v) = stack.pop() {
            for g in &gens {
                let w = &v + *g;
                if le(&w, bound) && seen.insert(w.clone()) {
                    stack.push(w);
                }
            }
        }
        seen
    }

    /// Whether `λ` is an `ℕ`-sum of roots `≺ α` (`Below`) or `≻ α`
    /// (`Above`), with `⪯`/`⪰` when `strict` is false.
    pub fn sum_of_roots_decides(
        &self,
        lambda: &WeightVec,
        alpha: &Root,
        dir: Direction,
        strict: bool,
    ) -> Result<bool, PbwError> {
        self.check_height(lambda)?;
        if !lambda.is_nonneg() {
            return Ok(false);
        }
        Ok(self.root_sums(&alpha.vector, dir, strict, lambda).contains(lambda))
    }

    /// Words of weight `α` all of whose proper splits `(λ, μ)` have `λ` a sum
    /// of roots `≺ α` and `μ` a sum of roots `≻ α`; a cuspidal character is
    /// supported on these words.
    pub fn good_words(&self, alpha: &Root) -> Vec<Word> {
        let n = alpha.vector.len();
        let below = self.root_sums(&alpha.vector, Direction::Below, true, &alpha.vector);
        let above = self.root_sums(&alpha.vector, Direction::Above, true, &alpha.vector);
        qshuffle::words_of_weight(&alpha.vector)
            .into_iter()
            .filter(|w| {
                (1..w.len()).all(|k| {
                    let (a, _) = w.split_at(k);
                    let l = a.weight(n);
                    below.contains(&l) && above.contains(&(&alpha.vector - &l))
                })
            })
            .collect()
    }

    /// `rank G_α − rank(rows of G_α at bad words)`: the dimension of the
    /// cuspidal space, by exact elimination.
    pub fn cuspidal_dimension_exact(&self, alpha: &Root) -> Result<usize, PbwError> {
        let g = self.gram(&alpha.vector)?;
        let good: HashSet<Word> = self.good_words(alpha).into_iter().collect();
        let bad: Vec<Vec<LaurentPoly>> = g
            .words()
            .iter()
            .enumerate()
            .filter(|(_, w)| !good.contains(*w))
            .map(|(i, _)| g.numerators()[i].clone())
            .collect();
        Ok(g.rank(self.cartan()) - linalg::rank(&bad))
    }

    fn certify(&self, alpha: &Root, good: &[Word]) -> Result<CuspidalCertificate, PbwError> {
        let g = self.gram(&alpha.vector)?;
        let cols: Vec<usize> = good.iter().map(|w| g.index()[w]).collect();
        let p = modp::P61;
        for x in POINTS {
            let rows = serre_kernel_mod(self.cartan(), &alpha.vector, g.index(), x, p);
            let restricted: Vec<Vec<u64>> = rows.iter().map(|r| cols.iter().map(|&c| r[c]).collect()).collect();
            let bound = good.len() - modp::rank(restricted, p);
            if bound == 1 {
                return Ok(CuspidalCertificate {
                    words: g.size(),
                    good_words: good.len(),
                    dimension: 1,
                    method: DimensionMethod::ModularBound,
                });
            }
        }
        let dim = self.cuspidal_dimension_exact(alpha)?;
        if dim != 1 {
            return Err(PbwError::CuspidalDimensionNot1 { root: alpha.to_string(), dim });
        }
        Ok(CuspidalCertificate { words: g.size(), good_words: good.len(), dimension: 1, method: DimensionMethod::ExactElimination })
    }

    /// The elements standing for a root in commutators: `E_γ` for a real
    /// root, `ψ_n^ω` for every coweight when `γ = nδ`.
    fn factor_elements(&self, r: &Root) -> Result<Vec<(Option<usize>, Arc<Element>)>, PbwError> {
        if r.is_real() {
            let v = self.cuspidal_dual_root_vector(r)?;
            return Ok(vec![(None, Arc::new(v.element.clone()))]);
        }
        let n = r.vector.0[self.cartan().affine_node()] as u32;
        (0..self.coweights().len()).map(|k| Ok((Some(k), self.psi(k, n)?))).collect()
    }

    /// Decompositions `α = β + γ` with `γ ≺ β`, minimal pair first, then by
    /// decreasing `γ`.
    fn candidate_pairs(&self, alpha: &Root) -> Result<Vec<(Root, Root)>, PbwError> {
        let c = self.cartan();
        let mut pairs: Vec<(Root, Root)> = Vec::new();
        for g in self.sorted_roots().iter().filter(|g| g.height < alpha.height) {
            if let Some(b) = c.classify(&(&alpha.vector - &g.vector)) {
                if self.cmp_roots(&g.vector, &b.vector) == Ordering::Less {
                    pairs.push((b, g.clone()));
                }
            }
        }
        pairs.sort_by(|(_, g1), (_, g2)| self.cmp_roots(&g2.vector, &g1.vector).then(g2.height.cmp(&g1.height)));
        let mp = self.order().minimal_pair(alpha)?;
        if let Some(k) = pairs.iter().position(|(b, g)| *b == mp.beta && *g == mp.gamma) {
            let first = pairs.remove(k);
            pairs.insert(0, first);
        }
        Ok(pairs)
    }

    fn supported_on(x: &ShuffleVec, good: &HashSet<&Word>) -> bool {
        x.support().all(|w| good.contains(w))
    }

    fn cuspidal_by_commutators(
        &self,
        alpha: &Root,
        good: &HashSet<&Word>,
    ) -> Result<Option<(Element, Construction)>, PbwError> {
        let c = self.cartan();
        for (beta, gamma) in self.candidate_pairs(alpha)? {
            let s = RatFunc::from(LaurentPoly::monomial_i64(1, c.form(&beta.vector, &gamma.vector)));
            for (bl, eb) in self.factor_elements(&beta)? {
                for (gl, eg) in self.factor_elements(&gamma)? {
                    let x = eb.commutator(c, &eg, &s)?;
                    if !x.is_zero() && Self::supported_on(&x.vec, good) {
                        let how = Construction::Commutator {
                            beta: beta.vector.clone(),
                            gamma: gamma.vector.clone(),
                            beta_label: bl,
                            gamma_label: gl,
                        };
                        return Ok(Some((x, how)));
                    }
                }
            }
        }
        Ok(None)
    }

    fn cuspidal_by_solve(&self, alpha: &Root, good: &HashSet<&Word>) -> Result<Option<Element>, PbwError> {
        let g = self.gram(&alpha.vector)?;
        let m = g.to_ratfunc_matrix();
        let bad: Vec<Vec<RatFunc>> =
            g.words().iter().enumerate().filter(|(_, w)| !good.contains(w)).map(|(i, _)| m[i].clone()).collect();
        for null in linalg::nullspace(&bad) {
            let coords = g.words().iter().cloned().zip(null).filter(|(_, v)| !v.is_zero()).collect();
            let free = ShuffleVec::from_ratfuncs(Side::Free, alpha.vector.clone(), coords)?;
            let vec = g.apply(&free)?;
            if !vec.is_zero() {
                return Ok(Some(Element { free, vec }));
            }
        }
        Ok(None)
    }

    /// `E_α^*` and `E_α` for a real root `α`.
    ///
    /// Candidates are commutators of lower root vectors (minimal pair
    /// first); the first one that is nonzero and supported on good words
    /// spans the cuspidal space, whose dimension is certified to be 1.  If no
    /// commutator qualifies the cuspidal linear system is solved directly.
    pub fn cuspidal_dual_root_vector(&self, alpha: &Root) -> Result<Arc<RootVector>, PbwError> {
        if !alpha.is_real() {
            return Err(PbwError::NotARealRoot(alpha.to_string()));
        }
        self.check_height(&alpha.vector)?;
        self.root_vectors.get_or_try(&alpha.vector, || self.build_root_vector(alpha))
    }

    /// `E_β` for the real root with vector `v`.
    pub fn root_element(&self, v: &WeightVec) -> Result<Element, PbwError> {
        let r = self.cartan().classify(v).ok_or_else(|| PbwError::NotARealRoot(v.to_string()))?;
        Ok(self.cuspidal_dual_root_vector(&r)?.element.clone())
    }

    fn build_root_vector(&self, alpha: &Root) -> Result<RootVector, PbwError> {
        let c = self.cartan();
        if alpha.height == 1 {
            let i = alpha.vector.0.iter().position(|&x| x == 1).expect("simple root");
            return Ok(RootVector {
                root: alpha.clone(),
                dual: ShuffleVec::unit(Side::Dual, Word::letter(i), c.n_nodes()),
                element: Element::letter(c, i),
                certificate: CuspidalCertificate { words: 1, good_words: 1, dimension: 1, method: DimensionMethod::Trivial },
                construction: Construction::Simple,
            });
        }
        let good_words = self.good_words(alpha);
        let good: HashSet<&Word> = good_words.iter().collect();
        let (x, construction) = match self.cuspidal_by_commutators(alpha, &good)? {
            Some(found) => found,
            None => match self.cuspidal_by_solve(alpha, &good)? {
                Some(x) => (x, Construction::LinearSolve),
                None => return Err(PbwError::CuspidalDimensionNot1 { root: alpha.to_string(), dim: 0 }),
            },
        };
        let certificate = self.certify(alpha, &good_words)?;
        let y = x.vec.scale_laurent(&one_minus_q2()).with_side(Side::Dual);
        let (dual, t) =
            normalize_character(&y).map_err(|reason| PbwError::NormalizationFailed { root: alpha.to_string(), reason })?;
        let element = x.scale(&t);
        debug_assert!(element.vec.scale_laurent(&one_minus_q2()).with_side(Side::Dual) == dual);
        Ok(RootVector { root: alpha.clone(), dual, element, certificate, construction })
    }
}
