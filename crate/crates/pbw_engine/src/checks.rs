use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use affine_roots::{ChamberCoweight, WeightVec};
use exactq::{LaurentPoly, RatFunc};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use qshuffle::{linalg, prefix_weights, shuffle_mul, ShuffleVec, Side};
use symfun::{multi_lr_coeff, sym_pairing, MultiPartition, Partition, SymElement};

use crate::element::Element;
use crate::engine::Engine;
use crate::error::PbwError;
use crate::partition::RootPartition;

/// Result of a sweep of one structural check: how many cases ran and a
/// description of each failing case.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: String,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl CheckOutcome {
    fn new(name: &str) -> Self {
        CheckOutcome { name: name.to_string(), cases: 0, failures: Vec::new() }
    }

    fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures.push(describe());
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// A factor of a straightening check: a real root vector `E_β` or the
/// imaginary element `Π_ω S^ω_{λ_ω}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LsFactor {
    Real(WeightVec),
    Imaginary(MultiPartition),
}

impl fmt::Display for LsFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LsFactor::Real(r) => write!(f, "{r}"),
            LsFactor::Imaginary(m) => write!(f, "{m}"),
        }
    }
}

/// PBW expansion of `E_θ E_ψ − q^{θ·ψ} E_ψ E_θ`.
#[derive(Clone, Debug)]
pub struct LsReport {
    pub theta: LsFactor,
    pub psi: LsFactor,
    pub weight: WeightVec,
    /// The root partition `(θ, ψ)`.
    pub reference: RootPartition,
    /// Nonzero coefficients of the expansion.
    pub support: Vec<(RootPartition, RatFunc)>,
}

/// Restriction support of a character and its `ω`-face.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MvWidth {
    pub support: BTreeSet<WeightVec>,
    /// Support points `a·ω₊ + b·ω₋` with `a, b ≥ 0`, with the value `a − b`.
    pub face: Vec<(WeightVec, BigRational)>,
    pub width: BigRational,
}

fn rat(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

/// Writes `mu = a·u + b·v` over `ℚ`, if possible.
fn decompose(mu: &WeightVec, u: &WeightVec, v: &WeightVec) -> Option<(BigRational, BigRational)> {
    let n = mu.0.len();
    for i in 0..n {
        for j in i + 1..n {
            let det = u.0[i] * v.0[j] - u.0[j] * v.0[i];
            if det == 0 {
                continue;
            }
            let a = BigRational::new(BigInt::from(mu.0[i] * v.0[j] - mu.0[j] * v.0[i]), BigInt::from(det));
            let b = BigRational::new(BigInt::from(u.0[i] * mu.0[j] - u.0[j] * mu.0[i]), BigInt::from(det));
            let ok = (0..n).all(|k| &a * rat(u.0[k]) + &b * rat(v.0[k]) == rat(mu.0[k]));
            return ok.then_some((a, b));
        }
    }
    None
}

/// The restriction support `{μ : some deconcatenation component at (μ, ν−μ)
/// is nonzero}` of a character and the width of its `ω`-face, measured by
/// the functional with `ω₊ ↦ 1`, `ω₋ ↦ −1`.
pub fn char_support_and_width(x: &ShuffleVec, omega: &ChamberCoweight) -> MvWidth {
    let support = prefix_weights(x);
    let (u, v) = (&omega.plus_lift.vector, &omega.minus_lift.vector);
    let mut face = Vec::new();
    for mu in &support {
        if let Some((a, b)) = decompose(mu, u, v) {
            if !a.is_negative() && !b.is_negative() {
                face.push((mu.clone(), a - b));
            }
        }
    }
    let width = match (face.iter().map(|f| &f.1).min(), face.iter().map(|f| &f.1).max()) {
        (Some(lo), Some(hi)) => hi - lo,
        _ => BigRational::zero(),
    };
    MvWidth { support, face, width }
}

fn monomial(c: i64, e: i64) -> RatFunc {
    RatFunc::from(LaurentPoly::monomial_i64(c, e))
}

/// All ways to place `n` as a sum of `m` naturals.
fn compositions(n: u32, m: usize) -> Vec<Vec<u32>> {
    if m == 0 {
        return if n == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in 0..=n {
        for mut rest in compositions(n - first, m - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

impl Engine {
    fn purely_imaginary(&self, labels: MultiPartition) -> RootPartition {
        RootPartition::new(BTreeMap::new(), labels, self.cartan().delta())
    }

    /// `D_λ̲` for a purely imaginary label.
    pub fn imaginary_dual(&self, labels: &MultiPartition) -> Result<ShuffleVec, PbwError> {
        let pi = self.purely_imaginary(labels.clone());
        if labels.size() == 0 {
            return Ok(ShuffleVec::unit(Side::Dual, qshuffle::Word::empty(), self.cartan().n_nodes()));
        }
        let basis = self.pbw_basis(pi.weight())?;
        let i = basis.index_of(&pi).expect("purely imaginary partitions are enumerated");
        Ok(basis.duals[i].clone())
    }

    /// `e^x_k`: the dual element with label `(1^k)` at coweight `x`.
    pub fn e_dual(&self, x: usize, k: u32) -> Result<ShuffleVec, PbwError> {
        let m = self.coweights().len();
        self.imaginary_dual(&MultiPartition::concentrated(m, x, Partition::column(k)))
    }

    fn e_product(&self, placement: &[u32]) -> Result<ShuffleVec, PbwError> {
        let c = self.cartan();
        let mut acc = ShuffleVec::unit(Side::Dual, qshuffle::Word::empty(), c.n_nodes());
        for (x, &k) in placement.iter().enumerate() {
            if k > 0 {
                acc = shuffle_mul(c, &acc, &self.e_dual(x, k)?)?.reduced();
            }
        }
        Ok(acc)
    }

    fn ls_weight(&self, f: &LsFactor) -> WeightVec {
        match f {
            LsFactor::Real(r) => r.clone(),
            LsFactor::Imaginary(m) => self.cartan().delta().scale(m.size() as i64),
        }
    }

    fn ls_element(&self, f: &LsFactor) -> Result<Element, PbwError> {
        match f {
            LsFactor::Real(r) => self.root_element(r),
            LsFactor::Imaginary(m) => self.imaginary_product(m),
        }
    }

    /// Expands `E_θ E_ψ − q^{θ·ψ} E_ψ E_θ` in the PBW basis and checks that
    /// every partition in the support is strictly below `(θ, ψ)`.
    pub fn ls_straighten_check(&self, theta: &LsFactor, psi: &LsFactor) -> Result<LsReport, PbwError> {
        let c = self.cartan();
        let delta = c.delta();
        let (wt, wp) = (self.ls_weight(theta), self.ls_weight(psi));
        let bad = |m: &str| PbwError::Precondition(format!("straightening {theta}, {psi}: {m}"));
        for f in [theta, psi] {
            match f {
                LsFactor::Real(r) if !c.classify(r).is_some_and(|x| x.is_real()) => return Err(bad("not a real root")),
                LsFactor::Imaginary(m) if m.size() == 0 || m.n_components() != self.coweights().len() => {
                    return Err(bad("bad imaginary label"))
                }
                _ => {}
            }
        }
        if self.cmp_roots(&wt, &wp) != Ordering::Greater {
            return Err(bad("θ ≻ ψ is required"));
        }
        let weight = &wt + &wp;
        self.check_height(&weight)?;
        let mut real = BTreeMap::new();
        let mut imag = MultiPartition::empty(self.coweights().len());
        for f in [theta, psi] {
            match f {
                LsFactor::Real(r) => *real.entry(r.clone()).or_insert(0) += 1,
                LsFactor::Imaginary(m) => imag = m.clone(),
            }
        }
        let reference = RootPartition::new(real, imag, delta);
        let (et, ep) = (self.ls_element(theta)?, self.ls_element(psi)?);
        let x = et.commutator(c, &ep, &monomial(1, c.form(&wt, &wp)))?;
        let basis = self.pbw_basis(&weight)?;
        let coeffs = basis.expand(&x);
        if !basis.combine(&coeffs)?.same_as(&x) {
            return Err(PbwError::Precondition(format!("PBW expansion of [{theta}, {psi}] does not reconstruct it")));
        }
        let support: Vec<(RootPartition, RatFunc)> = basis
            .partitions
            .iter()
            .zip(coeffs)
            .filter(|(_, a)| !a.is_zero())
            .map(|(p, a)| (p.clone(), a))
            .collect();
        for (p, _) in &support {
            if self.compare_partitions(p, &reference) != Some(Ordering::Less) {
                return Err(PbwError::SupportViolation {
                    theta: theta.to_string(),
                    psi: psi.to_string(),
                    partition: p.to_string(),
                });
            }
        }
        Ok(LsReport { theta: theta.clone(), psi: psi.clone(), weight, reference, support })
    }

    /// Real roots and imaginary labels of height at most `h`.
    pub fn ls_factors_up_to(&self, h: i64) -> Vec<LsFactor> {
        let dh = self.cartan().delta().height();
        let mut out: Vec<LsFactor> = self
            .sorted_roots()
            .iter()
            .filter(|r| r.is_real() && r.height <= h)
            .map(|r| LsFactor::Real(r.vector.clone()))
            .collect();
        for n in 1..=(h / dh) as u32 {
            out.extend(MultiPartition::all(n, self.coweights().len()).into_iter().map(LsFactor::Imaginary));
        }
        out
    }

    /// Straightening support over all pairs `θ ≻ ψ` of combined height at
    /// most `h`.
    pub fn check_ls_support(&self, h: i64) -> Result<CheckOutcome, PbwError> {
        let mut out = CheckOutcome::new("ls_support");
        let factors = self.ls_factors_up_to(h);
        for t in &factors {
            for p in &factors {
                let (wt, wp) = (self.ls_weight(t), self.ls_weight(p));
                if wt.height() + wp.height() > h || self.cmp_roots(&wt, &wp) != Ordering::Greater {
                    continue;
                }
                match self.ls_straighten_check(t, p) {
                    Ok(_) => out.record(true, String::new),
                    Err(PbwError::SupportViolation { partition, .. }) => {
                        out.record(false, || format!("[{t}, {p}] has {partition} in its support"))
                    }
                    Err(e) => return Err(e),
                }
            }
        }
        Ok(out)
    }

    /// The `ω`-face width of `E*_{nδ−ω₊}` must be `n`.
    pub fn check_mv_width(&self, max_n: u32) -> Result<CheckOutcome, PbwError> {
        let mut out = CheckOutcome::new("mv_width");
        let c = self.cartan();
        for (k, w) in self.coweights().iter().enumerate() {
            for n in 1..=max_n {
                let root = &c.delta().scale(n as i64) - &w.plus_lift.vector;
                let rv = self.cuspidal_dual_root_vector(&c.root(&root))?;
                let width = char_support_and_width(&rv.dual, w).width;
                out.record(width == rat(n as i64), || format!("coweight {k}, n = {n}: width {width}"));
            }
        }
        Ok(out)
    }

    /// The dual element of label `(2)` at each coweight must have `ω`-face
    /// width 2; this pins down the labeling of imaginary partitions.
    pub fn check_labeling(&self) -> Result<CheckOutcome, PbwError> {
        let mut out = CheckOutcome::new("labeling");
        let m = self.coweights().len();
        for (k, w) in self.coweights().iter().enumerate() {
            let d = self.imaginary_dual(&MultiPartition::concentrated(m, k, Partition::row(2)))?;
            let width = char_support_and_width(&d, w).width;
            out.record(width == rat(2), || format!("coweight {k}: label (2) has width {width}"));
        }
        Ok(out)
    }

    /// `⟨ψ_n^ω, Π_x e^x_{n_x}⟩ = (−q)^{n−1}` when the placement is
    /// concentrated at `ω` and 0 otherwise, for `n ≤ max_n`.
    pub fn check_psi_pairings(&self, max_n: u32) -> Result<CheckOutcome, PbwError> {
        let mut out = CheckOutcome::new("psi_pairing");
        let m = self.coweights().len();
        for n in 1..=max_n {
            for placement in compositions(n, m) {
                let e = self.e_product(&placement)?;
                for w in 0..m {
                    let v = self.psi(w, n)?.pair(&e);
                    let sign = if n % 2 == 1 { 1 } else { -1 };
                    let expected = if placement[w] == n { monomial(sign, n as i64 - 1) } else { RatFunc::zero() };
                    out.record(v == expected, || format!("ψ_{n} at {w}, placement {placement:?}: {v}, expected {expected}"));
                }
            }
        }
        Ok(out)
    }

    /// `⟨P_n^ω, Π_x e^x_{n_x}⟩ = 1` when `n_x = 0` for `x ≠ ω` and `n_ω ≤ 1`,
    /// and 0 otherwise.
    pub fn check_p_pairings(&self, max_n: u32) -> Result<CheckOutcome, PbwError> {
        let mut out = CheckOutcome::new("p_pairing");
        let m = self.coweights().len();
        for n in 0..=max_n {
            for placement in compositions(n, m) {
                let e = self.e_product(&placement)?;
                for w in 0..m {
                    let v = self.p_vector(w, n)?.pair(&e);
                    let hit = (0..m).all(|x| x == w || placement[x] == 0) && placement[w] <= 1;
                    let expected = if hit { RatFunc::one() } else { RatFunc::zero() };
                    out.record(v == expected, || format!("P_{n} at {w}, placement {placement:?}: {v}, expected {expected}"));
                }
            }
        }
        Ok(out)
    }

    /// The products `Π_ω S^ω_{λ_ω}` for `λ̲ ⊢ n` are independent and pair to
    /// zero with every dual element of a partition with a real part, so
    /// they span the orthogonal complement of those duals.
    pub fn check_imaginary_block(&self, max_n: u32) -> Result<CheckOutcome, PbwError> {
        let mut out = CheckOutcome::new("imaginary_block");
        let c = self.cartan();
        for n in 1..=max_n {
            let nu = c.delta().scale(n as i64);
            let basis = self.pbw_basis(&nu)?;
            let labels = MultiPartition::all(n, self.coweights().len());
            let products: Vec<Element> = labels.iter().map(|l| self.imaginary_product(l)).collect::<Result<_, _>>()?;
            let real_duals: Vec<&ShuffleVec> = basis
                .partitions
                .iter()
                .zip(&basis.duals)
                .filter(|(p, _)| !p.is_purely_imaginary())
                .map(|(_, d)| d)
                .collect();
            for (l, x) in labels.iter().zip(&products) {
                let orthogonal = real_duals.iter().all(|d| x.pair(d).is_zero());
                out.record(orthogonal, || format!("{l} pairs nontrivially with a real dual element"));
            }
            let rank = coordinate_rank(&products);
            let complement = basis.len() - real_duals.len();
            out.record(rank == labels.len() && complement == labels.len(), || {
                format!("weight {nu}: {} products of rank {rank}, complement dimension {complement}", labels.len())
            });
        }
        Ok(out)
    }

    /// `ψ^ω_m ⋆ ψ^{ω'}_n = ψ^{ω'}_n ⋆ ψ^ω_m` for `m + n ≤ max_total`.
    pub fn check_psi_commutativity(&self, max_total: u32) -> Result<CheckOutcome, PbwError> {
        let mut out = CheckOutcome::new("psi_commute");
        let c = self.cartan();
        let m = self.coweights().len();
        for a in 1..max_total {
            for b in a..=max_total - a {
                for w in 0..m {
                    for w2 in 0..m {
                        if a == b && w2 < w {
                            continue;
                        }
                        let (x, y) = (self.psi(w, a)?, self.psi(w2, b)?);
                        let ok = x.mul(c, &y)?.same_as(&y.mul(c, &x)?);
                        out.record(ok, || format!("ψ_{a} at {w} and ψ_{b} at {w2} do not commute"));
                    }
                }
            }
        }
        Ok(out)
    }

    /// `S_λ` computed with `t` and `t + 1` rows agree for `|λ| ≤ max_size`.
    pub fn check_schur_stability(&self, max_size: u32) -> Result<CheckOutcome, PbwError> {
        let mut out = CheckOutcome::new("schur_stability");
        for k in 0..self.coweights().len() {
            for n in 1..=max_size {
                for lambda in Partition::all(n) {
                    let t = lambda.len();
                    let ok = self.schur_vector_rows(k, &lambda, t)?.same_as(&*self.schur_vector_rows(k, &lambda, t + 1)?);
                    out.record(ok, || format!("S_{lambda} at {k} changes from {t} to {} rows", t + 1));
                }
            }
        }
        Ok(out)
    }

    /// `⟨φ(x), D_y⟩` and `(x, Π_ω s_{y_ω})` for the h-monomial
    /// `x = ⊗_ω h_{μ_ω}` and a label `y`.
    pub fn phi_bridge(&self, x: &MultiPartition, y: &MultiPartition) -> Result<(RatFunc, i64), PbwError> {
        let c = self.cartan();
        let mut phi = Element::one(c.n_nodes());
        for (k, mu) in x.components().iter().enumerate() {
            for &part in mu.parts() {
                phi = phi.mul(c, &*self.p_vector(k, part)?)?;
            }
        }
        let lhs = phi.pair(&self.imaginary_dual(y)?);
        let mut rhs = 1;
        for (mu, lambda) in x.components().iter().zip(y.components()) {
            if mu.size() != lambda.size() {
                rhs = 0;
                break;
            }
            rhs *= sym_pairing(&SymElement::h_product(mu.parts()), &SymElement::schur(lambda.clone()))
                .expect("degrees agree");
        }
        Ok((lhs, rhs))
    }

    /// The bridge identity for all h-monomials and labels of degree at most
    /// `max_degree`.
    pub fn check_phi_bridge(&self, max_degree: u32) -> Result<CheckOutcome, PbwError> {
        let mut out = CheckOutcome::new("phi_bridge");
        let m = self.coweights().len();
        for n in 1..=max_degree {
            let all = MultiPartition::all(n, m);
            for x in &all {
                for y in &all {
                    let (lhs, rhs) = self.phi_bridge(x, y)?;
                    out.record(lhs == RatFunc::from(rhs), || format!("x = {x}, y = {y}: {lhs} vs {rhs}"));
                }
            }
        }
        Ok(out)
    }

    /// `D_λ̲ ⋆ D_μ̲ = Σ_ν̲ c^{ν̲}_{λ̲μ̲} D_ν̲` for `|λ̲| + |μ̲| ≤ max_total`.
    pub fn check_multi_lr(&self, max_total: u32) -> Result<CheckOutcome, PbwError> {
        let mut out = CheckOutcome::new("multi_lr");
        let c = self.cartan();
        let m = self.coweights().len();
        for total in 2..=max_total {
            let nu = c.delta().scale(total as i64);
            let basis = self.pbw_basis(&nu)?;
            for a in 1..total {
                for lambda in MultiPartition::all(a, m) {
                    for mu in MultiPartition::all(total - a, m) {
                        let prod = shuffle_mul(c, &self.imaginary_dual(&lambda)?, &self.imaginary_dual(&mu)?)?;
                        let mut recon = ShuffleVec::zero(Side::Dual, nu.clone());
                        let mut ok = true;
                        for ((p, e), d) in basis.partitions.iter().zip(&basis.elements).zip(&basis.duals) {
                            let coeff = e.pair(&prod);
                            let expected = if p.is_purely_imaginary() {
                                multi_lr_coeff(&lambda, &mu, p.imaginary())
                            } else {
                                0
                            };
                            ok &= coeff == RatFunc::from(expected);
                            recon = recon.add_scaled(d, &coeff)?;
                        }
                        ok &= recon == prod;
                        out.record(ok, || format!("D_{lambda} * D_{mu} does not follow the LR rule"));
                    }
                }
            }
        }
        Ok(out)
    }
}

/// Rank of the word coordinates of a family of elements.
fn coordinate_rank(xs: &[Element]) -> usize {
    let words: BTreeSet<qshuffle::Word> = xs.iter().flat_map(|x| x.vec.support().cloned().collect::<Vec<_>>()).collect();
    let rows: Vec<Vec<RatFunc>> = xs.iter().map(|x| words.iter().map(|w| x.vec.get(w)).collect()).collect();
    if rows.is_empty() || words.is_empty() {
        return 0;
    }
    words.len() - linalg::nullspace(&rows).len()
}
