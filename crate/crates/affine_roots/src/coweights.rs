use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::cartan::CartanDatum;
use crate::error::RootError;
use crate::roots::Root;

/// A fundamental coweight of a positive system of the finite root system,
/// together with the minimal affine lifts `ω_±` of `±` its simple root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChamberCoweight {
    /// Values of the coweight on the finite simple coordinates.
    pub coweight: Vec<BigRational>,
    /// The simple root of the positive system dual to this coweight.
    pub simple_root: Vec<i64>,
    pub plus_lift: Root,
    pub minus_lift: Root,
}

impl ChamberCoweight {
    /// `⟨ω, β⟩` for a finite-type vector `β`.
    pub fn pair(&self, beta: &[i64]) -> BigRational {
        self.coweight
            .iter()
            .zip(beta)
            .fold(BigRational::zero(), |acc, (w, b)| acc + w * BigRational::from_integer(BigInt::from(*b)))
    }
}

fn neg(v: &[i64]) -> Vec<i64> {
    v.iter().map(|x| -x).collect()
}

fn add(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// Solves `S ω = e_k` exactly for every `k`, returning the columns of `S⁻¹`.
fn inverse_columns(s: &[Vec<i64>]) -> Option<Vec<Vec<BigRational>>> {
    let n = s.len();
    let q = |x: i64| BigRational::from_integer(BigInt::from(x));
    let mut a: Vec<Vec<BigRational>> = s
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row: Vec<BigRational> = r.iter().map(|&x| q(x)).collect();
            row.extend((0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }));
            row
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&r| !a[r][c].is_zero())?;
        a.swap(c, p);
        let pv = a[c][c].clone();
        for x in a[c].iter_mut() {
            *x /= &pv;
        }
        for r in 0..n {
            if r != c && !a[r][c].is_zero() {
                let f = a[r][c].clone();
                for k in 0..2 * n {
                    let t = &a[c][k] * &f;
                    a[r][k] -= t;
                }
            }
        }
    }
    Some((0..n).map(|k| (0..n).map(|i| a[i][n + k].clone()).collect()).collect())
}

impl CartanDatum {
    /// Checks that `system` is a positive system of the finite root system.
    pub fn validate_positive_system(&self, system: &[Vec<i64>]) -> Result<BTreeSet<Vec<i64>>, RootError> {
        let roots: BTreeSet<Vec<i64>> = self.finite_roots().into_iter().collect();
        let p: BTreeSet<Vec<i64>> = system.iter().cloned().collect();
        for b in &p {
            if !roots.contains(b) {
                return Err(RootError::NotAPositiveSystem(format!("{b:?} is not a finite root")));
            }
        }
        for b in &roots {
            if p.contains(b) == p.contains(&neg(b)) {
                return Err(RootError::NotAPositiveSystem(format!("exactly one of ±{b:?} must be present")));
            }
        }
        for a in &p {
            for b in &p {
                let s = add(a, b);
                if roots.contains(&s) && !p.contains(&s) {
                    return Err(RootError::NotAPositiveSystem(format!("not closed: {a:?} + {b:?}")));
                }
            }
        }
        Ok(p)
    }

    /// Simple roots of a positive system, in a fixed deterministic order.
    pub fn simple_roots_of(&self, system: &[Vec<i64>]) -> Result<Vec<Vec<i64>>, RootError> {
        let p = self.validate_positive_system(system)?;
        let mut simple: Vec<Vec<i64>> = p
            .iter()
            .filter(|a| !p.iter().any(|b| p.contains(&add(a, &neg(b))) && b != *a))
            .cloned()
            .collect();
        simple.sort_by(|a, b| {
            let aa: Vec<i64> = a.iter().map(|x| x.abs()).collect();
            let bb: Vec<i64> = b.iter().map(|x| x.abs()).collect();
            bb.cmp(&aa).then_with(|| b.cmp(a))
        });
        if simple.len() != self.rank() {
            return Err(RootError::NotAPositiveSystem(format!("found {} simple roots", simple.len())));
        }
        Ok(simple)
    }

    /// One chamber coweight per simple root of the positive system.
    pub fn chamber_coweights(&self, system: &[Vec<i64>]) -> Result<Vec<ChamberCoweight>, RootError> {
        let simple = self.simple_roots_of(system)?;
        let cols = inverse_columns(&simple)
            .ok_or_else(|| RootError::NotAPositiveSystem("simple roots are dependent".into()))?;
        let mut out = Vec::with_capacity(simple.len());
        for (k, s) in simple.iter().enumerate() {
            out.push(ChamberCoweight {
                coweight: cols[k].clone(),
                simple_root: s.clone(),
                plus_lift: self.lift_tilde(s)?,
                minus_lift: self.lift_tilde(&neg(s))?,
            });
        }
        Ok(out)
    }
}
