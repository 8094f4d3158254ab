use std::cmp::Ordering;

use affine_roots::{CartanDatum, Root};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::lp::nonneg_solution;
use crate::order::RootPreorder;

/// A failure of the convexity clause `α ⪯ β ⇒ α ⪯ α+β ⪯ β`, or a tie
/// between roots that are not both imaginary.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClauseViolation {
    Sum { alpha: Root, beta: Root, sum: Root },
    Tie { alpha: Root, beta: Root },
}

/// Sets `A ≺ B` whose nonnegative cones share a nonzero point; the
/// coefficients `c` (on `A`) and `d` (on `B`) witness it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeViolation {
    pub below: Vec<Root>,
    pub above: Vec<Root>,
    pub c: Vec<BigRational>,
    pub d: Vec<BigRational>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ConvexityReport {
    pub pairs_checked: usize,
    pub cone_samples: usize,
    pub clause_violations: Vec<ClauseViolation>,
    pub cone_violations: Vec<ConeViolation>,
}

impl ConvexityReport {
    pub fn is_convex(&self) -> bool {
        self.clause_violations.is_empty() && self.cone_violations.is_empty()
    }
}

/// Whether the cones spanned by `a` and `b` meet away from the origin; on
/// success returns the witnessing coefficients, normalized to total 1.
pub fn cones_meet(a: &[Root], b: &[Root]) -> Option<(Vec<BigRational>, Vec<BigRational>)> {
    let dim = a.iter().chain(b).map(|r| r.vector.len()).max()?;
    let nvars = a.len() + b.len();
    let q = |x: i64| BigRational::from_integer(BigInt::from(x));
    let mut rows: Vec<Vec<BigRational>> = Vec::with_capacity(dim + 1);
    for i in 0..dim {
        let mut row: Vec<BigRational> = a.iter().map(|r| q(r.vector.0[i])).collect();
        row.extend(b.iter().map(|r| q(-r.vector.0[i])));
        rows.push(row);
    }
    rows.push(vec![BigRational::one(); nvars]);
    let mut rhs = vec![BigRational::zero(); dim];
    rhs.push(BigRational::one());
    let x = nonneg_solution(&rows, &rhs)?;
    let (c, d) = x.split_at(a.len());
    Some((c.to_vec(), d.to_vec()))
}

/// Checks the defining clauses of a convex order on all roots of height at
/// most `h`, and cone separation on `samples` random pairs of sets `A ≺ B`
/// drawn with the given seed.
pub fn verify_convexity(
    cartan: &CartanDatum,
    order: &impl RootPreorder,
    h: i64,
    samples: usize,
    seed: u64,
) -> ConvexityReport {
    let mut report = ConvexityReport::default();
    let mut roots = cartan.positive_roots_up_to(h);
    order.sort_roots(&mut roots);
    let le = |x: &Root, y: &Root| order.cmp_roots(&x.vector, &y.vector) != Ordering::Greater;

    for (i, a) in roots.iter().enumerate() {
        for b in &roots[i + 1..] {
            if order.cmp_roots(&a.vector, &b.vector) == Ordering::Equal && !(a.is_imaginary() && b.is_imaginary()) {
                report.clause_violations.push(ClauseViolation::Tie { alpha: a.clone(), beta: b.clone() });
            }
        }
    }
    for a in &roots {
        for b in &roots {
            if a.height + b.height > h || !le(a, b) {
                continue;
            }
            let Some(sum) = cartan.classify(&(&a.vector + &b.vector)) else { continue };
            report.pairs_checked += 1;
            if !(le(a, &sum) && le(&sum, b)) {
                report.clause_violations.push(ClauseViolation::Sum { alpha: a.clone(), beta: b.clone(), sum });
            }
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    if roots.len() >= 2 {
        for _ in 0..samples {
            let cut = rng.gen_range(1..roots.len());
            let na = rng.gen_range(1..=cut.min(3));
            let nb = rng.gen_range(1..=(roots.len() - cut).min(3));
            let below: Vec<Root> = sample(&mut rng, cut, na).into_iter().map(|k| roots[k].clone()).collect();
            let above: Vec<Root> =
                sample(&mut rng, roots.len() - cut, nb).into_iter().map(|k| roots[cut + k].clone()).collect();
            let strictly = below
                .iter()
                .all(|x| above.iter().all(|y| order.cmp_roots(&x.vector, &y.vector) == Ordering::Less));
            if !strictly {
                continue;
            }
            report.cone_samples += 1;
            if let Some((c, d)) = cones_meet(&below, &above) {
                report.cone_violations.push(ConeViolation { below, above, c, d });
            }
        }
    }
    report
}
