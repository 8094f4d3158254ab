use std::fmt;

use affine_roots::{CartanDatum, WeightVec};
use exactq::LaurentPoly;
use qshuffle::{GramMatrix, Word};

use crate::basis::graded_dim_numerator;
use crate::error::KlrError;

/// How a Gram numerator is compared with a graded dimension numerator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Convention {
    /// `N_{ij}` itself.
    Identity,
    /// `bar(N_{ij})`.
    Bar,
}

impl Convention {
    fn apply(self, n: &LaurentPoly) -> LaurentPoly {
        match self {
            Convention::Identity => n.clone(),
            Convention::Bar => n.bar(),
        }
    }
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Convention::Identity => "identity",
            Convention::Bar => "bar",
        })
    }
}

/// One word pair of a crosscheck.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrosscheckRow {
    pub i: Word,
    pub j: Word,
    pub gram_numerator: LaurentPoly,
    pub dim_numerator: LaurentPoly,
}

/// All word pairs of one weight; every row satisfied the convention.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrosscheckReport {
    pub weight: WeightVec,
    pub convention: Convention,
    pub rows: Vec<CrosscheckRow>,
}

impl CrosscheckReport {
    /// CSV with header `i,j,numerator`, one row per word pair; the numerator
    /// is that of the graded dimension.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("i,j,numerator\n");
        for r in &self.rows {
            out.push_str(&format!("{},{},{}\n", r.i, r.j, r.dim_numerator));
        }
        out
    }
}

fn compare(c: &CartanDatum, nu: &WeightVec, conv: Convention) -> Result<CrosscheckReport, KlrError> {
    let g = GramMatrix::build(c, nu);
    let mut rows = Vec::with_capacity(g.size() * g.size());
    for (a, i) in g.words().iter().enumerate() {
        for (b, j) in g.words().iter().enumerate() {
            let n = g.numerator(a, b);
            let d = graded_dim_numerator(c, nu, i, j)?;
            if conv.apply(n) != d {
                return Err(KlrError::CrosscheckFailed {
                    i: i.to_string(),
                    j: j.to_string(),
                    expected: conv.apply(n).to_string(),
                    found: d.to_string(),
                });
            }
            rows.push(CrosscheckRow { i: i.clone(), j: j.clone(), gram_numerator: n.clone(), dim_numerator: d });
        }
    }
    Ok(CrosscheckReport { weight: nu.clone(), convention: conv, rows })
}

/// Checks `graded_dim(ν, i, j) = conv(N_{ij})·(1 − q²)^{−ht ν}` for every
/// pair of words of weight `ν`.
pub fn gram_crosscheck(c: &CartanDatum, nu: &WeightVec, conv: Convention) -> Result<CrosscheckReport, KlrError> {
    compare(c, nu, conv)
}

/// The unique convention under which every weight of height at most
/// `max_height` passes the crosscheck.
pub fn detect_convention(c: &CartanDatum, max_height: i64) -> Result<Convention, KlrError> {
    let weights: Vec<WeightVec> = all_weights(c.n_nodes(), max_height);
    let ok: Vec<Convention> = [Convention::Identity, Convention::Bar]
        .into_iter()
        .filter(|&conv| weights.iter().all(|nu| compare(c, nu, conv).is_ok()))
        .collect();
    match ok.as_slice() {
        [conv] => Ok(*conv),
        _ => Err(KlrError::NoConvention(max_height)),
    }
}

fn all_weights(n: usize, h: i64) -> Vec<WeightVec> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out.into_iter().flat_map(|v: Vec<i64>| (0..=h).map(move |x| [v.clone(), vec![x]].concat())).collect();
    }
    out.into_iter()
        .filter(|v| (1..=h).contains(&v.iter().sum::<i64>()))
        .map(WeightVec)
        .collect()
}
