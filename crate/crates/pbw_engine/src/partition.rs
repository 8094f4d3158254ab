use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use affine_roots::{Root, WeightVec};
use symfun::MultiPartition;

use crate::engine::Engine;
use crate::error::PbwError;

/// Multiplicities on positive real roots plus a multipartition over the
/// chamber coweights.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootPartition {
    real: BTreeMap<WeightVec, u32>,
    imaginary: MultiPartition,
    weight: WeightVec,
}

impl RootPartition {
    /// Builds a partition; `δ` is needed to compute the weight.
    pub fn new(real: BTreeMap<WeightVec, u32>, imaginary: MultiPartition, delta: &WeightVec) -> Self {
        let mut weight = delta.scale(imaginary.size() as i64);
        for (r, &m) in &real {
            weight = &weight + &r.scale(m as i64);
        }
        RootPartition { real, imaginary, weight }
    }

    pub fn real(&self) -> &BTreeMap<WeightVec, u32> {
        &self.real
    }

    pub fn imaginary(&self) -> &MultiPartition {
        &self.imaginary
    }

    pub fn weight(&self) -> &WeightVec {
        &self.weight
    }

    /// Total size of the imaginary part.
    pub fn imaginary_size(&self) -> u32 {
        self.imaginary.size()
    }

    pub fn is_purely_imaginary(&self) -> bool {
        self.real.is_empty()
    }

    /// Same real part and same imaginary size.
    pub fn same_class(&self, other: &RootPartition) -> bool {
        self.real == other.real && self.imaginary_size() == other.imaginary_size()
    }
}

impl fmt::Display for RootPartition {
    /// Real parts as `(1,0)^2 (0,1)`, then the multipartition if it is
    /// nonempty, e.g. `(1,0) [(1)]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self
            .real
            .iter()
            .map(|(r, &m)| if m == 1 { r.to_string() } else { format!("{r}^{m}") })
            .collect();
        if self.imaginary.size() > 0 {
            parts.push(self.imaginary.to_string());
        }
        write!(f, "{}", parts.join(" "))
    }
}

/// A fixed linear extension of the partial order on root partitions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Extension {
    /// `f`-values read on roots in decreasing order, then multipartitions
    /// increasing.
    Primary,
    /// `f`-values read on roots in increasing order, then multipartitions
    /// decreasing.
    Secondary,
}

impl Engine {
    /// `f_π` indexed by root rank: multiplicities on real roots and the total
    /// imaginary size at the rank of `δ`.
    pub fn f_values(&self, pi: &RootPartition) -> Vec<u32> {
        let mut f = vec![0; self.n_ranks()];
        for (r, &m) in pi.real() {
            f[self.rank_of(r).expect("root within the height bound")] = m;
        }
        f[self.delta_rank()] = pi.imaginary_size();
        f
    }

    /// The partial order: `π < σ` when `f_π < f_σ` both at the smallest and
    /// at the largest root where they differ; `Equal` when `f_π = f_σ`
    /// (same class); `None` when incomparable.
    pub fn compare_partitions(&self, pi: &RootPartition, sigma: &RootPartition) -> Option<Ordering> {
        let (a, b) = (self.f_values(pi), self.f_values(sigma));
        let lo = (0..a.len()).find(|&i| a[i] != b[i]);
        let hi = (0..a.len()).rev().find(|&i| a[i] != b[i]);
        match (lo, hi) {
            (None, _) | (_, None) => Some(Ordering::Equal),
            (Some(l), Some(h)) => {
                let (x, y) = (a[l].cmp(&b[l]), a[h].cmp(&b[h]));
                (x == y).then_some(x)
            }
        }
    }

    fn extension_key(&self, pi: &RootPartition, ext: Extension) -> Vec<u32> {
        let mut f = self.f_values(pi);
        if ext == Extension::Primary {
            f.reverse();
        }
        f
    }

    /// Compares under a linear extension.
    pub fn cmp_in_extension(&self, pi: &RootPartition, sigma: &RootPartition, ext: Extension) -> Ordering {
        let k = self.extension_key(pi, ext).cmp(&self.extension_key(sigma, ext));
        match ext {
            Extension::Primary => k.then_with(|| pi.imaginary().cmp(sigma.imaginary())),
            Extension::Secondary => k.then_with(|| sigma.imaginary().cmp(pi.imaginary())),
        }
    }

    pub fn sort_partitions(&self, parts: &mut [RootPartition], ext: Extension) {
        parts.sort_by(|a, b| self.cmp_in_extension(a, b, ext));
    }

    /// All root partitions of `ν`, sorted by the primary extension.
    pub fn enumerate_root_partitions(&self, nu: &WeightVec) -> Result<Vec<RootPartition>, PbwError> {
        self.check_height(nu)?;
        let c = self.cartan();
        let delta = c.delta().clone();
        let real: Vec<&Root> =
            self.sorted_roots().iter().filter(|r| r.is_real() && r.height <= nu.height()).collect();
        let m = self.coweights().len();
        let mut out = Vec::new();
        let mut acc: BTreeMap<WeightVec, u32> = BTreeMap::new();
        fn rec(
            i: usize,
            rem: WeightVec,
            real: &[&Root],
            acc: &mut BTreeMap<WeightVec, u32>,
            delta: &WeightVec,
            m: usize,
            out: &mut Vec<RootPartition>,
        ) {
            if i == real.len() {
                let n = delta.max_multiple_in(&rem);
                if delta.scale(n) == rem {
                    for mp in MultiPartition::all(n as u32, m) {
                        out.push(RootPartition::new(acc.clone(), mp, delta));
                    }
                }
                return;
            }
            let r = &real[i].vector;
            let mut cur = rem;
            let mut k = 0;
            loop {
                if k > 0 {
                    acc.insert(r.clone(), k);
                }
                rec(i + 1, cur.clone(), real, acc, delta, m, out);
                cur = &cur - r;
                if !cur.is_nonneg() {
                    break;
                }
                k += 1;
            }
            acc.remove(r);
        }
        rec(0, nu.clone(), &real, &mut acc, &delta, m, &mut out);
        self.sort_partitions(&mut out, Extension::Primary);
        Ok(out)
    }
}
