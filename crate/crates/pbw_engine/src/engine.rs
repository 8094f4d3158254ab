use std::cmp::Ordering;
use std::collections::HashMap;
use std::hash::Hash;
use std::sync::atomic::{AtomicUsize, Ordering as AtomicOrdering};
use std::sync::{Arc, Mutex};

use affine_roots::{CartanDatum, ChamberCoweight, Root, WeightVec};
use convex_order::{ConvexOrderSpec, RootPreorder};
use qshuffle::{CacheStatus, GramCache, GramMatrix};
use symfun::Partition;

use crate::basis::PbwBasis;
use crate::cuspidal::RootVector;
use crate::element::Element;
use crate::error::PbwError;

/// How imaginary labels are attached to Schur elements: `Direct` uses
/// `S_λ` for the label `λ`, `Transposed` uses `S_{λᵀ}`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Labeling {
    #[default]
    Direct,
    Transposed,
}

/// A memo table whose values are computed outside the lock, so recursive
/// computations may consult it.
pub(crate) struct Memo<K, V>(Mutex<HashMap<K, Arc<V>>>);

impl<K: Eq + Hash + Clone, V> Memo<K, V> {
    fn new() -> Self {
        Memo(Mutex::new(HashMap::new()))
    }

    pub(crate) fn get_or_try<E>(&self, key: &K, f: impl FnOnce() -> Result<V, E>) -> Result<Arc<V>, E> {
        if let Some(v) = self.0.lock().expect("memo lock").get(key) {
            return Ok(v.clone());
        }
        let v = Arc::new(f()?);
        Ok(self.0.lock().expect("memo lock").entry(key.clone()).or_insert(v).clone())
    }
}

/// Counts of Gram matrices served by the on-disk cache.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct GramCacheStats {
    pub hits: usize,
    pub misses: usize,
    pub recovered: usize,
    /// Cache reads or writes that failed; the matrix was built instead.
    pub failed: usize,
}

/// The computational context for one convex order: ranked roots, chamber
/// coweights and memoized root vectors, imaginary elements and Gram
/// matrices.
///
/// All methods take `&self`; the memo tables are synchronized, so bases of
/// different weights can be built from several threads.
pub struct Engine {
    order: ConvexOrderSpec,
    height: i64,
    sorted: Vec<Root>,
    ranks: HashMap<WeightVec, usize>,
    n_ranks: usize,
    coweights: Vec<ChamberCoweight>,
    labeling: Labeling,
    gram_cache: Option<GramCache>,
    cache_counts: [AtomicUsize; 4],
    pub(crate) grams: Memo<WeightVec, GramMatrix>,
    pub(crate) root_vectors: Memo<WeightVec, RootVector>,
    pub(crate) psis: Memo<(usize, u32), Element>,
    pub(crate) ps: Memo<(usize, u32), Element>,
    pub(crate) schurs: Memo<(usize, Partition, usize), Element>,
    pub(crate) bases: Memo<WeightVec, PbwBasis>,
}

impl Engine {
    /// Builds the context for the roots of height at most the order's
    /// height bound.
    pub fn new(order: ConvexOrderSpec) -> Result<Self, PbwError> {
        let height = order.height_bound();
        let c = order.cartan().clone();
        let sorted = order.sorted_roots(height);
        let mut ranks = HashMap::new();
        let mut rank = 0;
        for (k, r) in sorted.iter().enumerate() {
            if k > 0 && order.cmp_roots(&sorted[k - 1].vector, &r.vector) != Ordering::Equal {
                rank += 1;
            }
            ranks.insert(r.vector.clone(), rank);
        }
        let n_ranks = if sorted.is_empty() { 0 } else { rank + 1 };
        let system = order.positive_system_above_delta(2 * c.delta().height())?;
        let coweights = c.chamber_coweights(&system)?;
        Ok(Engine {
            order,
            height,
            sorted,
            ranks,
            n_ranks,
            coweights,
            labeling: Labeling::Direct,
            gram_cache: None,
            cache_counts: Default::default(),
            grams: Memo::new(),
            root_vectors: Memo::new(),
            psis: Memo::new(),
            ps: Memo::new(),
            schurs: Memo::new(),
            bases: Memo::new(),
        })
    }

    /// Serves Gram matrices through an on-disk cache.
    pub fn with_gram_cache(mut self, cache: GramCache) -> Self {
        self.gram_cache = Some(cache);
        self
    }

    pub fn with_labeling(mut self, labeling: Labeling) -> Self {
        self.labeling = labeling;
        self
    }

    pub fn labeling(&self) -> Labeling {
        self.labeling
    }

    pub fn order(&self) -> &ConvexOrderSpec {
        &self.order
    }

    pub fn cartan(&self) -> &CartanDatum {
        self.order.cartan()
    }

    pub fn height_bound(&self) -> i64 {
        self.height
    }

    /// Positive roots up to the height bound, increasing.
    pub fn sorted_roots(&self) -> &[Root] {
        &self.sorted
    }

    pub fn coweights(&self) -> &[ChamberCoweight] {
        &self.coweights
    }

    /// Position of a root among the distinct ranks (all imaginary roots
    /// share one).
    pub fn rank_of(&self, v: &WeightVec) -> Option<usize> {
        self.ranks.get(v).copied()
    }

    pub(crate) fn n_ranks(&self) -> usize {
        self.n_ranks
    }

    pub(crate) fn delta_rank(&self) -> usize {
        self.ranks[self.cartan().delta()]
    }

    /// The order on roots.
    pub fn cmp_roots(&self, a: &WeightVec, b: &WeightVec) -> Ordering {
        match (self.ranks.get(a), self.ranks.get(b)) {
            (Some(x), Some(y)) => x.cmp(y),
            _ => self.order.cmp_roots(a, b),
        }
    }

    pub(crate) fn check_height(&self, nu: &WeightVec) -> Result<(), PbwError> {
        if nu.height() > self.height {
            return Err(PbwError::HeightBound { weight: nu.to_string(), bound: self.height });
        }
        Ok(())
    }

    /// The Gram matrix of weight `ν`, from memory, the disk cache, or built.
    /// An unusable cache is bypassed and counted in [`GramCacheStats::failed`].
    pub fn gram(&self, nu: &WeightVec) -> Result<Arc<GramMatrix>, PbwError> {
        self.grams.get_or_try(nu, || -> Result<GramMatrix, PbwError> {
            match &self.gram_cache {
                None => Ok(GramMatrix::build(self.cartan(), nu)),
                Some(cache) => {
                    let (g, k) = match cache.get_or_build(self.cartan(), nu) {
                        Ok((g, CacheStatus::Hit)) => (g, 0),
                        Ok((g, CacheStatus::Miss)) => (g, 1),
                        Ok((g, CacheStatus::Recovered)) => (g, 2),
                        Err(_) => (GramMatrix::build(self.cartan(), nu), 3),
                    };
                    self.cache_counts[k].fetch_add(1, AtomicOrdering::Relaxed);
                    Ok(g)
                }
            }
        })
    }

    pub fn gram_cache_stats(&self) -> GramCacheStats {
        let get = |k: usize| self.cache_counts[k].load(AtomicOrdering::Relaxed);
        GramCacheStats { hits: get(0), misses: get(1), recovered: get(2), failed: get(3) }
    }

    /// `dim f_ν`, certified by modular bounds or exact elimination.
    pub fn dim(&self, nu: &WeightVec) -> Result<usize, PbwError> {
        Ok(self.gram(nu)?.rank(self.cartan()))
    }
}
