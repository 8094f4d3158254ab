use std::fmt;
use std::ops::{Add, Sub};

use serde::{Deserialize, Serialize};

/// An integer vector indexed by the nodes of a Cartan datum.  Elements of
/// `ℕI` are the ones with all entries nonnegative.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WeightVec(pub Vec<i64>);

impl WeightVec {
    pub fn zero(n: usize) -> Self {
        WeightVec(vec![0; n])
    }

    /// The unit vector of node `i`.
    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        WeightVec(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `|ν| = Σ ν_i`.
    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    /// Membership in `ℕI`.
    pub fn is_nonneg(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }

    pub fn scale(&self, k: i64) -> Self {
        WeightVec(self.0.iter().map(|x| x * k).collect())
    }

    /// `self ≤ other` entrywise.
    pub fn le(&self, other: &WeightVec) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// The largest `k` with `k·self ≤ other` entrywise (self nonzero, in ℕI).
    pub fn max_multiple_in(&self, other: &WeightVec) -> i64 {
        self.0
            .iter()
            .zip(&other.0)
            .filter(|(a, _)| **a > 0)
            .map(|(a, b)| if *b < 0 { -1 } else { b / a })
            .min()
            .unwrap_or(0)
    }
}

impl Add for &WeightVec {
    type Output = WeightVec;
    fn add(self, rhs: &WeightVec) -> WeightVec {
        WeightVec(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &WeightVec {
    type Output = WeightVec;
    fn sub(self, rhs: &WeightVec) -> WeightVec {
        WeightVec(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl fmt::Display for WeightVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}
