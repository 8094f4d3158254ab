use std::fmt;
use std::str::FromStr;

use crate::error::SymError;

/// An integer partition: weakly decreasing positive parts.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self, SymError> {
        if parts.contains(&0) {
            return Err(SymError::BadPartition(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(SymError::BadPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition(parts))
    }

    /// Sorts and drops zero parts.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The one-row partition `(n)`, empty for `n = 0`.
    pub fn row(n: u32) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition(vec![n])
        }
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: u32) -> Self {
        Partition(vec![1; n as usize])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// `λ_i` with the convention `λ_i = 0` past the last part.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn conjugate(&self) -> Partition {
        let w = self.part(0);
        Partition((1..=w).map(|k| self.0.iter().filter(|&&p| p >= k).count() as u32).collect())
    }

    /// Whether the diagram of `other` is contained in this one.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().enumerate().all(|(i, &p)| p <= self.0[i])
    }

    /// All partitions of `n` in reverse lexicographic order: `(n)` first,
    /// `(1^n)` last.
    pub fn all(n: u32) -> Vec<Partition> {
        fn rec(n: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for k in (1..=n.min(max)).rev() {
                cur.push(k);
                rec(n - k, k, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// Number of standard Young tableaux by the hook length formula,
    /// `n! / Π hooks` (exact in `u128` up to 30 boxes).
    pub fn hook_length_dim(&self) -> u128 {
        let conj = self.conjugate();
        let fact: u128 = (1..=self.size() as u128).product();
        let mut hooks: u128 = 1;
        for (i, &row) in self.0.iter().enumerate() {
            for j in 0..row as usize {
                hooks *= (row as usize - j + conj.0[j] as usize - i - 1) as u128;
            }
        }
        fact / hooks
    }
}

impl fmt::Display for Partition {
    /// `(3,1,1)`; the empty partition is `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

impl FromStr for Partition {
    type Err = SymError;

    fn from_str(s: &str) -> Result<Self, SymError> {
        let inner = s
            .strip_prefix('(')
            .and_then(|x| x.strip_suffix(')'))
            .ok_or_else(|| SymError::BadPartition(format!("{s:?} is not parenthesized")))?;
        if inner.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|t| {
                if t.len() > 1 && t.starts_with('0') {
                    return Err(SymError::BadPartition(format!("leading zero in {s:?}")));
                }
                t.parse::<u32>().map_err(|_| SymError::BadPartition(format!("bad part {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<u32>, _>>()?;
        Partition::new(parts)
    }
}

/// One partition per chamber coweight, indexed by coweight position.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiPartition(Vec<Partition>);

impl MultiPartition {
    pub fn new(parts: Vec<Partition>) -> Self {
        MultiPartition(parts)
    }

    pub fn empty(m: usize) -> Self {
        MultiPartition(vec![Partition::empty(); m])
    }

    /// The multipartition with `λ` at position `k` and empty elsewhere.
    pub fn concentrated(m: usize, k: usize, lambda: Partition) -> Self {
        let mut v = vec![Partition::empty(); m];
        v[k] = lambda;
        MultiPartition(v)
    }

    pub fn components(&self) -> &[Partition] {
        &self.0
    }

    pub fn get(&self, k: usize) -> &Partition {
        &self.0[k]
    }

    pub fn n_components(&self) -> usize {
        self.0.len()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().map(Partition::size).sum()
    }

    /// All multipartitions of `n` with `m` components, in a fixed order:
    /// lexicographic in the component sizes (first component smallest
    /// first), then in the partition order of [`Partition::all`].
    pub fn all(n: u32, m: usize) -> Vec<MultiPartition> {
        fn rec(n: u32, m: usize, cur: &mut Vec<Partition>, out: &mut Vec<MultiPartition>) {
            if m == 1 {
                for p in Partition::all(n) {
                    cur.push(p);
                    out.push(MultiPartition(cur.clone()));
                    cur.pop();
                }
                return;
            }
            for k in 0..=n {
                for p in Partition::all(k) {
                    cur.push(p);
                    rec(n - k, m - 1, cur, out);
                    cur.pop();
                }
            }
        }
        if m == 0 {
            return if n == 0 { vec![MultiPartition(Vec::new())] } else { Vec::new() };
        }
        let mut out = Vec::new();
        rec(n, m, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for MultiPartition {
    /// `[(2),(1,1)]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "[{}]", s.join(","))
    }
}
