use std::fmt;
use std::str::FromStr;

use affine_roots::WeightVec;

use crate::error::ShuffleError;

/// A word in the nodes of the Dynkin diagram.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(pub Vec<u8>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letter(i: usize) -> Self {
        Word(vec![i as u8])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `Σ` of the letters as a vector of `ℕI` with `n` coordinates.
    pub fn weight(&self, n: usize) -> WeightVec {
        let mut v = vec![0i64; n];
        for &a in &self.0 {
            v[a as usize] += 1;
        }
        WeightVec(v)
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn split_at(&self, k: usize) -> (Word, Word) {
        (Word(self.0[..k].to_vec()), Word(self.0[k..].to_vec()))
    }

    /// Lengths of the maximal runs of repeated letters.
    pub fn runs(&self) -> Vec<usize> {
        let mut out = Vec::new();
        let mut i = 0;
        while i < self.0.len() {
            let mut j = i;
            while j < self.0.len() && self.0[j] == self.0[i] {
                j += 1;
            }
            out.push(j - i);
            i = j;
        }
        out
    }
}

impl fmt::Display for Word {
    /// Letters joined by `.`; the empty word is `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "()");
        }
        let s: Vec<String> = self.0.iter().map(|a| a.to_string()).collect();
        write!(f, "{}", s.join("."))
    }
}

impl FromStr for Word {
    type Err = ShuffleError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "()" {
            return Ok(Word::empty());
        }
        s.split('.')
            .map(|t| {
                if t.is_empty() || t.len() > 3 || !t.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(ShuffleError::BadWord(s.to_string()));
                }
                t.parse::<u8>().map_err(|_| ShuffleError::BadWord(s.to_string()))
            })
            .collect::<Result<Vec<u8>, _>>()
            .map(Word)
    }
}

/// All words of weight `ν`, in increasing lexicographic order.
pub fn words_of_weight(nu: &WeightVec) -> Vec<Word> {
    fn rec(rem: &mut [i64], cur: &mut Vec<u8>, left: usize, out: &mut Vec<Word>) {
        if left == 0 {
            out.push(Word(cur.clone()));
            return;
        }
        for i in 0..rem.len() {
            if rem[i] > 0 {
                rem[i] -= 1;
                cur.push(i as u8);
                rec(rem, cur, left - 1, out);
                cur.pop();
                rem[i] += 1;
            }
        }
    }
    let mut rem = nu.0.clone();
    let mut out = Vec::new();
    rec(&mut rem, &mut Vec::new(), nu.height() as usize, &mut out);
    out
}
