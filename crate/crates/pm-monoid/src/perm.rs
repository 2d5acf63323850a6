//! Permutations of `{1..n}` in one-line notation, 1-based throughout.

use crate::error::{Error, Result};
use itertools::Itertools;
use std::fmt;
use std::str::FromStr;

/// Largest n accepted by the exhaustive enumerators.
pub const ENUMERATION_BOUND: usize = 6;

/// A permutation w of `{1..n}` stored as its image list `[w(1), ..., w(n)]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// Builds a permutation from its image list; every value in `1..=n` must
    /// appear exactly once.
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v == 0 || v > n || seen[v - 1] {
                return Err(Error::InvalidPermutation(format!(
                    "image list {images:?} is not a bijection on 1..={n}"
                )));
            }
            seen[v - 1] = true;
        }
        Ok(Self { images })
    }

    pub fn identity(n: usize) -> Self {
        Self { images: (1..=n).collect() }
    }

    /// The adjacent transposition swapping i and i+1.
    pub fn transposition(n: usize, i: usize) -> Result<Self> {
        if i == 0 || i + 1 > n {
            return Err(Error::OutOfRange(format!(
                "transposition index {i} not in 1..={}",
                n.saturating_sub(1)
            )));
        }
        let mut images: Vec<usize> = (1..=n).collect();
        images.swap(i - 1, i);
        Ok(Self { images })
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// w(i) for a 1-based position.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, &v)| v == k + 1)
    }

    /// Function composition: `(self . other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.n() != other.n() {
            return Err(Error::SizeMismatch(format!(
                "compose of permutations on {} and {} points",
                self.n(),
                other.n()
            )));
        }
        Ok(Self { images: (1..=self.n()).map(|i| self.apply(other.apply(i))).collect() })
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.n()];
        for (k, &v) in self.images.iter().enumerate() {
            images[v - 1] = k + 1;
        }
        Self { images }
    }

    /// A word `(i_1, ..., i_t)` of adjacent transpositions with
    /// `s_{i_1} . s_{i_2} . ... . s_{i_t} = self` under [`Self::compose`].
    ///
    /// The word is reduced and canonical (smallest descent first while
    /// unwinding from the right).
    pub fn adjacent_transposition_word(&self) -> Vec<usize> {
        let n = self.n();
        let mut cur = self.clone();
        let mut tail = Vec::new();
        loop {
            let descent = (1..n).find(|&i| cur.apply(i) > cur.apply(i + 1));
            match descent {
                None => break,
                Some(i) => {
                    let s = Self::transposition(n, i).expect("index in range");
                    cur = cur.compose(&s).expect("same size");
                    tail.push(i);
                }
            }
        }
        tail.reverse();
        tail
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.images.iter().join(","))
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let inner = t
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("permutation {t:?} is not of the form [..]")))?;
        if inner.trim().is_empty() {
            return Permutation::new(vec![]);
        }
        let images = inner
            .split(',')
            .map(|x| {
                x.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad permutation entry {x:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Permutation::new(images)
    }
}

/// All permutations of `{1..n}` in lexicographic order of their image lists.
pub fn enumerate_permutations(n: usize) -> Result<Vec<Permutation>> {
    if n > ENUMERATION_BOUND {
        return Err(Error::BoundExceeded(format!(
            "permutation enumeration limited to n <= {ENUMERATION_BOUND}, got {n}"
        )));
    }
    Ok((1..=n)
        .permutations(n)
        .map(|v| Permutation { images: v })
        .collect())
}
