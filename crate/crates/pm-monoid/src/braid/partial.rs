//! Braids on a subset of points: one layer of a layered braid.

use super::garside::{normalize, BraidNormalForm};
use super::word::BraidWord;
use crate::error::{Error, Result};
use std::collections::BTreeSet;
use std::fmt;

/// A braid connecting a set of top positions to a set of bottom positions
/// inside ambient 1..=n, stored with the canonical form of its word on the
/// occupied strands (labeled order-preservingly by top position).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PartialBraid {
    n: usize,
    top: Vec<usize>,
    bottom: Vec<usize>,
    nf: BraidNormalForm,
}

fn check_positions(n: usize, what: &str, v: &[usize]) -> Result<()> {
    if v.is_empty() {
        return Err(Error::InvalidBraid(format!("{what} set is empty")));
    }
    if v.windows(2).any(|w| w[0] >= w[1]) || v[0] < 1 || *v.last().unwrap() > n {
        return Err(Error::InvalidBraid(format!(
            "{what} positions must be strictly increasing inside 1..={n}"
        )));
    }
    Ok(())
}

impl PartialBraid {
    pub fn new(n: usize, top: Vec<usize>, bottom: Vec<usize>, word: &BraidWord) -> Result<Self> {
        check_positions(n, "top", &top)?;
        check_positions(n, "bottom", &bottom)?;
        if top.len() != bottom.len() {
            return Err(Error::InvalidBraid(format!(
                "rank mismatch: {} top points, {} bottom points",
                top.len(),
                bottom.len()
            )));
        }
        if word.strands() != top.len() {
            return Err(Error::InvalidBraid(format!(
                "word on {} strands for {} occupied points",
                word.strands(),
                top.len()
            )));
        }
        Ok(PartialBraid { n, top, bottom, nf: normalize(word) })
    }

    /// The identity braid on a set of points.
    pub fn identity_on(n: usize, points: &[usize]) -> Result<Self> {
        let v = points.to_vec();
        let word = BraidWord::empty(v.len());
        PartialBraid::new(n, v.clone(), v, &word)
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn top(&self) -> &[usize] {
        &self.top
    }

    pub fn bottom(&self) -> &[usize] {
        &self.bottom
    }

    pub fn normal_form(&self) -> &BraidNormalForm {
        &self.nf
    }

    pub fn rank(&self) -> usize {
        self.top.len()
    }

    /// Bottom position reached by the strand starting at top position x.
    pub fn pairing(&self, x: usize) -> Result<usize> {
        let label = self
            .top
            .binary_search(&x)
            .map_err(|_| Error::OutOfRange(format!("{x} is not a top position")))?
            + 1;
        let end = self.nf.eval_permutation().apply(label);
        Ok(self.bottom[end - 1])
    }

    /// Stacks self above other: strands of self whose bottom endpoint meets a
    /// top point of other survive; everything else is removed.  Returns None
    /// when no strand survives.
    pub fn compose(&self, other: &Self) -> Result<Option<PartialBraid>> {
        if self.n != other.n {
            return Err(Error::SizeMismatch(format!(
                "partial braids on ambient {} and {}",
                self.n, other.n
            )));
        }
        let mut top = Vec::new();
        let mut keep_self: BTreeSet<usize> = BTreeSet::new();
        let mut mid: BTreeSet<usize> = BTreeSet::new();
        for (idx, &x) in self.top.iter().enumerate() {
            let end = self.pairing(x)?;
            if other.top.binary_search(&end).is_ok() {
                top.push(x);
                keep_self.insert(idx + 1);
                mid.insert(end);
            }
        }
        if top.is_empty() {
            return Ok(None);
        }
        let keep_other: BTreeSet<usize> = mid
            .iter()
            .map(|&y| other.top.binary_search(&y).expect("endpoint located above") + 1)
            .collect();
        let mut bottom: Vec<usize> = mid.iter().map(|&y| other.pairing(y)).collect::<Result<_>>()?;
        bottom.sort_unstable();
        let word = self
            .nf
            .to_word()
            .delete_strands(&keep_self)?
            .concat(&other.nf.to_word().delete_strands(&keep_other)?)?;
        Ok(Some(PartialBraid::new(self.n, top, bottom, &word)?))
    }
}

impl fmt::Display for PartialBraid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fmt_set = |v: &[usize]| {
            v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
        };
        write!(
            f,
            "{{{}}}->{{{}}}:{}",
            fmt_set(&self.top),
            fmt_set(&self.bottom),
            self.nf.to_word()
        )
    }
}
