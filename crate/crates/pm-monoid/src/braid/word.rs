//! Signed braid words and strand deletion.

use crate::error::{Error, Result};
use crate::perm::Permutation;
use std::collections::BTreeSet;
use std::fmt;

/// A word in the braid generators on a fixed strand count: letter `i` is the
/// positive crossing of strands at positions i, i+1 and `-i` its inverse.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::OutOfRange("a braid word needs at least one strand".into()));
        }
        for &l in &letters {
            let i = l.unsigned_abs() as usize;
            if l == 0 || i >= strands {
                return Err(Error::OutOfRange(format!(
                    "letter {l} is not a generator index on {strands} strands"
                )));
            }
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn empty(strands: usize) -> Self {
        BraidWord { strands, letters: Vec::new() }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    /// The reversed word with every crossing sign flipped.
    pub fn inverse(&self) -> Self {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|l| -l).collect(),
        }
    }

    pub fn concat(&self, other: &Self) -> Result<Self> {
        if self.strands != other.strands {
            return Err(Error::SizeMismatch(format!(
                "cannot concatenate words on {} and {} strands",
                self.strands, other.strands
            )));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord { strands: self.strands, letters })
    }

    /// Maps each top position to the bottom position its strand reaches.
    pub fn trace_permutation(&self) -> Permutation {
        let mut occupant: Vec<usize> = (1..=self.strands).collect();
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize;
            occupant.swap(i - 1, i);
        }
        let mut images = vec![0; self.strands];
        for (pos, &strand) in occupant.iter().enumerate() {
            images[strand - 1] = pos + 1;
        }
        Permutation::new(images).expect("occupants form a bijection")
    }

    /// The braid induced on the kept strands, identified by their top
    /// positions and relabeled order-preservingly.  Crossings between two
    /// kept strands survive with their sign; all others are dropped.
    pub fn delete_strands(&self, keep: &BTreeSet<usize>) -> Result<Self> {
        if keep.is_empty() {
            return Err(Error::OutOfRange("cannot delete every strand".into()));
        }
        if let Some(&bad) = keep.iter().find(|&&s| s == 0 || s > self.strands) {
            return Err(Error::OutOfRange(format!(
                "kept strand {bad} is outside 1..={}",
                self.strands
            )));
        }
        let mut occupant: Vec<usize> = (1..=self.strands).collect();
        let mut letters = Vec::new();
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize;
            let (a, b) = (occupant[i - 1], occupant[i]);
            if keep.contains(&a) && keep.contains(&b) {
                let below = occupant[..i - 1].iter().filter(|s| keep.contains(s)).count();
                let r = (below + 1) as i32;
                letters.push(if l > 0 { r } else { -r });
            }
            occupant.swap(i - 1, i);
        }
        BraidWord::new(keep.len(), letters)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, &l) in self.letters.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            if l > 0 {
                write!(f, "s{l}")?;
            } else {
                write!(f, "s{}'", -l)?;
            }
        }
        Ok(())
    }
}
