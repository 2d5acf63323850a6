//! Freely reduced words in a free group and marked quotients that kill a
//! subset of the generators.

use crate::error::{Error, Result};
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

/// A freely reduced word on generators u_1..u_rank; letter i is u_i and -i
/// its inverse.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FreeWord {
    rank: usize,
    letters: Vec<i32>,
}

fn reduce_letters(letters: &[i32]) -> Vec<i32> {
    let mut out: Vec<i32> = Vec::with_capacity(letters.len());
    for &l in letters {
        if out.last() == Some(&-l) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

impl FreeWord {
    /// Builds a word and freely reduces it.
    pub fn new(rank: usize, letters: Vec<i32>) -> Result<Self> {
        for &l in &letters {
            let i = l.unsigned_abs() as usize;
            if l == 0 || i > rank {
                return Err(Error::OutOfRange(format!(
                    "letter {l} is not a generator of a rank {rank} free group"
                )));
            }
        }
        Ok(FreeWord { rank, letters: reduce_letters(&letters) })
    }

    pub fn empty(rank: usize) -> Self {
        FreeWord { rank, letters: Vec::new() }
    }

    pub fn generator(rank: usize, i: usize) -> Result<Self> {
        FreeWord::new(rank, vec![i as i32])
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> Self {
        FreeWord {
            rank: self.rank,
            letters: self.letters.iter().rev().map(|l| -l).collect(),
        }
    }

    pub fn concat(&self, other: &Self) -> Result<Self> {
        if self.rank != other.rank {
            return Err(Error::SizeMismatch(format!(
                "free words of rank {} and {}",
                self.rank, other.rank
            )));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(FreeWord { rank: self.rank, letters: reduce_letters(&letters) })
    }

    /// c^-1 self c.
    pub fn conjugate_by(&self, c: &Self) -> Result<Self> {
        c.inverse().concat(self)?.concat(c)
    }

    /// Deletes every letter whose generator index lies in dead, then reduces.
    pub fn kill(&self, dead: &BTreeSet<usize>) -> Self {
        let letters: Vec<i32> = self
            .letters
            .iter()
            .copied()
            .filter(|l| !dead.contains(&(l.unsigned_abs() as usize)))
            .collect();
        FreeWord { rank: self.rank, letters: reduce_letters(&letters) }
    }

    /// If the word is c^-1 u_m c for a (unique shortest) conjugator c,
    /// returns (m, c).  Reduced conjugates of a positive generator are
    /// exactly the words with a positive middle letter mirrored by inverse
    /// letters, so this is a syntactic check.
    pub fn as_generator_conjugate(&self) -> Option<(usize, FreeWord)> {
        let len = self.letters.len();
        if len.is_multiple_of(2) {
            return None;
        }
        let mid = self.letters[len / 2];
        if mid < 0 {
            return None;
        }
        for k in 0..len / 2 {
            if self.letters[k] != -self.letters[len - 1 - k] {
                return None;
            }
        }
        let c = FreeWord { rank: self.rank, letters: self.letters[len / 2 + 1..].to_vec() };
        Some((mid as usize, c))
    }

    /// Net exponent of each generator: the image in the free abelianization.
    pub fn exponent_sums(&self) -> Vec<i64> {
        let mut sums = vec![0i64; self.rank];
        for &l in &self.letters {
            sums[l.unsigned_abs() as usize - 1] += l.signum() as i64;
        }
        sums
    }

    /// Replaces each letter u_i by image(i) (inverted for negative letters)
    /// and reduces; image must cover every surviving letter.
    pub fn substitute<F>(&self, mut image: F) -> Result<Self>
    where
        F: FnMut(usize) -> Result<FreeWord>,
    {
        let mut acc = FreeWord::empty(self.rank);
        for &l in &self.letters {
            let w = image(l.unsigned_abs() as usize)?;
            acc = if l > 0 { acc.concat(&w)? } else { acc.concat(&w.inverse())? };
        }
        Ok(acc)
    }

    pub fn parse(rank: usize, text: &str) -> Result<Self> {
        let mut letters = Vec::new();
        for token in text.split_whitespace() {
            let rest = token
                .strip_prefix('u')
                .ok_or_else(|| Error::Parse(format!("unknown token \"{token}\"")))?;
            let (body, negative) = match rest.strip_suffix('\'') {
                Some(b) => (b, true),
                None => (rest, false),
            };
            let i: i32 = body
                .parse()
                .map_err(|_| Error::Parse(format!("bad generator token \"{token}\"")))?;
            if i <= 0 {
                return Err(Error::Parse(format!("bad generator token \"{token}\"")));
            }
            letters.push(if negative { -i } else { i });
        }
        FreeWord::new(rank, letters)
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for (k, &l) in self.letters.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            if l > 0 {
                write!(f, "u{l}")?;
            } else {
                write!(f, "u{}'", -l)?;
            }
        }
        Ok(())
    }
}

impl FromStr for FreeWord {
    type Err = Error;

    /// Parses with the rank inferred as the largest generator index.
    fn from_str(s: &str) -> Result<Self> {
        let probe = FreeWord::parse(usize::MAX, s)?;
        let rank = probe
            .letters
            .iter()
            .map(|l| l.unsigned_abs() as usize)
            .max()
            .unwrap_or(0);
        FreeWord::new(rank, probe.letters)
    }
}

/// A free group with a marked set of surviving generators; the others are
/// set to 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MarkedQuotient {
    rank: usize,
    alive: BTreeSet<usize>,
}

impl MarkedQuotient {
    pub fn new(rank: usize, alive: BTreeSet<usize>) -> Result<Self> {
        if let Some(&bad) = alive.iter().find(|&&i| i == 0 || i > rank) {
            return Err(Error::OutOfRange(format!(
                "marked generator {bad} is outside 1..={rank}"
            )));
        }
        Ok(MarkedQuotient { rank, alive })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn alive(&self) -> &BTreeSet<usize> {
        &self.alive
    }

    /// Image of a word in the quotient: killed generators vanish.
    pub fn project(&self, w: &FreeWord) -> FreeWord {
        let dead: BTreeSet<usize> = (1..=self.rank).filter(|i| !self.alive.contains(i)).collect();
        w.kill(&dead)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn w(rank: usize, letters: &[i32]) -> FreeWord {
        FreeWord::new(rank, letters.to_vec()).unwrap()
    }

    #[test]
    fn construction_reduces() {
        assert_eq!(w(2, &[1, -1, 2]).letters(), &[2]);
        assert_eq!(w(2, &[1, 2, -2, -1]).letters(), &[] as &[i32]);
        assert_eq!(w(3, &[1, 2, -2, 2]).letters(), &[1, 2]);
        assert!(FreeWord::new(2, vec![3]).is_err());
        assert!(FreeWord::new(2, vec![0]).is_err());
    }

    #[test]
    fn killing_deletes_then_reduces() {
        let word = w(2, &[1, 2, -1]);
        assert!(word.kill(&[2usize].into_iter().collect()).is_empty());
        assert_eq!(word.kill(&BTreeSet::new()), word);
        let q = MarkedQuotient::new(2, [1usize].into_iter().collect()).unwrap();
        assert!(q.project(&word).is_empty());
        assert!(MarkedQuotient::new(2, [3usize].into_iter().collect()).is_err());
    }

    #[test]
    fn group_identities_hold() {
        let mut rng = ChaCha8Rng::seed_from_u64(51);
        for _ in 0..200 {
            let rank = rng.gen_range(1..=4usize);
            let rand_word = |rng: &mut ChaCha8Rng| {
                let len = rng.gen_range(0..=8usize);
                let letters = (0..len)
                    .map(|_| {
                        let i = rng.gen_range(1..=rank) as i32;
                        if rng.gen_bool(0.5) {
                            i
                        } else {
                            -i
                        }
                    })
                    .collect();
                FreeWord::new(rank, letters).unwrap()
            };
            let a = rand_word(&mut rng);
            let b = rand_word(&mut rng);
            let c = rand_word(&mut rng);
            assert!(a.concat(&a.inverse()).unwrap().is_empty());
            let assoc_l = a.concat(&b).unwrap().concat(&c).unwrap();
            let assoc_r = a.concat(&b.concat(&c).unwrap()).unwrap();
            assert_eq!(assoc_l, assoc_r);
            // reduction is confluent: re-reducing changes nothing
            assert_eq!(FreeWord::new(rank, assoc_l.letters().to_vec()).unwrap(), assoc_l);
        }
    }

    #[test]
    fn generator_conjugates_are_recognized() {
        let v = w(3, &[-2, -1, 3, 1, 2]);
        let (m, c) = v.as_generator_conjugate().unwrap();
        assert_eq!(m, 3);
        assert_eq!(c.letters(), &[1, 2]);
        assert_eq!(FreeWord::generator(3, 3).unwrap().conjugate_by(&c).unwrap(), v);
        // plain generator: empty conjugator
        let (m, c) = w(3, &[2]).as_generator_conjugate().unwrap();
        assert_eq!((m, c.is_empty()), (2, true));
        assert!(w(3, &[-2]).as_generator_conjugate().is_none());
        assert!(w(3, &[1, 2]).as_generator_conjugate().is_none());
        assert!(w(3, &[1, 2, 1]).as_generator_conjugate().is_none());
        // conjugating by a power of the target still extracts canonically
        let x = FreeWord::generator(2, 1)
            .unwrap()
            .conjugate_by(&w(2, &[1, 1, 2]))
            .unwrap();
        let (m, c) = x.as_generator_conjugate().unwrap();
        assert_eq!(m, 1);
        assert_eq!(c.letters(), &[2]);
    }

    #[test]
    fn substitution_is_a_homomorphism() {
        let img = |i: usize| -> crate::error::Result<FreeWord> {
            match i {
                1 => FreeWord::new(2, vec![1, 2, -1]),
                _ => FreeWord::new(2, vec![1]),
            }
        };
        let a = w(2, &[1, 2]);
        let b = w(2, &[-2, 1]);
        let lhs = a.concat(&b).unwrap().substitute(img).unwrap();
        let rhs = a.substitute(img).unwrap().concat(&b.substitute(img).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn display_and_parse_round_trip() {
        let v = w(3, &[1, -2, 3]);
        assert_eq!(v.to_string(), "u1 u2' u3");
        assert_eq!(FreeWord::parse(3, "u1 u2' u3").unwrap(), v);
        assert_eq!(FreeWord::empty(2).to_string(), "1");
        assert_eq!("u2 u2 u1'".parse::<FreeWord>().unwrap().rank(), 2);
        assert!(FreeWord::parse(2, "u3").is_err());
        assert!(FreeWord::parse(2, "x1").is_err());
        assert!(FreeWord::parse(2, "u0").is_err());
        assert!(FreeWord::parse(2, "u-1").is_err());
    }

    #[test]
    fn exponent_sums_abelianize() {
        let v = w(3, &[1, -2, 1, 3, -3, -1]);
        assert_eq!(v.exponent_sums(), vec![1, -1, 0]);
    }
}
