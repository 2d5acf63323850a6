//! Words in the generators s_i and e_{cuts}, with parsing and evaluation.

use super::RElement;
use crate::error::{Error, Result};
use crate::partition::IntervalCuts;
use itertools::Itertools;
use std::fmt;

/// One generator letter: `S(i)` for s_i, `E(cuts)` for the interval
/// idempotent with the given cut positions.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum RLetter {
    S(usize),
    E(Vec<usize>),
}

impl fmt::Display for RLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RLetter::S(i) => write!(f, "s{i}"),
            RLetter::E(cuts) => write!(f, "e[{}]", cuts.iter().join(",")),
        }
    }
}

/// A word in the generators of the monoid on n points.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RWord {
    n: usize,
    letters: Vec<RLetter>,
}

impl RWord {
    pub fn new(n: usize, letters: Vec<RLetter>) -> Result<Self> {
        for l in &letters {
            match l {
                RLetter::S(i) => {
                    if *i == 0 || *i + 1 > n {
                        return Err(Error::OutOfRange(format!("letter s{i} needs n > {i}")));
                    }
                }
                RLetter::E(cuts) => {
                    IntervalCuts::new(n, cuts.clone())?;
                }
            }
        }
        Ok(Self { n, letters })
    }

    /// Parses whitespace-separated tokens `s<i>` and `e[<cuts>]`.
    pub fn parse(n: usize, text: &str) -> Result<Self> {
        let letters = text
            .split_whitespace()
            .map(parse_letter)
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, letters)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[RLetter] {
        &self.letters
    }

    /// Left-to-right product of the generator images; the empty word gives
    /// the identity.
    pub fn evaluate(&self) -> RElement {
        let mut acc = RElement::identity(self.n);
        for l in &self.letters {
            let g = match l {
                RLetter::S(i) => RElement::generator_s(*i, self.n).expect("validated letter"),
                RLetter::E(cuts) => RElement::generator_e(
                    &IntervalCuts::new(self.n, cuts.clone()).expect("validated letter"),
                ),
            };
            acc = acc.product(&g).expect("same n");
        }
        acc
    }
}

pub(crate) fn parse_letter(tok: &str) -> Result<RLetter> {
    if let Some(rest) = tok.strip_prefix('s') {
        let i = rest
            .parse::<usize>()
            .map_err(|_| Error::Parse(format!("bad generator token {tok:?}")))?;
        return Ok(RLetter::S(i));
    }
    if let Some(rest) = tok.strip_prefix('e') {
        let body = rest
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("bad generator token {tok:?}")))?;
        let cuts = if body.is_empty() {
            Vec::new()
        } else {
            body.split(',')
                .map(|x| {
                    x.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad cut list in {tok:?}")))
                })
                .collect::<Result<Vec<_>>>()?
        };
        return Ok(RLetter::E(cuts));
    }
    Err(Error::Parse(format!("unknown generator token {tok:?}")))
}

impl fmt::Display for RWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letters.iter().join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display_round_trip() {
        let w = RWord::parse(3, "s1 e[2] s2 e[] e[1,2]").unwrap();
        assert_eq!(w.to_string(), "s1 e[2] s2 e[] e[1,2]");
        assert_eq!(w.letters().len(), 5);
        assert!(RWord::parse(3, "s3").is_err());
        assert!(RWord::parse(3, "e[3]").is_err());
        assert!(RWord::parse(3, "t1").is_err());
        assert!(RWord::parse(3, "e[2").is_err());
        assert!(RWord::parse(3, "s1'").is_err());
    }

    #[test]
    fn evaluation_folds_left_to_right() {
        assert_eq!(RWord::parse(3, "").unwrap().evaluate(), RElement::identity(3));
        assert_eq!(RWord::parse(2, "s1 s1").unwrap().evaluate(), RElement::identity(2));
        let a = RWord::parse(3, "e[2] s1").unwrap().evaluate();
        let b = RWord::parse(3, "s1 e[2]").unwrap().evaluate();
        assert_eq!(a, b);
        assert_eq!(a, "([2,1,3], ({1,2},{3}))".parse().unwrap());
    }
}
