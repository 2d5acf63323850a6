//! Layered partial braids: ordered stacks of partial braids whose tops and
//! bottoms partition the ambient points, with the stacking product.

use super::partial::PartialBraid;
use super::word::BraidWord;
use crate::error::{Error, Result};
use crate::partition::{IntervalCuts, OrderedSetPartition};
use crate::perm::Permutation;
use crate::rmonoid::RElement;
use std::fmt;
use std::str::FromStr;

/// A layered braid on n points.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PMBraid {
    n: usize,
    layers: Vec<PartialBraid>,
}

impl PMBraid {
    pub fn new(n: usize, layers: Vec<PartialBraid>) -> Result<Self> {
        if layers.is_empty() {
            return Err(Error::InvalidBraid("a layered braid needs at least one layer".into()));
        }
        let mut top_seen = vec![false; n];
        let mut bottom_seen = vec![false; n];
        for l in &layers {
            if l.ambient() != n {
                return Err(Error::SizeMismatch(format!(
                    "layer on ambient {} inside a braid on {n}",
                    l.ambient()
                )));
            }
            for &x in l.top() {
                if std::mem::replace(&mut top_seen[x - 1], true) {
                    return Err(Error::InvalidBraid(format!("top point {x} used twice")));
                }
            }
            for &x in l.bottom() {
                if std::mem::replace(&mut bottom_seen[x - 1], true) {
                    return Err(Error::InvalidBraid(format!("bottom point {x} used twice")));
                }
            }
        }
        if !top_seen.iter().all(|&b| b) || !bottom_seen.iter().all(|&b| b) {
            return Err(Error::InvalidBraid("layers must cover every point".into()));
        }
        Ok(PMBraid { n, layers })
    }

    /// Single identity layer on all points.
    pub fn identity(n: usize) -> Result<Self> {
        let all: Vec<usize> = (1..=n).collect();
        PMBraid::new(n, vec![PartialBraid::identity_on(n, &all)?])
    }

    /// Single full layer with one signed crossing at position i.
    pub fn generator_s(i: usize, n: usize, positive: bool) -> Result<Self> {
        if i == 0 || i + 1 > n {
            return Err(Error::OutOfRange(format!("crossing position {i} needs 1..={}", n.saturating_sub(1))));
        }
        let all: Vec<usize> = (1..=n).collect();
        let letter = if positive { i as i32 } else { -(i as i32) };
        let word = BraidWord::new(n, vec![letter])?;
        PMBraid::new(n, vec![PartialBraid::new(n, all.clone(), all, &word)?])
    }

    /// One identity layer per interval block.
    pub fn generator_e(spec: &IntervalCuts) -> Result<Self> {
        let p = spec.to_partition();
        let layers = p
            .blocks()
            .iter()
            .map(|b| PartialBraid::identity_on(spec.n(), b))
            .collect::<Result<Vec<_>>>()?;
        PMBraid::new(spec.n(), layers)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn layers(&self) -> &[PartialBraid] {
        &self.layers
    }

    /// Stacking product: self above other.  Candidate layers pair every layer
    /// of self with every layer of other, self's index moving fastest, and
    /// empty intersections are dropped.
    pub fn product(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::SizeMismatch(format!(
                "braids on {} and {} points",
                self.n, other.n
            )));
        }
        let mut layers = Vec::new();
        for b in &other.layers {
            for a in &self.layers {
                if let Some(l) = a.compose(b)? {
                    layers.push(l);
                }
            }
        }
        PMBraid::new(self.n, layers)
    }

    /// Forgets the braiding: the permutation sends each bottom position back
    /// to the top position of its strand, and the partition lists the layer
    /// bottoms in layer order.
    pub fn project_to_r(&self) -> Result<RElement> {
        let mut images = vec![0; self.n];
        let mut blocks = Vec::new();
        for l in &self.layers {
            for &x in l.top() {
                images[l.pairing(x)? - 1] = x;
            }
            blocks.push(l.bottom().to_vec());
        }
        let w = Permutation::new(images)?;
        let p = OrderedSetPartition::new(self.n, blocks)?;
        RElement::new(w, p)
    }

    pub fn to_json(&self) -> String {
        let layers: Vec<serde_json::Value> = self
            .layers
            .iter()
            .map(|l| {
                serde_json::json!({
                    "top": l.top(),
                    "bottom": l.bottom(),
                    "word": l.normal_form().to_word().letters(),
                })
            })
            .collect();
        let v = serde_json::json!({ "n": self.n, "layers": layers });
        serde_json::to_string_pretty(&v).expect("serialization cannot fail")
    }

    /// Loads a braid from JSON, canonicalizing each layer's word.
    pub fn from_json(text: &str) -> Result<Self> {
        let v: serde_json::Value = serde_json::from_str(text)
            .map_err(|e| Error::Parse(format!("invalid JSON: {e}")))?;
        let obj = v
            .as_object()
            .ok_or_else(|| Error::Parse("top level value must be an object".into()))?;
        let n = obj
            .get("n")
            .and_then(|x| x.as_u64())
            .and_then(|x| usize::try_from(x).ok())
            .filter(|&x| x > 0)
            .ok_or_else(|| Error::Parse("\"n\" must be a positive integer".into()))?;
        let read_positions = |v: &serde_json::Value, what: &str| -> Result<Vec<usize>> {
            v.as_array()
                .ok_or_else(|| Error::Parse(format!("\"{what}\" must be an array")))?
                .iter()
                .map(|x| {
                    x.as_u64()
                        .and_then(|y| usize::try_from(y).ok())
                        .ok_or_else(|| Error::Parse(format!("bad position in \"{what}\"")))
                })
                .collect()
        };
        let layers = obj
            .get("layers")
            .and_then(|x| x.as_array())
            .ok_or_else(|| Error::Parse("\"layers\" must be an array".into()))?
            .iter()
            .map(|lv| {
                let lobj = lv
                    .as_object()
                    .ok_or_else(|| Error::Parse("each layer must be an object".into()))?;
                let top = read_positions(
                    lobj.get("top").ok_or_else(|| Error::Parse("missing \"top\"".into()))?,
                    "top",
                )?;
                let bottom = read_positions(
                    lobj.get("bottom").ok_or_else(|| Error::Parse("missing \"bottom\"".into()))?,
                    "bottom",
                )?;
                let letters = lobj
                    .get("word")
                    .and_then(|x| x.as_array())
                    .ok_or_else(|| Error::Parse("\"word\" must be an array of integers".into()))?
                    .iter()
                    .map(|x| {
                        x.as_i64()
                            .and_then(|y| i32::try_from(y).ok())
                            .ok_or_else(|| Error::Parse("bad word letter".into()))
                    })
                    .collect::<Result<Vec<i32>>>()?;
                let word = BraidWord::new(top.len(), letters)?;
                PartialBraid::new(n, top, bottom, &word)
            })
            .collect::<Result<Vec<_>>>()?;
        PMBraid::new(n, layers)
    }
}

impl fmt::Display for PMBraid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, l) in self.layers.iter().enumerate() {
            if k > 0 {
                write!(f, " | ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl FromStr for PMBraid {
    type Err = Error;

    /// Parses the display form "{top}->{bottom}:word | ...".  The ambient
    /// size is the total number of top points, since the tops of a layered
    /// braid partition the ambient set.
    fn from_str(s: &str) -> Result<Self> {
        let parse_set = |text: &str| -> Result<Vec<usize>> {
            let inner = text
                .trim()
                .strip_prefix('{')
                .and_then(|r| r.strip_suffix('}'))
                .ok_or_else(|| Error::Parse(format!("point set {text:?} is not of the form {{..}}")))?;
            inner
                .split(',')
                .filter(|x| !x.trim().is_empty())
                .map(|x| {
                    x.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad point {x:?}")))
                })
                .collect()
        };
        let mut parts = Vec::new();
        for chunk in s.split('|') {
            let chunk = chunk.trim();
            let (interface, word_text) = chunk
                .split_once(':')
                .ok_or_else(|| Error::Parse(format!("layer {chunk:?} has no ':'")))?;
            let (top_text, bottom_text) = interface
                .split_once("->")
                .ok_or_else(|| Error::Parse(format!("layer {chunk:?} has no \"->\"")))?;
            let top = parse_set(top_text)?;
            let bottom = parse_set(bottom_text)?;
            let mut letters = Vec::new();
            for token in word_text.split_whitespace() {
                let body = token
                    .strip_prefix('s')
                    .ok_or_else(|| Error::Parse(format!("unknown crossing token {token:?}")))?;
                let (digits, negative) = match body.strip_suffix('\'') {
                    Some(d) => (d, true),
                    None => (body, false),
                };
                let i: i32 = digits
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad crossing token {token:?}")))?;
                letters.push(if negative { -i } else { i });
            }
            parts.push((top, bottom, letters));
        }
        let n: usize = parts.iter().map(|(t, _, _)| t.len()).sum();
        let mut layers = Vec::new();
        for (top, bottom, letters) in parts {
            let word = BraidWord::new(top.len(), letters)?;
            layers.push(PartialBraid::new(n, top, bottom, &word)?);
        }
        PMBraid::new(n, layers)
    }
}

/// One token of a layered braid word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PMBraidLetter {
    /// Signed crossing: true is the positive generator.
    S(usize, bool),
    E(Vec<usize>),
}

impl fmt::Display for PMBraidLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PMBraidLetter::S(i, true) => write!(f, "s{i}"),
            PMBraidLetter::S(i, false) => write!(f, "s{i}'"),
            PMBraidLetter::E(cuts) => {
                let inner =
                    cuts.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",");
                write!(f, "e[{inner}]")
            }
        }
    }
}

/// A word in the layered braid generators on n points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PMBraidWord {
    n: usize,
    letters: Vec<PMBraidLetter>,
}

impl PMBraidWord {
    pub fn new(n: usize, letters: Vec<PMBraidLetter>) -> Result<Self> {
        for l in &letters {
            match l {
                PMBraidLetter::S(i, _) => {
                    if *i == 0 || i + 1 > n {
                        return Err(Error::OutOfRange(format!(
                            "s{i} is out of range for n={n}"
                        )));
                    }
                }
                PMBraidLetter::E(cuts) => {
                    IntervalCuts::new(n, cuts.clone())?;
                }
            }
        }
        Ok(PMBraidWord { n, letters })
    }

    /// Parses whitespace-separated tokens: s2, s2' (inverse), e[1,3], e[].
    pub fn parse(n: usize, text: &str) -> Result<Self> {
        let letters = text
            .split_whitespace()
            .map(parse_letter)
            .collect::<Result<Vec<_>>>()?;
        PMBraidWord::new(n, letters)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[PMBraidLetter] {
        &self.letters
    }

    /// Drops the crossing signs, yielding the matching word on the
    /// permutation-partition side.
    pub fn unsigned(&self) -> crate::rmonoid::RWord {
        let letters = self
            .letters
            .iter()
            .map(|l| match l {
                PMBraidLetter::S(i, _) => crate::rmonoid::RLetter::S(*i),
                PMBraidLetter::E(cuts) => crate::rmonoid::RLetter::E(cuts.clone()),
            })
            .collect();
        crate::rmonoid::RWord::new(self.n, letters).expect("letters already validated")
    }

    pub fn evaluate(&self) -> Result<PMBraid> {
        let mut acc = PMBraid::identity(self.n)?;
        for l in &self.letters {
            let g = match l {
                PMBraidLetter::S(i, positive) => PMBraid::generator_s(*i, self.n, *positive)?,
                PMBraidLetter::E(cuts) => {
                    PMBraid::generator_e(&IntervalCuts::new(self.n, cuts.clone())?)?
                }
            };
            acc = acc.product(&g)?;
        }
        Ok(acc)
    }
}

impl fmt::Display for PMBraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, l) in self.letters.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

fn parse_letter(token: &str) -> Result<PMBraidLetter> {
    if let Some(rest) = token.strip_prefix('s') {
        let (body, positive) = match rest.strip_suffix('\'') {
            Some(b) => (b, false),
            None => (rest, true),
        };
        let i: usize = body
            .parse()
            .map_err(|_| Error::Parse(format!("bad crossing token \"{token}\"")))?;
        return Ok(PMBraidLetter::S(i, positive));
    }
    if let Some(inner) = token.strip_prefix("e[").and_then(|r| r.strip_suffix(']')) {
        let cuts = if inner.is_empty() {
            Vec::new()
        } else {
            inner
                .split(',')
                .map(|c| {
                    c.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad cut list \"{token}\"")))
                })
                .collect::<Result<Vec<_>>>()?
        };
        return Ok(PMBraidLetter::E(cuts));
    }
    Err(Error::Parse(format!("unknown token \"{token}\"")))
}
