//! The matched-pair monoid of pairs (permutation, ordered set partition).
//!
//! The product is `(w, p)(v, q) = (w∘v, φ_v(p) * q)` where `φ_v` takes
//! blockwise preimages and `*` is the refinement product.  Structural equality
//! of pairs solves the word problem: words in the generators are compared by
//! evaluating them to pairs.

mod verify;
mod word;

pub use verify::{all_cut_specs, verify_matched_pair_axioms, verify_presentation_relations};
pub use word::{RLetter, RWord};

use crate::error::{Error, Result};
use crate::partition::{apply_to_partition, IntervalCuts, OrderedSetPartition};
use crate::perm::Permutation;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

/// Largest n accepted by `enumerate_monoid`.
pub const MONOID_ENUMERATION_BOUND: usize = 5;

/// A monoid element: permutation w and ordered set partition p on the same
/// ground set `{1..n}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RElement {
    w: Permutation,
    p: OrderedSetPartition,
}

impl RElement {
    pub fn new(w: Permutation, p: OrderedSetPartition) -> Result<Self> {
        if w.n() != p.n() {
            return Err(Error::SizeMismatch(format!(
                "permutation on {} points paired with partition of {}",
                w.n(),
                p.n()
            )));
        }
        Ok(Self { w, p })
    }

    /// The identity: identity permutation with the one-block partition.
    pub fn identity(n: usize) -> Self {
        Self { w: Permutation::identity(n), p: OrderedSetPartition::one_block(n) }
    }

    pub fn n(&self) -> usize {
        self.w.n()
    }

    pub fn w(&self) -> &Permutation {
        &self.w
    }

    pub fn p(&self) -> &OrderedSetPartition {
        &self.p
    }

    /// Generator s_i: the transposition (i, i+1) with the one-block partition.
    pub fn generator_s(i: usize, n: usize) -> Result<Self> {
        Ok(Self {
            w: Permutation::transposition(n, i)?,
            p: OrderedSetPartition::one_block(n),
        })
    }

    /// Generator e with the given interval partition: identity permutation,
    /// blocks cut at the given positions.
    pub fn generator_e(spec: &IntervalCuts) -> Self {
        Self { w: Permutation::identity(spec.n()), p: spec.to_partition() }
    }

    /// Monoid product `(w, p)(v, q) = (w∘v, φ_v(p) * q)`.
    pub fn product(&self, other: &Self) -> Result<Self> {
        let w = self.w.compose(&other.w)?;
        let p = apply_to_partition(&other.w, &self.p)?.product(&other.p)?;
        Ok(Self { w, p })
    }

    pub fn is_idempotent(&self) -> bool {
        self.product(self).expect("same n") == *self
    }

    /// Units are exactly the elements with the one-block partition.
    pub fn is_unit(&self) -> bool {
        self.p.block_count() == 1
    }

    /// Inverse of a unit.
    pub fn inverse(&self) -> Result<Self> {
        if !self.is_unit() {
            return Err(Error::Inconsistent(format!("{self} is not a unit")));
        }
        Ok(Self { w: self.w.inverse(), p: self.p.clone() })
    }

    /// Conjugation `Ad(σ)(e) = σ⁻¹ e σ`; `self` must be a unit and `e` must
    /// have identity permutation part.
    pub fn ad(&self, e: &Self) -> Result<Self> {
        if !self.is_unit() {
            return Err(Error::Inconsistent(format!(
                "conjugator {self} does not have a one-block partition"
            )));
        }
        if !e.w.is_identity() {
            return Err(Error::Inconsistent(format!(
                "conjugated element {e} does not have identity permutation"
            )));
        }
        self.inverse()?.product(e)?.product(self)
    }
}

impl fmt::Display for RElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.w, self.p)
    }
}

impl FromStr for RElement {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let inner = t
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("element {s:?} is not of the form (w, p)")))?;
        let close = inner
            .find(']')
            .ok_or_else(|| Error::Parse(format!("no permutation part in {s:?}")))?;
        let w: Permutation = inner[..=close].parse()?;
        let rest = inner[close + 1..]
            .strip_prefix(',')
            .ok_or_else(|| Error::Parse(format!("expected ',' after permutation in {s:?}")))?;
        let p: OrderedSetPartition = rest.parse()?;
        RElement::new(w, p)
    }
}

/// The submonoid generated by all s_i and all interval e generators, closed
/// under the product; for every n this is the whole of S_n × P_n.
pub fn enumerate_monoid(n: usize) -> Result<Vec<RElement>> {
    if n == 0 || n > MONOID_ENUMERATION_BOUND {
        return Err(Error::BoundExceeded(format!(
            "monoid enumeration limited to 1 <= n <= {MONOID_ENUMERATION_BOUND}, got {n}"
        )));
    }
    let mut gens = Vec::new();
    for i in 1..n {
        gens.push(RElement::generator_s(i, n)?);
    }
    for mask in 0u32..(1 << (n - 1)) {
        let cuts: Vec<usize> = (1..n).filter(|k| mask & (1 << (k - 1)) != 0).collect();
        gens.push(RElement::generator_e(&IntervalCuts::new(n, cuts)?));
    }
    let mut all: BTreeSet<RElement> = gens.iter().cloned().collect();
    all.insert(RElement::identity(n));
    let mut frontier: Vec<RElement> = all.iter().cloned().collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for x in &frontier {
            for g in &gens {
                let y = x.product(g)?;
                if all.insert(y.clone()) {
                    next.push(y);
                }
            }
        }
        frontier = next;
    }
    Ok(all.into_iter().collect())
}
