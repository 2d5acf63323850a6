//! Ordered set partitions of `{1..n}` and interval partitions given by cut
//! positions.

use crate::error::{Error, Result};
use crate::perm::{Permutation, ENUMERATION_BOUND};
use itertools::Itertools;
use std::fmt;
use std::str::FromStr;

/// An ordered sequence of disjoint nonempty blocks covering `{1..n}`.
///
/// Blocks keep their given order; elements inside a block are stored sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrderedSetPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl OrderedSetPartition {
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; n];
        let mut sorted_blocks = Vec::with_capacity(blocks.len());
        for b in blocks {
            if b.is_empty() {
                return Err(Error::InvalidPartition("empty block".into()));
            }
            let mut b = b;
            b.sort_unstable();
            for &x in &b {
                if x == 0 || x > n || seen[x - 1] {
                    return Err(Error::InvalidPartition(format!(
                        "element {x} repeated or out of 1..={n}"
                    )));
                }
                seen[x - 1] = true;
            }
            sorted_blocks.push(b);
        }
        if seen.iter().any(|&s| !s) {
            return Err(Error::InvalidPartition(format!("blocks do not cover 1..={n}")));
        }
        Ok(Self { n, blocks: sorted_blocks })
    }

    /// The one-block partition `({1..n})`.
    pub fn one_block(n: usize) -> Self {
        Self { n, blocks: vec![(1..=n).collect()] }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    /// Blockwise refinement product: blocks `self_i ∩ other_j`, the `self`
    /// index varying fastest, empty intersections dropped.
    pub fn product(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::SizeMismatch(format!(
                "partition product on {} and {} points",
                self.n, other.n
            )));
        }
        let mut blocks = Vec::new();
        for q in &other.blocks {
            for p in &self.blocks {
                let inter: Vec<usize> = p.iter().copied().filter(|x| q.contains(x)).collect();
                if !inter.is_empty() {
                    blocks.push(inter);
                }
            }
        }
        Ok(Self { n: self.n, blocks })
    }
}

impl fmt::Display for OrderedSetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({})",
            self.blocks.iter().map(|b| format!("{{{}}}", b.iter().join(","))).join(",")
        )
    }
}

impl FromStr for OrderedSetPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let inner = t
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("partition {s:?} is not of the form (..)")))?;
        let mut blocks = Vec::new();
        let mut rest = inner;
        let mut count = 0usize;
        while !rest.is_empty() {
            let body = rest
                .strip_prefix('{')
                .ok_or_else(|| Error::Parse(format!("expected '{{' in partition {s:?}")))?;
            let end = body
                .find('}')
                .ok_or_else(|| Error::Parse(format!("unclosed block in partition {s:?}")))?;
            let elems = &body[..end];
            let block = if elems.is_empty() {
                Vec::new()
            } else {
                elems
                    .split(',')
                    .map(|x| {
                        x.parse::<usize>()
                            .map_err(|_| Error::Parse(format!("bad element {x:?} in {s:?}")))
                    })
                    .collect::<Result<Vec<_>>>()?
            };
            count += block.len();
            blocks.push(block);
            rest = &body[end + 1..];
            if let Some(r) = rest.strip_prefix(',') {
                rest = r;
            } else if !rest.is_empty() {
                return Err(Error::Parse(format!("expected ',' between blocks in {s:?}")));
            }
        }
        OrderedSetPartition::new(count, blocks)
    }
}

/// An interval partition of `{1..n}` described by its strictly increasing cut
/// positions `k_1 < ... < k_{m-1}` in `1..n`; blocks are
/// `{1..k_1}, {k_1+1..k_2}, ..., {k_{m-1}+1..n}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntervalCuts {
    n: usize,
    cuts: Vec<usize>,
}

impl IntervalCuts {
    pub fn new(n: usize, cuts: Vec<usize>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidPartition("interval partition of 0 points".into()));
        }
        for w in cuts.windows(2) {
            if w[0] >= w[1] {
                return Err(Error::InvalidPartition(format!(
                    "cut positions {cuts:?} not strictly increasing"
                )));
            }
        }
        if cuts.iter().any(|&c| c == 0 || c >= n) {
            return Err(Error::InvalidPartition(format!(
                "cut positions {cuts:?} not inside 1..{n}"
            )));
        }
        Ok(Self { n, cuts })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn cuts(&self) -> &[usize] {
        &self.cuts
    }

    /// The interval partition as an ordered set partition.
    pub fn to_partition(&self) -> OrderedSetPartition {
        let mut blocks = Vec::with_capacity(self.cuts.len() + 1);
        let mut start = 1;
        for &c in &self.cuts {
            blocks.push((start..=c).collect());
            start = c + 1;
        }
        blocks.push((start..=self.n).collect());
        OrderedSetPartition { n: self.n, blocks }
    }

    /// The 1-based index of the block containing both i and i+1, if the pair
    /// is not separated by a cut.
    pub fn pair_block(&self, i: usize) -> Result<Option<usize>> {
        if i == 0 || i + 1 > self.n {
            return Err(Error::OutOfRange(format!("pair index {i} not in 1..{}", self.n)));
        }
        if self.cuts.contains(&i) {
            Ok(None)
        } else {
            Ok(Some(1 + self.cuts.iter().filter(|&&c| c < i).count()))
        }
    }
}

impl fmt::Display for IntervalCuts {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}]",
            self.cuts.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")
        )
    }
}

/// Preimage action of a permutation on a partition: block i of the result is
/// `w^{-1}(p_i)`.
pub fn apply_to_partition(
    w: &Permutation,
    p: &OrderedSetPartition,
) -> Result<OrderedSetPartition> {
    if w.n() != p.n() {
        return Err(Error::SizeMismatch(format!(
            "permutation on {} points applied to partition of {}",
            w.n(),
            p.n()
        )));
    }
    let winv = w.inverse();
    let blocks = p
        .blocks()
        .iter()
        .map(|b| {
            let mut nb: Vec<usize> = b.iter().map(|&x| winv.apply(x)).collect();
            nb.sort_unstable();
            nb
        })
        .collect();
    Ok(OrderedSetPartition { n: p.n(), blocks })
}

/// The canonical permutation w relabelling p to an interval partition with the
/// same block sizes: the sorted elements of block 1 map to `1..`, then block
/// 2's, and so on.  Conjugating p by w (preimages of w applied blockwise, i.e.
/// blocks `w(p_i)`) yields exactly the returned interval partition.
pub fn standardize(p: &OrderedSetPartition) -> (Permutation, IntervalCuts) {
    let n = p.n();
    let mut images = vec![0; n];
    let mut next = 1;
    let mut cuts = Vec::new();
    for block in p.blocks() {
        for &x in block {
            images[x - 1] = next;
            next += 1;
        }
        cuts.push(next - 1);
    }
    cuts.pop();
    let w = Permutation::new(images).expect("blockwise relabelling is a bijection");
    let spec = IntervalCuts::new(n, cuts).expect("prefix sums are valid cuts");
    (w, spec)
}

/// All ordered set partitions of `{1..n}`, ordered by first block (as a bit
/// mask, ascending), then recursively.
pub fn enumerate_partitions(n: usize) -> Result<Vec<OrderedSetPartition>> {
    if n == 0 || n > ENUMERATION_BOUND {
        return Err(Error::BoundExceeded(format!(
            "partition enumeration limited to 1 <= n <= {ENUMERATION_BOUND}, got {n}"
        )));
    }
    fn go(elems: &[usize], acc: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
        if elems.is_empty() {
            out.push(acc.clone());
            return;
        }
        for mask in 1u32..(1 << elems.len()) {
            let (mut first, mut rest) = (Vec::new(), Vec::new());
            for (k, &x) in elems.iter().enumerate() {
                if mask & (1 << k) != 0 {
                    first.push(x);
                } else {
                    rest.push(x);
                }
            }
            acc.push(first);
            go(&rest, acc, out);
            acc.pop();
        }
    }
    let elems: Vec<usize> = (1..=n).collect();
    let mut out = Vec::new();
    go(&elems, &mut Vec::new(), &mut out);
    Ok(out
        .into_iter()
        .map(|blocks| OrderedSetPartition::new(n, blocks).expect("generated blocks are valid"))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(n: usize, blocks: &[&[usize]]) -> OrderedSetPartition {
        OrderedSetPartition::new(n, blocks.iter().map(|b| b.to_vec()).collect()).unwrap()
    }

    #[test]
    fn validation_rejects_bad_blocks() {
        assert!(OrderedSetPartition::new(3, vec![vec![1, 2]]).is_err());
        assert!(OrderedSetPartition::new(3, vec![vec![1, 2], vec![2, 3]]).is_err());
        assert!(OrderedSetPartition::new(3, vec![vec![1, 2, 3], vec![]]).is_err());
        assert!(OrderedSetPartition::new(2, vec![vec![1], vec![2], vec![3]]).is_err());
    }

    #[test]
    fn product_small_cases() {
        // ({1,2},{3}) * ({1,3},{2}) = ({1},{2},{3},{}) with empties dropped:
        // j = {1,3}: {1,2}∩ = {1}, {3}∩ = {3}; j = {2}: {1,2}∩ = {2}.
        let a = p(3, &[&[1, 2], &[3]]);
        let b = p(3, &[&[1, 3], &[2]]);
        let ab = a.product(&b).unwrap();
        assert_eq!(ab, p(3, &[&[1], &[3], &[2]]));
        // one-block is the identity on both sides
        let full = OrderedSetPartition::one_block(3);
        assert_eq!(a.product(&full).unwrap(), a);
        assert_eq!(full.product(&a).unwrap(), a);
        // idempotent
        assert_eq!(a.product(&a).unwrap(), a);
    }

    #[test]
    fn product_is_associative_exhaustive_n3() {
        let all = enumerate_partitions(3).unwrap();
        for a in &all {
            for b in &all {
                let ab = a.product(b).unwrap();
                for c in &all {
                    let left = ab.product(c).unwrap();
                    let right = a.product(&b.product(c).unwrap()).unwrap();
                    assert_eq!(left, right, "({a} * {b}) * {c}");
                }
            }
        }
    }

    #[test]
    fn product_is_associative_exhaustive_n4() {
        let all = enumerate_partitions(4).unwrap();
        for a in &all {
            for b in &all {
                let ab = a.product(b).unwrap();
                for c in &all {
                    assert_eq!(
                        ab.product(c).unwrap(),
                        a.product(&b.product(c).unwrap()).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn apply_to_partition_takes_preimages() {
        let s1 = Permutation::new(vec![2, 1, 3]).unwrap();
        let q = p(3, &[&[1], &[2, 3]]);
        assert_eq!(apply_to_partition(&s1, &q).unwrap(), p(3, &[&[2], &[1, 3]]));
        // block count and sizes survive
        let w = Permutation::new(vec![3, 1, 2]).unwrap();
        let r = apply_to_partition(&w, &q).unwrap();
        assert_eq!(r.block_count(), 2);
        assert_eq!(r.blocks()[0].len(), 1);
    }

    #[test]
    fn interval_cuts_and_pair_block() {
        let c = IntervalCuts::new(3, vec![2]).unwrap();
        assert_eq!(c.to_partition(), p(3, &[&[1, 2], &[3]]));
        assert_eq!(c.pair_block(1).unwrap(), Some(1));
        assert_eq!(c.pair_block(2).unwrap(), None);
        assert!(c.pair_block(3).is_err());
        let full = IntervalCuts::new(4, vec![]).unwrap();
        assert_eq!(full.to_partition(), OrderedSetPartition::one_block(4));
        assert_eq!(full.pair_block(2).unwrap(), Some(1));
        assert!(IntervalCuts::new(3, vec![3]).is_err());
        assert!(IntervalCuts::new(3, vec![2, 2]).is_err());
    }

    #[test]
    fn standardize_examples_and_property() {
        let q = p(3, &[&[3], &[1, 2]]);
        let (w, spec) = standardize(&q);
        assert_eq!(w.images(), &[2, 3, 1]); // w(3)=1, w(1)=2, w(2)=3
        assert_eq!(spec.cuts(), &[1]);
        // relabelling property, exhaustively for n <= 4
        for n in 1..=4 {
            for q in enumerate_partitions(n).unwrap() {
                let (w, spec) = standardize(&q);
                let relabelled = OrderedSetPartition::new(
                    n,
                    q.blocks()
                        .iter()
                        .map(|b| b.iter().map(|&x| w.apply(x)).collect())
                        .collect(),
                )
                .unwrap();
                assert_eq!(relabelled, spec.to_partition(), "{q}");
            }
        }
    }

    #[test]
    fn display_round_trips() {
        for q in enumerate_partitions(4).unwrap() {
            let back: OrderedSetPartition = q.to_string().parse().unwrap();
            assert_eq!(back, q);
        }
        assert_eq!("({1,2},{3})".parse::<OrderedSetPartition>().unwrap(), p(3, &[&[1, 2], &[3]]));
        assert!("({1,2}".parse::<OrderedSetPartition>().is_err());
        assert!("({1},{1})".parse::<OrderedSetPartition>().is_err());
    }

    /// Oracle: number of ordered set partitions via the recursion
    /// a(n) = sum_k C(n,k) a(n-k), independent of the enumerator.
    #[test]
    fn enumeration_counts_match_recursive_oracle() {
        fn binom(n: usize, k: usize) -> u64 {
            let mut r = 1u64;
            for j in 0..k {
                r = r * (n - j) as u64 / (j + 1) as u64;
            }
            r
        }
        fn ordered_bell(n: usize) -> u64 {
            let mut a = vec![1u64; n + 1];
            for m in 1..=n {
                a[m] = (1..=m).map(|k| binom(m, k) * a[m - k]).sum();
            }
            a[n]
        }
        assert_eq!(
            (1..=4).map(ordered_bell).collect::<Vec<_>>(),
            vec![1, 3, 13, 75]
        );
        for n in 1..=5 {
            let listed = enumerate_partitions(n).unwrap();
            assert_eq!(listed.len() as u64, ordered_bell(n), "n = {n}");
            // and they are pairwise distinct
            let mut sorted = listed.clone();
            sorted.sort();
            sorted.dedup();
            assert_eq!(sorted.len(), listed.len());
        }
        assert!(enumerate_partitions(7).is_err());
    }

    fn arb_partition(n: usize) -> impl Strategy<Value = OrderedSetPartition> {
        (Just(n), proptest::collection::vec(any::<u32>(), n), any::<u32>()).prop_map(
            |(n, keys, cutmask)| {
                // random order via sort keys, random cuts via mask bits
                let mut elems: Vec<usize> = (1..=n).collect();
                elems.sort_by_key(|&x| keys[x - 1]);
                let mut blocks = vec![Vec::new()];
                for (k, x) in elems.into_iter().enumerate() {
                    blocks.last_mut().unwrap().push(x);
                    if k + 1 < n && cutmask & (1 << k) != 0 {
                        blocks.push(Vec::new());
                    }
                }
                OrderedSetPartition::new(n, blocks).unwrap()
            },
        )
    }

    proptest! {
        /// Associativity and identity on random partitions of 6 points.
        #[test]
        fn product_associative_random_n6(
            a in arb_partition(6),
            b in arb_partition(6),
            c in arb_partition(6),
        ) {
            let left = a.product(&b).unwrap().product(&c).unwrap();
            let right = a.product(&b.product(&c).unwrap()).unwrap();
            prop_assert_eq!(left, right);
            let full = OrderedSetPartition::one_block(6);
            prop_assert_eq!(a.product(&full).unwrap(), a.clone());
            prop_assert_eq!(full.product(&a).unwrap(), a);
        }
    }
}
