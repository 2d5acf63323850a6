//! Left-greedy normal forms for braid words: two words get the same normal
//! form exactly when they represent the same braid group element.

use super::word::BraidWord;
use crate::perm::Permutation;
use std::collections::BTreeSet;
use std::fmt;

/// A braid group element as delta^p A_1 ... A_m with each A_i a permutation
/// braid (stored by its strand trace), no factor trivial or a half twist,
/// and consecutive factors left-weighted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidNormalForm {
    strands: usize,
    delta_power: i64,
    factors: Vec<Permutation>,
}

/// The half twist trace: the order-reversing permutation.
fn half_twist(k: usize) -> Permutation {
    Permutation::new((1..=k).rev().collect()).expect("reversal is a bijection")
}

/// Positions i with t(i) > t(i+1).  A permutation braid can start with the
/// crossing at position i exactly when i is a descent of its trace.
fn descents(t: &Permutation) -> BTreeSet<usize> {
    (1..t.n()).filter(|&i| t.apply(i) > t.apply(i + 1)).collect()
}

fn starting_set(t: &Permutation) -> BTreeSet<usize> {
    descents(t)
}

fn finishing_set(t: &Permutation) -> BTreeSet<usize> {
    descents(&t.inverse())
}

/// Conjugation by the half twist: the effect of moving a permutation braid
/// past one delta.
fn flip(t: &Permutation, w0: &Permutation) -> Permutation {
    w0.compose(t).and_then(|x| x.compose(w0)).expect("same strand count")
}

/// Greedy positive word for a permutation braid, first letter first.
fn simple_word(t: &Permutation) -> Vec<usize> {
    let mut current = t.clone();
    let mut letters = Vec::new();
    while let Some(&i) = descents(&current).iter().next() {
        letters.push(i);
        let p = Permutation::transposition(current.n(), i).expect("descent in range");
        current = current.compose(&p).expect("same strand count");
    }
    letters
}

pub fn normalize(word: &BraidWord) -> BraidNormalForm {
    let k = word.strands();
    let w0 = half_twist(k);
    let mut delta_power: i64 = 0;
    let mut factors: Vec<Permutation> = Vec::new();
    for &l in word.letters() {
        let i = l.unsigned_abs() as usize;
        let p = Permutation::transposition(k, i).expect("validated letter");
        if l > 0 {
            factors.push(p);
        } else {
            // sigma_i^-1 = delta^-1 (delta sigma_i^-1); pushing the new
            // delta^-1 to the front flips every factor collected so far
            delta_power -= 1;
            for f in factors.iter_mut() {
                *f = flip(f, &w0);
            }
            let s = p.compose(&w0).expect("same strand count");
            if !s.is_identity() {
                factors.push(s);
            }
        }
    }

    // left-weight adjacent factors until stable: slide any crossing that can
    // start the right factor and extend the left one
    loop {
        let mut changed = false;
        factors.retain(|f| !f.is_identity());
        let mut j = 0;
        while j + 1 < factors.len() {
            loop {
                let need: Vec<usize> = starting_set(&factors[j + 1])
                    .difference(&finishing_set(&factors[j]))
                    .copied()
                    .collect();
                let Some(&i) = need.first() else { break };
                let p = Permutation::transposition(k, i).expect("in range");
                factors[j] = p.compose(&factors[j]).expect("same strand count");
                factors[j + 1] = factors[j + 1].compose(&p).expect("same strand count");
                changed = true;
            }
            j += 1;
        }
        if !changed {
            break;
        }
    }
    factors.retain(|f| !f.is_identity());
    while factors.first() == Some(&w0) {
        factors.remove(0);
        delta_power += 1;
    }
    BraidNormalForm { strands: k, delta_power, factors }
}

impl BraidNormalForm {
    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn delta_power(&self) -> i64 {
        self.delta_power
    }

    pub fn factors(&self) -> &[Permutation] {
        &self.factors
    }

    pub fn is_identity(&self) -> bool {
        self.delta_power == 0 && self.factors.is_empty()
    }

    /// Strand trace of the whole element.
    pub fn eval_permutation(&self) -> Permutation {
        let w0 = half_twist(self.strands);
        let mut t = if self.delta_power.rem_euclid(2) == 1 {
            w0
        } else {
            Permutation::identity(self.strands)
        };
        for f in &self.factors {
            t = f.compose(&t).expect("same strand count");
        }
        t
    }

    /// The canonical word: delta letters first, then each factor's greedy word.
    pub fn to_word(&self) -> BraidWord {
        let w0 = half_twist(self.strands);
        let delta_word = simple_word(&w0);
        let mut letters: Vec<i32> = Vec::new();
        if self.delta_power >= 0 {
            for _ in 0..self.delta_power {
                letters.extend(delta_word.iter().map(|&i| i as i32));
            }
        } else {
            for _ in 0..(-self.delta_power) {
                letters.extend(delta_word.iter().rev().map(|&i| -(i as i32)));
            }
        }
        for f in &self.factors {
            letters.extend(simple_word(f).iter().map(|&i| i as i32));
        }
        BraidWord::new(self.strands, letters).expect("letters are generator indices")
    }
}

impl fmt::Display for BraidNormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D^{}", self.delta_power)?;
        for t in &self.factors {
            write!(f, " {t}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn word(k: usize, letters: &[i32]) -> BraidWord {
        BraidWord::new(k, letters.to_vec()).unwrap()
    }

    fn rand_word(rng: &mut ChaCha8Rng, k: usize, len: usize) -> BraidWord {
        let letters = (0..len)
            .map(|_| {
                let i = rng.gen_range(1..k) as i32;
                if rng.gen_bool(0.5) {
                    i
                } else {
                    -i
                }
            })
            .collect();
        BraidWord::new(k, letters).unwrap()
    }

    #[test]
    fn free_cancellation_gives_the_identity_form() {
        for k in 2..=5 {
            assert!(normalize(&word(k, &[1, -1])).is_identity());
            assert!(normalize(&word(k, &[-1, 1])).is_identity());
            assert!(normalize(&BraidWord::empty(k)).is_identity());
        }
    }

    #[test]
    fn braid_and_commutation_relations_hold() {
        assert_eq!(normalize(&word(3, &[1, 2, 1])), normalize(&word(3, &[2, 1, 2])));
        assert_eq!(normalize(&word(4, &[1, 3])), normalize(&word(4, &[3, 1])));
        assert_eq!(normalize(&word(4, &[-1, 3])), normalize(&word(4, &[3, -1])));
    }

    #[test]
    fn distinct_elements_get_distinct_forms() {
        assert_ne!(normalize(&word(3, &[1])), normalize(&word(3, &[2])));
        assert_ne!(normalize(&word(3, &[1])), normalize(&word(3, &[-1])));
        assert_ne!(normalize(&word(3, &[1, 2])), normalize(&word(3, &[2, 1])));
        assert!(!normalize(&word(3, &[1])).is_identity());
    }

    #[test]
    fn negative_generator_form_is_a_flipped_simple() {
        let nf = normalize(&word(3, &[-1]));
        assert_eq!(nf.delta_power(), -1);
        assert_eq!(nf.factors().len(), 1);
        assert_eq!(nf.eval_permutation().images(), &[2, 1, 3]);
    }

    #[test]
    fn random_insertions_do_not_change_the_form() {
        let mut rng = ChaCha8Rng::seed_from_u64(43);
        for _ in 0..1000 {
            let k = rng.gen_range(2..=5usize);
            let w_len = rng.gen_range(0..=8);
            let w = rand_word(&mut rng, k, w_len);
            let r_len = rng.gen_range(1..=4);
            let r = rand_word(&mut rng, k, r_len);
            let pos = rng.gen_range(0..=w.letters().len());
            let mut letters = w.letters()[..pos].to_vec();
            letters.extend(r.letters());
            letters.extend(r.inverse().letters());
            letters.extend(&w.letters()[pos..]);
            let padded = BraidWord::new(k, letters).unwrap();
            assert_eq!(normalize(&w), normalize(&padded), "w={w} r={r}");
        }
    }

    #[test]
    fn trace_of_the_form_matches_the_word_trace() {
        let mut rng = ChaCha8Rng::seed_from_u64(44);
        for _ in 0..400 {
            let k = rng.gen_range(2..=5usize);
            let w_len = rng.gen_range(0..=8);
            let w = rand_word(&mut rng, k, w_len);
            assert_eq!(normalize(&w).eval_permutation(), w.trace_permutation(), "w={w}");
        }
    }

    #[test]
    fn canonical_words_are_fixed_points() {
        let mut rng = ChaCha8Rng::seed_from_u64(45);
        for _ in 0..400 {
            let k = rng.gen_range(2..=5usize);
            let w_len = rng.gen_range(0..=8);
            let w = rand_word(&mut rng, k, w_len);
            let nf = normalize(&w);
            assert_eq!(normalize(&nf.to_word()), nf, "w={w}");
        }
    }

    #[test]
    fn left_weighted_invariant_holds() {
        let mut rng = ChaCha8Rng::seed_from_u64(46);
        let w0 = half_twist(4);
        for _ in 0..300 {
            let w_len = rng.gen_range(0..=10);
            let w = rand_word(&mut rng, 4, w_len);
            let nf = normalize(&w);
            for f in nf.factors() {
                assert!(!f.is_identity());
                assert_ne!(*f, w0);
            }
            for pair in nf.factors().windows(2) {
                assert!(
                    starting_set(&pair[1]).is_subset(&finishing_set(&pair[0])),
                    "not left weighted for w={w}"
                );
            }
        }
    }
}
