//! Runs the matched-pair axiom suite: the permutation action on partitions
//! and the trivial partition action on permutations satisfy the eight
//! compatibility identities that make the product associative.

use pm_monoid::rmonoid::verify_matched_pair_axioms;

fn main() {
    for n in 1..=4 {
        let report = verify_matched_pair_axioms(n).unwrap();
        println!("{report}");
        assert!(report.passed());
    }
}
