//! Enumerates the matched-pair monoid of permutations and ordered set
//! partitions for small n.

use pm_monoid::partition::enumerate_partitions;
use pm_monoid::rmonoid::enumerate_monoid;

fn main() {
    for n in 1..=4 {
        let partitions = enumerate_partitions(n).unwrap();
        let elements = enumerate_monoid(n).unwrap();
        println!("|P_{n}| = {:5}   |R_{n}| = {:5}", partitions.len(), elements.len());
    }

    // structure at n = 3: idempotents are the identity-permutation pairs,
    // units are the one-block permutation pairs
    let elements = enumerate_monoid(3).unwrap();
    let idempotents = elements.iter().filter(|e| e.is_idempotent()).count();
    let units = elements.iter().filter(|e| e.is_unit()).count();
    println!("\nn=3: {idempotents} idempotents, {units} units");
    for e in elements.iter().filter(|e| e.is_idempotent()) {
        println!("  idempotent {e}");
    }
}
