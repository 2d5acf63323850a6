//! Checks the defining relations of the presented monoid in both models:
//! the matched-pair model on (permutation, partition) pairs and the layered
//! partial-braid model.
//!
//! Relation schemas involving arbitrary words are instantiated up to the
//! configured word-length bound.

use pm_monoid::braid::verify_braid_relations;
use pm_monoid::rmonoid::verify_presentation_relations;
use pm_monoid::Config;

fn main() {
    let config = Config::default();
    for n in 1..=3 {
        let r = verify_presentation_relations(n, &config).unwrap();
        println!("n={n} {r}");
        assert!(r.passed());
    }
    for n in 1..=3 {
        let b = verify_braid_relations(n, &config).unwrap();
        println!("n={n} {b}");
        assert!(b.passed());
    }
}
