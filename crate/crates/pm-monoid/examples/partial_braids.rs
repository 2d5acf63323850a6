//! Layered partial braids: canonical forms, strand deletion under
//! composition, and the projection onto the partition-permutation monoid.

use pm_monoid::braid::{normalize, BraidWord, PMBraidWord, PartialBraid};

fn main() {
    // the braid relation: both words normalize to the same form
    let a = BraidWord::new(3, vec![1, 2, 1]).unwrap();
    let b = BraidWord::new(3, vec![2, 1, 2]).unwrap();
    println!("{a}  ->  {}", normalize(&a));
    println!("{b}  ->  {}", normalize(&b));
    assert_eq!(normalize(&a), normalize(&b));

    // a partial braid on points {1,3,4} of a four-point interface
    let w = BraidWord::new(3, vec![1, 2]).unwrap();
    let x = PartialBraid::new(4, vec![1, 3, 4], vec![2, 3, 4], &w).unwrap();
    println!("\npartial braid {x}");
    for p in [1, 3, 4] {
        println!("  strand {p} ends at {}", x.pairing(p).unwrap());
    }

    // composition keeps only strands that continue into the next piece
    let y = PartialBraid::identity_on(4, &[2, 3]).unwrap();
    match x.compose(&y).unwrap() {
        Some(z) => println!("composite with identity on {{2,3}}: {z}"),
        None => println!("no strands survive"),
    }

    // a word in signed crossings and separators evaluates to a layered
    // braid; forgetting the braiding projects onto the matched-pair monoid
    let word = PMBraidWord::parse(4, "s1 e[2] s2' s3").unwrap();
    let braid = word.evaluate().unwrap();
    println!("\n{word}  =  {braid}");
    println!("projection: {}", braid.project_to_r().unwrap());
}
