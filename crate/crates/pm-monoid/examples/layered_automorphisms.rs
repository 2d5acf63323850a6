//! The action of layered braids on layered automorphisms of a free group.
//!
//! Each layer acts on the free group generated by its surviving points; a
//! positive crossing at positions r, r+1 maps u_r to u_r u_{r+1} u_r^-1 and
//! u_{r+1} to u_r.  Stacking braids corresponds to composing actions, up to
//! a conjugation on each layer.

use pm_monoid::braid::PMBraidWord;
use pm_monoid::freeword::FreeWord;
use pm_monoid::layered::{
    artin_action, compose_layered, equivalent, verify_outer_action_homomorphism,
};
use pm_monoid::Config;

fn main() {
    let x = PMBraidWord::parse(3, "s1 s2").unwrap().evaluate().unwrap();
    let f = artin_action(&x).unwrap();
    println!("action of s1 s2:      {f}");

    // honest braids fix the boundary word exactly
    let boundary = FreeWord::new(3, vec![1, 2, 3]).unwrap();
    assert_eq!(f.apply(&boundary).unwrap(), boundary);
    println!("boundary word u1 u2 u3 is preserved");

    // separators split the action into layers and kill conjugators that
    // reference departed strands
    let y = PMBraidWord::parse(3, "s1 e[2] s2'").unwrap().evaluate().unwrap();
    let g = artin_action(&y).unwrap();
    println!("action of s1 e[2] s2': {g}");

    let composite = compose_layered(&f, &g).unwrap();
    let direct = artin_action(&x.product(&y).unwrap()).unwrap();
    assert!(equivalent(&direct, &composite).unwrap());
    println!("acting by the product agrees with composing the actions");

    let config = Config { samples: 300, ..Config::default() };
    let report = verify_outer_action_homomorphism(3, &config).unwrap();
    println!("{report}");
}
