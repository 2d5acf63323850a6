//! The monomial matrix-sequence realization of the matched-pair monoid:
//! elements become sequences of monomial matrices and the product becomes
//! the term-selecting matrix product, up to projective scaling.

use pm_monoid::matrix::{m_to_json, realize_monomial, tilde_product, tilde_to_json, to_m};
use pm_monoid::rmonoid::RWord;

fn main() {
    let a = RWord::parse(3, "s1 e[2]").unwrap().evaluate();
    let b = RWord::parse(3, "s2").unwrap().evaluate();
    let ma = realize_monomial(&a);
    let mb = realize_monomial(&b);
    println!("element {a} realizes as:\n{}", tilde_to_json(&ma));

    let direct = realize_monomial(&a.product(&b).unwrap());
    let matrix_side = tilde_product(&ma, &mb).unwrap();
    assert!(direct.projective_equal(&matrix_side));
    println!("\nrealization of the product equals the product of realizations");
    println!("\nM-form of the product:\n{}", m_to_json(&to_m(&matrix_side).unwrap()));
}
