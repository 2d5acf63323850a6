//! The limit of the matrix family diag(1, t, t^2, t^3) as t -> 0.
//!
//! Pointwise the family degenerates to diag(1, 0, 0, 0), but projectively
//! each scale carries its own information.  The limit object records, for a
//! nested flag of domains, the leading behavior of the family restricted to
//! each domain: here one term per coordinate axis.

use num::{BigInt, BigRational, One};
use pm_monoid::matrix::{limit_of_family, m_to_json, PolynomialMatrixFamily, RationalMatrix};

fn main() {
    let coefficients = (0..4)
        .map(|i| {
            let mut m = RationalMatrix::zeros(4, 4);
            m.set_entry(i, i, BigRational::one());
            m
        })
        .collect();
    let family = PolynomialMatrixFamily::new(4, coefficients).unwrap();

    let t = BigRational::new(BigInt::one(), BigInt::from(1000));
    println!("family at t=1/1000: diag entries");
    let at_t = family.evaluate(&t);
    for i in 0..4 {
        println!("  a_{}{} = {}", i + 1, i + 1, at_t.entry(i, i));
    }

    let limit = limit_of_family(&family).unwrap();
    println!("\nlimit has {} terms:", limit.terms().len());
    for (k, term) in limit.terms().iter().enumerate() {
        println!("  term {k}: domain of dimension {}", term.domain.dim());
    }
    println!("\nM-form serialization:\n{}", m_to_json(&limit));
}
