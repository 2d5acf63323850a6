//! Certifies that a sampled two-term family converges to the limit of
//! diag(1, t, t^2, t^3), and shows that a wrong candidate is rejected.

use num::{BigInt, BigRational, One, Zero};
use pm_monoid::matrix::{
    check_convergence, limit_of_family, MTerm, MatrixSequenceM, PolynomialMatrixFamily,
    RationalMatrix, Subspace,
};

/// diag(1, t, 0, 0) on the full space together with (e3 | t e4) on
/// span{e3, e4}.
fn sample(t: &BigRational) -> MatrixSequenceM {
    let mut b0 = RationalMatrix::zeros(4, 4);
    b0.set_entry(0, 0, BigRational::one());
    b0.set_entry(1, 1, t.clone());
    let mut b1 = RationalMatrix::zeros(4, 2);
    b1.set_entry(2, 0, BigRational::one());
    b1.set_entry(3, 1, t.clone());
    let span34 = Subspace::from_spanning(
        4,
        vec![
            vec![BigRational::zero(), BigRational::zero(), BigRational::one(), BigRational::zero()],
            vec![BigRational::zero(), BigRational::zero(), BigRational::zero(), BigRational::one()],
        ],
    )
    .unwrap();
    MatrixSequenceM::from_terms(
        4,
        vec![MTerm { domain: Subspace::full(4), map: b0 }, MTerm { domain: span34, map: b1 }],
    )
    .unwrap()
}

fn main() {
    let coefficients = (0..4)
        .map(|i| {
            let mut m = RationalMatrix::zeros(4, 4);
            m.set_entry(i, i, BigRational::one());
            m
        })
        .collect();
    let candidate =
        limit_of_family(&PolynomialMatrixFamily::new(4, coefficients).unwrap()).unwrap();

    let samples: Vec<(BigRational, MatrixSequenceM)> = (1..=6u32)
        .map(|k| {
            let t = BigRational::new(BigInt::one(), BigInt::from(10u64.pow(k)));
            let s = sample(&t);
            (t, s)
        })
        .collect();

    let report = check_convergence(&samples, &candidate, 1e-4).unwrap();
    println!("{report}");

    // swapping two candidate terms breaks the nesting of the domains, which
    // the certification reports as violations
    let mut terms = candidate.terms().to_vec();
    terms.swap(0, 1);
    let swapped = MatrixSequenceM::from_terms_unchecked(4, terms);
    let rejected = check_convergence(&samples, &swapped, 1e-4).unwrap();
    println!("\nswapped candidate:\n{rejected}");
    assert!(report.passed() && !rejected.passed());
}
