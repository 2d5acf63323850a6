//! End-to-end acceptance checks, one per headline capability.  Each test
//! prints a single PASS line on success; failures panic with context.

use num::{BigInt, BigRational, One, Zero};
use pm_monoid::braid::{PMBraid, PMBraidLetter, PMBraidWord};
use pm_monoid::freeword::FreeWord;
use pm_monoid::layered::{
    artin_action, compose_layered, equivalent, verify_outer_action_homomorphism,
};
use pm_monoid::matrix::{
    check_convergence, limit_of_family, realize_monomial, tilde_product, MTerm, MatrixSequenceM,
    PolynomialMatrixFamily, RationalMatrix, Subspace,
};
use pm_monoid::partition::enumerate_partitions;
use pm_monoid::rmonoid::{
    all_cut_specs, enumerate_monoid, verify_matched_pair_axioms, verify_presentation_relations,
    RElement,
};
use pm_monoid::{braid::verify_braid_relations, Config};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::HashSet;
use std::time::Instant;

fn diag_family() -> PolynomialMatrixFamily {
    let coefficients = (0..4)
        .map(|i| {
            let mut m = RationalMatrix::zeros(4, 4);
            m.set_entry(i, i, BigRational::one());
            m
        })
        .collect();
    PolynomialMatrixFamily::new(4, coefficients).unwrap()
}

fn coord_span(n: usize, coords: &[usize]) -> Subspace {
    Subspace::from_spanning(
        n,
        coords
            .iter()
            .map(|&i| {
                let mut v = vec![BigRational::zero(); n];
                v[i - 1] = BigRational::one();
                v
            })
            .collect(),
    )
    .unwrap()
}

fn bt_sample(t: &BigRational) -> MatrixSequenceM {
    let mut b0 = RationalMatrix::zeros(4, 4);
    b0.set_entry(0, 0, BigRational::one());
    b0.set_entry(1, 1, t.clone());
    let mut b1 = RationalMatrix::zeros(4, 2);
    b1.set_entry(2, 0, BigRational::one());
    b1.set_entry(3, 1, t.clone());
    MatrixSequenceM::from_terms(
        4,
        vec![
            MTerm { domain: Subspace::full(4), map: b0 },
            MTerm { domain: coord_span(4, &[3, 4]), map: b1 },
        ],
    )
    .unwrap()
}

fn random_braid(rng: &mut ChaCha8Rng, n: usize, max_len: usize) -> PMBraid {
    let len = rng.gen_range(0..=max_len);
    let letters = (0..len)
        .map(|_| {
            if n >= 2 && rng.gen_bool(0.75) {
                PMBraidLetter::S(rng.gen_range(1..n), rng.gen_bool(0.5))
            } else {
                PMBraidLetter::E((1..n).filter(|_| rng.gen_bool(0.3)).collect())
            }
        })
        .collect();
    PMBraidWord::new(n, letters).unwrap().evaluate().unwrap()
}

#[test]
fn criterion_1_diagonal_family_limit_is_the_four_term_sequence() {
    let family = diag_family();
    let start = Instant::now();
    let limit = limit_of_family(&family).unwrap();
    let elapsed = start.elapsed();
    // expected: term k acts on span{e_{k+1},..,e4} by projecting onto e_{k+1}
    let expected_terms: Vec<MTerm> = (0..4)
        .map(|k| {
            let coords: Vec<usize> = (k + 1..=4).collect();
            let mut map = RationalMatrix::zeros(4, 4 - k);
            map.set_entry(k, 0, BigRational::one());
            MTerm { domain: coord_span(4, &coords), map }
        })
        .collect();
    let expected = MatrixSequenceM::from_terms(4, expected_terms).unwrap();
    assert!(limit.projective_equal(&expected), "limit differs from the expected sequence");
    assert!(elapsed.as_secs_f64() < 1.0, "limit took {elapsed:?}");
    println!("PASS criterion 1: diagonal family limit reproduced in {elapsed:?}");
}

#[test]
fn criterion_2_sampled_family_converges_and_swapped_candidate_fails() {
    let start = Instant::now();
    let candidate = limit_of_family(&diag_family()).unwrap();
    let samples: Vec<(BigRational, MatrixSequenceM)> = (1..=6u32)
        .map(|k| {
            let t = BigRational::new(BigInt::one(), BigInt::from(10u64.pow(k)));
            let s = bt_sample(&t);
            (t, s)
        })
        .collect();
    let report = check_convergence(&samples, &candidate, 1e-4).unwrap();
    assert!(report.passed(), "{report}");
    // the four restrictions: terms 0 and 2 approach at rate t, terms 1 and 3
    // agree exactly at every sample
    for (term, expected_j) in [(0usize, 0usize), (1, 0), (2, 1), (3, 1)] {
        for (_, j, d) in &report.terms[term].distances {
            assert_eq!(*j, expected_j, "term {term} restricted to the wrong sample term");
            if term % 2 == 1 {
                assert_eq!(*d, 0.0, "term {term} should match exactly");
            }
        }
    }
    let mut terms = candidate.terms().to_vec();
    terms.swap(0, 1);
    let swapped = MatrixSequenceM::from_terms_unchecked(4, terms);
    let rejected = check_convergence(&samples, &swapped, 1e-4).unwrap();
    assert!(!rejected.passed(), "swapped candidate unexpectedly accepted");
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 1.0, "convergence checks took {elapsed:?}");
    println!("PASS criterion 2: sampled convergence certified, swapped candidate rejected ({elapsed:?})");
}

#[test]
fn criterion_3_cardinalities_match_on_both_routes() {
    let start = Instant::now();
    let expected_p = [1usize, 3, 13, 75];
    let expected_r = [1usize, 6, 78, 1800];
    for n in 1..=4usize {
        let partitions = enumerate_partitions(n).unwrap();
        assert_eq!(partitions.len(), expected_p[n - 1], "|P_{n}|");
        // route 1: direct product enumeration
        let direct = enumerate_monoid(n).unwrap();
        assert_eq!(direct.len(), expected_r[n - 1], "|R_{n}| by direct enumeration");
        // route 2: closure of the generators under the product
        let mut generators = vec![RElement::identity(n)];
        for i in 1..n {
            generators.push(RElement::generator_s(i, n).unwrap());
        }
        for spec in all_cut_specs(n).unwrap() {
            generators.push(RElement::generator_e(&spec));
        }
        let mut seen: HashSet<RElement> = generators.iter().cloned().collect();
        let mut frontier: Vec<RElement> = seen.iter().cloned().collect();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for a in &frontier {
                for g in &generators {
                    let p = a.product(g).unwrap();
                    if seen.insert(p.clone()) {
                        next.push(p);
                    }
                }
            }
            frontier = next;
        }
        assert_eq!(seen.len(), expected_r[n - 1], "|R_{n}| by generator closure");
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 30, "cardinalities took {elapsed:?}");
    println!("PASS criterion 3: |P_n|=1,3,13,75 and |R_n|=1,6,78,1800 on both routes ({elapsed:?})");
}

#[test]
fn criterion_4_matched_pair_axioms_hold_exhaustively() {
    let start = Instant::now();
    for n in 1..=4usize {
        let report = verify_matched_pair_axioms(n).unwrap();
        assert!(report.passed(), "{report}");
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 60, "axiom sweep took {elapsed:?}");
    println!("PASS criterion 4: matched-pair axioms hold for n <= 4 ({elapsed:?})");
}

#[test]
fn criterion_5_presentation_relations_hold_in_both_models() {
    let start = Instant::now();
    let config = Config::default();
    for n in 1..=4usize {
        let report = verify_presentation_relations(n, &config).unwrap();
        assert!(report.passed(), "{report}");
    }
    for n in 1..=3usize {
        let report = verify_braid_relations(n, &config).unwrap();
        assert!(report.passed(), "{report}");
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 300, "relation suites took {elapsed:?}");
    println!("PASS criterion 5: defining relations hold in both models ({elapsed:?})");
}

#[test]
fn criterion_6_monomial_realization_is_a_homomorphism() {
    let start = Instant::now();
    let elements = enumerate_monoid(3).unwrap();
    let realized: Vec<_> = elements.iter().map(realize_monomial).collect();
    let mut checked = 0u64;
    for (a, ma) in elements.iter().zip(&realized) {
        for (b, mb) in elements.iter().zip(&realized) {
            let direct = realize_monomial(&a.product(b).unwrap());
            let matrix_side = tilde_product(ma, mb).unwrap();
            assert!(
                direct.projective_equal(&matrix_side),
                "realization mismatch at a={a} b={b}"
            );
            checked += 1;
        }
    }
    assert_eq!(checked, 78 * 78);
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 120, "realization sweep took {elapsed:?}");
    println!("PASS criterion 6: monomial realization is a homomorphism on all 78x78 products ({elapsed:?})");
}

#[test]
fn criterion_7_projection_to_the_matched_pair_monoid_is_a_homomorphism() {
    let start = Instant::now();
    for n in 1..=4usize {
        let mut rng = ChaCha8Rng::seed_from_u64(70 + n as u64);
        for _ in 0..1000 {
            let x = random_braid(&mut rng, n, 6);
            let y = random_braid(&mut rng, n, 6);
            let lhs = x.product(&y).unwrap().project_to_r().unwrap();
            let rhs = x.project_to_r().unwrap().product(&y.project_to_r().unwrap()).unwrap();
            assert_eq!(lhs, rhs, "projection mismatch at n={n} x={x} y={y}");
        }
    }
    let elapsed = start.elapsed();
    println!("PASS criterion 7: braid-to-monoid projection respects 1000 random products per n <= 4 ({elapsed:?})");
}

#[test]
fn criterion_8_braid_action_on_automorphisms_is_a_homomorphism() {
    let start = Instant::now();
    let config = Config { samples: 1000, seed: 80, ..Config::default() };
    let report = verify_outer_action_homomorphism(3, &config).unwrap();
    assert!(report.passed(), "{report}");
    assert_eq!(report.checked, 1000);
    // full-layer braids preserve the boundary word exactly
    let mut rng = ChaCha8Rng::seed_from_u64(81);
    let boundary = FreeWord::new(3, vec![1, 2, 3]).unwrap();
    for _ in 0..300 {
        let len = rng.gen_range(0..=8usize);
        let letters = (0..len)
            .map(|_| PMBraidLetter::S(rng.gen_range(1..3), rng.gen_bool(0.5)))
            .collect();
        let x = PMBraidWord::new(3, letters).unwrap().evaluate().unwrap();
        let f = artin_action(&x).unwrap();
        assert_eq!(f.apply(&boundary).unwrap(), boundary, "boundary moved under {x}");
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 120, "action suite took {elapsed:?}");
    println!("PASS criterion 8: braid action is a homomorphism and fixes the boundary word ({elapsed:?})");
}

#[test]
fn criterion_9_associativity_on_every_level() {
    let start = Instant::now();
    // exhaustive on the matched-pair monoid at n=3
    let elements = enumerate_monoid(3).unwrap();
    for a in &elements {
        for b in &elements {
            let ab = a.product(b).unwrap();
            for c in &elements {
                let left = ab.product(c).unwrap();
                let right = a.product(&b.product(c).unwrap()).unwrap();
                assert_eq!(left, right, "associativity fails at ({a})({b})({c})");
            }
        }
    }
    // randomized for matrix sequences, braids, and automorphisms
    let mut rng = ChaCha8Rng::seed_from_u64(82);
    for _ in 0..1000 {
        let pick = |rng: &mut ChaCha8Rng| elements[rng.gen_range(0..elements.len())].clone();
        let (a, b, c) = (pick(&mut rng), pick(&mut rng), pick(&mut rng));
        let (ma, mb, mc) = (realize_monomial(&a), realize_monomial(&b), realize_monomial(&c));
        let left = tilde_product(&tilde_product(&ma, &mb).unwrap(), &mc).unwrap();
        let right = tilde_product(&ma, &tilde_product(&mb, &mc).unwrap()).unwrap();
        assert!(left.projective_equal(&right), "matrix associativity fails");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(83);
    for _ in 0..1000 {
        let a = random_braid(&mut rng, 3, 5);
        let b = random_braid(&mut rng, 3, 5);
        let c = random_braid(&mut rng, 3, 5);
        let left = a.product(&b).unwrap().product(&c).unwrap();
        let right = a.product(&b.product(&c).unwrap()).unwrap();
        assert_eq!(left, right, "braid associativity fails at ({a})({b})({c})");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(84);
    for _ in 0..1000 {
        let f = artin_action(&random_braid(&mut rng, 3, 4)).unwrap();
        let g = artin_action(&random_braid(&mut rng, 3, 4)).unwrap();
        let h = artin_action(&random_braid(&mut rng, 3, 4)).unwrap();
        let left = compose_layered(&compose_layered(&f, &g).unwrap(), &h).unwrap();
        let right = compose_layered(&f, &compose_layered(&g, &h).unwrap()).unwrap();
        assert!(equivalent(&left, &right).unwrap(), "composition associativity fails");
    }
    let elapsed = start.elapsed();
    println!("PASS criterion 9: associativity holds exhaustively and on random triples ({elapsed:?})");
}
