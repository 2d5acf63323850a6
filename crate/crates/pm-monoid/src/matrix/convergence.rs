//! Floating-point certification that a family of sampled sequences
//! approaches a candidate limit sequence.

use super::rational::RationalMatrix;
use super::sequence::MatrixSequenceM;
use crate::error::{Error, Result};
use crate::report::Violation;
use num::{BigRational, Signed};
use std::fmt;

/// Allowed growth factor between consecutive distances.
const MONOTONE_SLACK: f64 = 2.0;
/// Absolute slop protecting the slack test when distances are exactly zero.
const MONOTONE_EPS: f64 = 1e-12;

/// Distance between the projective points of two same-shaped nonzero real
/// matrices: the smaller Frobenius distance between their unit normalizations
/// over the two real signs.  Zero matrices are infinitely far from everything.
pub fn projective_distance(a: &RationalMatrix, b: &RationalMatrix) -> f64 {
    let (na, nb) = (a.frobenius(), b.frobenius());
    if na == 0.0 || nb == 0.0 {
        return f64::INFINITY;
    }
    let fa = a.to_f64();
    let fb = b.to_f64();
    let dist = |sign: f64| {
        fa.iter()
            .zip(&fb)
            .map(|(x, y)| {
                let d = x / na - sign * y / nb;
                d * d
            })
            .sum::<f64>()
            .sqrt()
    };
    dist(1.0).min(dist(-1.0))
}

/// Convergence data for one candidate term: the sample term index used and
/// the projective distance at every parameter value.
#[derive(Debug, Clone)]
pub struct TermConvergence {
    pub term: usize,
    pub distances: Vec<(BigRational, usize, f64)>,
    pub final_below_tol: bool,
    pub monotone_within_slack: bool,
}

/// Full outcome of a convergence check.
#[derive(Debug, Clone)]
pub struct ConvergenceReport {
    pub tol: f64,
    pub terms: Vec<TermConvergence>,
    pub violations: Vec<Violation>,
}

impl ConvergenceReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
            && self
                .terms
                .iter()
                .all(|t| t.final_below_tol && t.monotone_within_slack)
    }
}

impl fmt::Display for ConvergenceReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for t in &self.terms {
            write!(f, "term {}:", t.term)?;
            for (tv, j, d) in &t.distances {
                write!(f, " t={tv} j={j} d={d:.3e}")?;
            }
            writeln!(f)?;
            writeln!(
                f,
                "term {}: final < {:e}: {}; monotone within slack {}: {}",
                t.term,
                self.tol,
                if t.final_below_tol { "yes" } else { "no" },
                MONOTONE_SLACK,
                if t.monotone_within_slack { "yes" } else { "no" },
            )?;
        }
        for v in &self.violations {
            writeln!(f, "{v}")?;
        }
        write!(
            f,
            "convergence: {} ({} candidate terms)",
            if self.passed() { "PASS" } else { "FAIL" },
            self.terms.len()
        )
    }
}

/// Certifies that the sampled sequences approach the candidate as t decreases:
/// per candidate term, the sample term acting on the candidate domain must
/// stay projectively close and the distances must shrink.
///
/// Candidate invariant problems are reported, not raised, so deliberately
/// broken candidates surface as failed reports.
pub fn check_convergence(
    samples: &[(BigRational, MatrixSequenceM)],
    candidate: &MatrixSequenceM,
    tol: f64,
) -> Result<ConvergenceReport> {
    if !tol.is_finite() || tol <= 0.0 {
        return Err(Error::OutOfRange(format!("tolerance must be positive, got {tol}")));
    }
    if samples.is_empty() {
        return Err(Error::InvalidSequence("no samples given".into()));
    }
    for (t, s) in samples {
        if !t.is_positive() {
            return Err(Error::InvalidSequence(format!("sample parameter {t} is not positive")));
        }
        if s.dim() != candidate.dim() {
            return Err(Error::SizeMismatch(format!(
                "sample on Q^{} against candidate on Q^{}",
                s.dim(),
                candidate.dim()
            )));
        }
    }
    if samples.windows(2).any(|w| w[1].0 >= w[0].0) {
        return Err(Error::InvalidSequence(
            "sample parameters must be strictly decreasing".into(),
        ));
    }

    let mut violations: Vec<Violation> = candidate
        .validate()
        .into_iter()
        .map(|msg| Violation {
            kind: "candidate-invariant".into(),
            instance: "candidate".into(),
            detail: msg,
        })
        .collect();

    let mut terms = Vec::new();
    for (i, ct) in candidate.terms().iter().enumerate() {
        let mut distances = Vec::new();
        if ct.domain.is_zero() {
            violations.push(Violation {
                kind: "candidate-invariant".into(),
                instance: format!("term={i}"),
                detail: "zero candidate domain".into(),
            });
            terms.push(TermConvergence {
                term: i,
                distances,
                final_below_tol: false,
                monotone_within_slack: false,
            });
            continue;
        }
        for (t, sample) in samples {
            // Containing domains form a prefix of the sample's flag; the
            // largest one is the only term whose kernel misses the candidate
            // domain, hence the only nonzero restriction.
            let found = sample
                .terms()
                .iter()
                .rposition(|st| st.domain.contains_subspace(&ct.domain));
            let Some(j) = found else {
                violations.push(Violation {
                    kind: "neighborhood".into(),
                    instance: format!("t={t} term={i}"),
                    detail: "no sample domain contains the candidate domain".into(),
                });
                continue;
            };
            let st = &sample.terms()[j];
            let cols: Vec<Vec<BigRational>> = ct
                .domain
                .basis()
                .iter()
                .map(|v| {
                    let c = st.domain.coords(v).expect("containment just checked");
                    st.map.mul_vec(&c).expect("coordinate length matches")
                })
                .collect();
            let restriction = RationalMatrix::from_columns(&cols)?;
            if restriction.is_zero() {
                violations.push(Violation {
                    kind: "zero-restriction".into(),
                    instance: format!("t={t} term={i}"),
                    detail: format!("sample term {j} vanishes on the candidate domain"),
                });
                continue;
            }
            distances.push((t.clone(), j, projective_distance(&restriction, &ct.map)));
        }
        let final_below_tol = distances.last().is_some_and(|(_, _, d)| *d < tol);
        let monotone_within_slack = distances
            .windows(2)
            .all(|w| w[1].2 <= MONOTONE_SLACK * w[0].2 + MONOTONE_EPS);
        terms.push(TermConvergence { term: i, distances, final_below_tol, monotone_within_slack });
    }
    Ok(ConvergenceReport { tol, terms, violations })
}
