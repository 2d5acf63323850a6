//! JSON readers and writers for matrix families, term sequences, and
//! sampled convergence data.
//!
//! Entries are exact: JSON integers or "p/q" strings.  Floating point
//! numbers are rejected so no precision is lost silently.

use super::rational::{format_rational, parse_rational, RationalMatrix};
use super::sequence::{MTerm, MatrixSequenceM, MatrixSequenceTilde, PolynomialMatrixFamily};
use super::subspace::Subspace;
use crate::error::{Error, Result};
use num::{BigRational, ToPrimitive};
use serde_json::{json, Map, Value};

fn parse_root(text: &str) -> Result<Map<String, Value>> {
    let v: Value = serde_json::from_str(text)
        .map_err(|e| Error::Parse(format!("invalid JSON: {e}")))?;
    match v {
        Value::Object(m) => Ok(m),
        _ => Err(Error::Parse("top level value must be an object".into())),
    }
}

fn get<'a>(obj: &'a Map<String, Value>, key: &str) -> Result<&'a Value> {
    obj.get(key)
        .ok_or_else(|| Error::Parse(format!("missing key \"{key}\"")))
}

fn get_dim(obj: &Map<String, Value>) -> Result<usize> {
    get(obj, "dim")?
        .as_u64()
        .and_then(|d| usize::try_from(d).ok())
        .filter(|&d| d > 0)
        .ok_or_else(|| Error::Parse("\"dim\" must be a positive integer".into()))
}

fn get_array<'a>(obj: &'a Map<String, Value>, key: &str) -> Result<&'a Vec<Value>> {
    get(obj, key)?
        .as_array()
        .ok_or_else(|| Error::Parse(format!("\"{key}\" must be an array")))
}

fn entry_to_rational(v: &Value) -> Result<BigRational> {
    match v {
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(BigRational::from_integer(i.into()))
            } else if let Some(u) = n.as_u64() {
                Ok(BigRational::from_integer(u.into()))
            } else {
                Err(Error::Parse(format!(
                    "floating point entry {n} is not accepted; use an integer or a \"p/q\" string"
                )))
            }
        }
        Value::String(s) => parse_rational(s),
        other => Err(Error::Parse(format!("cannot read {other} as a rational entry"))),
    }
}

fn rational_to_value(x: &BigRational) -> Value {
    if x.is_integer() {
        if let Some(i) = x.numer().to_i64() {
            return json!(i);
        }
    }
    json!(format_rational(x))
}

fn value_to_vector(v: &Value, what: &str) -> Result<Vec<BigRational>> {
    v.as_array()
        .ok_or_else(|| Error::Parse(format!("{what} must be an array of entries")))?
        .iter()
        .map(entry_to_rational)
        .collect()
}

fn value_to_matrix(v: &Value, what: &str) -> Result<RationalMatrix> {
    let rows = v
        .as_array()
        .ok_or_else(|| Error::Parse(format!("{what} must be an array of rows")))?
        .iter()
        .map(|row| value_to_vector(row, "each row"))
        .collect::<Result<Vec<_>>>()?;
    RationalMatrix::new(rows)
}

fn matrix_to_value(m: &RationalMatrix) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|r| {
                Value::Array((0..m.cols()).map(|c| rational_to_value(m.entry(r, c))).collect())
            })
            .collect(),
    )
}

fn value_to_term(v: &Value, dim: usize) -> Result<MTerm> {
    let obj = v
        .as_object()
        .ok_or_else(|| Error::Parse("each term must be an object with \"domain\" and \"map\"".into()))?;
    let vectors = get(obj, "domain")?
        .as_array()
        .ok_or_else(|| Error::Parse("\"domain\" must be an array of basis vectors".into()))?
        .iter()
        .map(|w| value_to_vector(w, "each domain vector"))
        .collect::<Result<Vec<_>>>()?;
    for w in &vectors {
        if w.len() != dim {
            return Err(Error::Parse(format!(
                "domain vector has length {} in dimension {dim}",
                w.len()
            )));
        }
    }
    let domain = Subspace::from_spanning(dim, vectors)?;
    let map = value_to_matrix(get(obj, "map")?, "\"map\"")?;
    Ok(MTerm { domain, map })
}

fn term_to_value(t: &MTerm) -> Value {
    json!({
        "domain": t.domain.basis().iter()
            .map(|v| Value::Array(v.iter().map(rational_to_value).collect()))
            .collect::<Vec<_>>(),
        "map": matrix_to_value(&t.map),
    })
}

/// Reads a polynomial family {"dim", "coefficients": [matrix, ...]}.
pub fn parse_family(text: &str) -> Result<PolynomialMatrixFamily> {
    let obj = parse_root(text)?;
    let dim = get_dim(&obj)?;
    let coefficients = get_array(&obj, "coefficients")?
        .iter()
        .map(|m| value_to_matrix(m, "each coefficient"))
        .collect::<Result<Vec<_>>>()?;
    PolynomialMatrixFamily::new(dim, coefficients)
}

pub fn family_to_json(f: &PolynomialMatrixFamily) -> String {
    let v = json!({
        "dim": f.dim(),
        "coefficients": f.coefficients().iter().map(matrix_to_value).collect::<Vec<_>>(),
    });
    serde_json::to_string_pretty(&v).expect("serialization cannot fail")
}

/// Reads a term sequence {"dim", "terms": [{"domain", "map"}, ...]} without
/// enforcing the kernel chain, so downstream checks can report on bad input.
pub fn parse_m_unchecked(text: &str) -> Result<MatrixSequenceM> {
    let obj = parse_root(text)?;
    let dim = get_dim(&obj)?;
    let terms = get_array(&obj, "terms")?
        .iter()
        .map(|t| value_to_term(t, dim))
        .collect::<Result<Vec<_>>>()?;
    Ok(MatrixSequenceM::from_terms_unchecked(dim, terms))
}

/// Reads a term sequence and enforces all structural invariants.
pub fn parse_m(text: &str) -> Result<MatrixSequenceM> {
    let raw = parse_m_unchecked(text)?;
    MatrixSequenceM::from_terms(raw.dim(), raw.terms().to_vec())
}

pub fn m_to_json(m: &MatrixSequenceM) -> String {
    let v = json!({
        "dim": m.dim(),
        "terms": m.terms().iter().map(term_to_value).collect::<Vec<_>>(),
    });
    serde_json::to_string_pretty(&v).expect("serialization cannot fail")
}

/// Reads a square-term sequence {"dim", "terms": [matrix, ...]}.
pub fn parse_tilde(text: &str) -> Result<MatrixSequenceTilde> {
    let obj = parse_root(text)?;
    let dim = get_dim(&obj)?;
    let terms = get_array(&obj, "terms")?
        .iter()
        .map(|m| value_to_matrix(m, "each term"))
        .collect::<Result<Vec<_>>>()?;
    MatrixSequenceTilde::from_terms(dim, terms)
}

pub fn tilde_to_json(m: &MatrixSequenceTilde) -> String {
    let v = json!({
        "dim": m.dim(),
        "terms": m.terms().iter().map(matrix_to_value).collect::<Vec<_>>(),
    });
    serde_json::to_string_pretty(&v).expect("serialization cannot fail")
}

/// Reads sampled sequences {"dim", "samples": [{"t", "terms"}, ...]}.
/// Every sample must satisfy the term sequence invariants.
pub fn parse_samples(text: &str) -> Result<Vec<(BigRational, MatrixSequenceM)>> {
    let obj = parse_root(text)?;
    let dim = get_dim(&obj)?;
    get_array(&obj, "samples")?
        .iter()
        .map(|s| {
            let sobj = s
                .as_object()
                .ok_or_else(|| Error::Parse("each sample must be an object with \"t\" and \"terms\"".into()))?;
            let t = entry_to_rational(get(sobj, "t")?)?;
            let terms = get(sobj, "terms")?
                .as_array()
                .ok_or_else(|| Error::Parse("\"terms\" must be an array".into()))?
                .iter()
                .map(|v| value_to_term(v, dim))
                .collect::<Result<Vec<_>>>()?;
            Ok((t, MatrixSequenceM::from_terms(dim, terms)?))
        })
        .collect()
}

pub fn samples_to_json(samples: &[(BigRational, MatrixSequenceM)]) -> String {
    let dim = samples.first().map_or(0, |(_, m)| m.dim());
    let v = json!({
        "dim": dim,
        "samples": samples.iter().map(|(t, m)| json!({
            "t": rational_to_value(t),
            "terms": m.terms().iter().map(term_to_value).collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
    });
    serde_json::to_string_pretty(&v).expect("serialization cannot fail")
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::{One, Zero};

    fn diag_family_json() -> String {
        r#"{
            "dim": 2,
            "coefficients": [
                [[1, 0], [0, 0]],
                [[0, 0], [0, "1/3"]]
            ]
        }"#
        .to_string()
    }

    #[test]
    fn family_round_trips() {
        let f = parse_family(&diag_family_json()).unwrap();
        assert_eq!(f.dim(), 2);
        assert_eq!(f.coefficients().len(), 2);
        assert_eq!(
            *f.coefficients()[1].entry(1, 1),
            BigRational::new(1.into(), 3.into())
        );
        let again = parse_family(&family_to_json(&f)).unwrap();
        assert_eq!(f.coefficients(), again.coefficients());
    }

    #[test]
    fn floats_are_rejected() {
        let bad = r#"{"dim": 1, "coefficients": [[[0.5]]]}"#;
        let err = parse_family(bad).unwrap_err();
        assert!(err.to_string().contains("floating point"), "{err}");
    }

    #[test]
    fn malformed_documents_are_rejected() {
        assert!(parse_family("[1, 2]").is_err());
        assert!(parse_family(r#"{"coefficients": []}"#).is_err());
        assert!(parse_family(r#"{"dim": 0, "coefficients": [[[1]]]}"#).is_err());
        assert!(parse_family(r#"{"dim": 2, "coefficients": 5}"#).is_err());
        assert!(parse_m(r#"{"dim": 2, "terms": [{"domain": [[1]], "map": [[1],[0]]}]}"#).is_err());
        assert!(parse_tilde(r#"{"dim": 2, "terms": [[[1, 0], [0, tru]]]}"#).is_err());
    }

    #[test]
    fn m_sequences_round_trip() {
        let f = parse_family(&diag_family_json()).unwrap();
        let limit = crate::matrix::sequence::limit_of_family(&f).unwrap();
        let text = m_to_json(&limit);
        let back = parse_m(&text).unwrap();
        assert_eq!(limit.dim(), back.dim());
        assert_eq!(limit.terms().len(), back.terms().len());
        for (a, b) in limit.terms().iter().zip(back.terms()) {
            assert_eq!(a.domain, b.domain);
            assert_eq!(a.map, b.map);
        }
    }

    #[test]
    fn unchecked_parse_accepts_what_checked_parse_rejects() {
        // term 1 domain is not the kernel of term 0
        let text = r#"{
            "dim": 2,
            "terms": [
                {"domain": [[1, 0], [0, 1]], "map": [[1, 0], [0, 0]]},
                {"domain": [[1, 0]], "map": [[1], [0]]}
            ]
        }"#;
        assert!(parse_m(text).is_err());
        let raw = parse_m_unchecked(text).unwrap();
        assert_eq!(raw.terms().len(), 2);
        assert!(!raw.validate().is_empty());
    }

    #[test]
    fn tilde_round_trips() {
        let t = MatrixSequenceTilde::from_terms(
            2,
            vec![
                RationalMatrix::from_i64_rows(&[&[1, 0], &[0, 0]]),
                RationalMatrix::from_i64_rows(&[&[0, 0], &[0, 1]]),
            ],
        )
        .unwrap();
        let back = parse_tilde(&tilde_to_json(&t)).unwrap();
        assert_eq!(t.terms(), back.terms());
    }

    #[test]
    fn samples_round_trip_and_are_validated() {
        let f = parse_family(&diag_family_json()).unwrap();
        let samples: Vec<(BigRational, MatrixSequenceM)> = (1..=3)
            .map(|k| {
                let t = BigRational::new(1.into(), num::BigInt::from(10i64.pow(k)));
                let m = MatrixSequenceM::from_terms(
                    2,
                    vec![MTerm { domain: Subspace::full(2), map: f.evaluate(&t) }],
                )
                .unwrap();
                (t, m)
            })
            .collect();
        let text = samples_to_json(&samples);
        let back = parse_samples(&text).unwrap();
        assert_eq!(back.len(), 3);
        for ((t1, m1), (t2, m2)) in samples.iter().zip(&back) {
            assert_eq!(t1, t2);
            assert_eq!(m1.terms()[0].map, m2.terms()[0].map);
        }
        // invalid sample sequences fail at load
        let bad = r#"{
            "dim": 2,
            "samples": [
                {"t": "1/10", "terms": [{"domain": [[1, 0]], "map": [[1], [0]]}]}
            ]
        }"#;
        assert!(parse_samples(bad).is_err());
    }

    #[test]
    fn big_and_negative_entries_survive() {
        let huge = BigRational::from_integer("123456789012345678901234567890".parse().unwrap());
        let m = RationalMatrix::new(vec![vec![huge.clone(), -BigRational::one()]]).unwrap();
        let v = matrix_to_value(&m);
        let back = value_to_matrix(&v, "m").unwrap();
        assert_eq!(*back.entry(0, 0), huge);
        assert_eq!(*back.entry(0, 1), -BigRational::one());
        assert!(v[0][0].is_string());
        assert!(v[0][1].is_i64());
        let zero = rational_to_value(&BigRational::zero());
        assert_eq!(zero, json!(0));
    }
}
