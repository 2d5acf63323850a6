//! Matrix sequences with nested domains, their square-matrix form, limits of
//! polynomial families, the redundancy-pruned product, and the monomial
//! realization of the pair monoid.

use super::rational::RationalMatrix;
use super::subspace::Subspace;
use crate::error::{Error, Result};
use crate::rmonoid::RElement;
use num::{BigRational, One};

/// One term of a nested-domain sequence: a nonzero map out of its domain,
/// written as an ambient-rows × dim(domain) matrix in the domain's reduced
/// basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MTerm {
    pub domain: Subspace,
    pub map: RationalMatrix,
}

/// A sequence (V_0 ⊃ V_1 ⊃ …, A_i: V_i → V) where V_0 is the full space,
/// each V_{i+1} is the kernel of A_i, the last kernel is zero, and no A_i is
/// the zero map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixSequenceM {
    dim: usize,
    terms: Vec<MTerm>,
}

impl MatrixSequenceM {
    pub fn from_terms(dim: usize, terms: Vec<MTerm>) -> Result<Self> {
        let s = Self { dim, terms };
        let problems = s.validate();
        if problems.is_empty() {
            Ok(s)
        } else {
            Err(Error::InvalidSequence(problems.join("; ")))
        }
    }

    /// Skips invariant validation; used for deliberately broken fixtures.
    pub fn from_terms_unchecked(dim: usize, terms: Vec<MTerm>) -> Self {
        Self { dim, terms }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn terms(&self) -> &[MTerm] {
        &self.terms
    }

    /// All invariant violations, empty when the value is a valid sequence.
    pub fn validate(&self) -> Vec<String> {
        let mut problems = Vec::new();
        if self.terms.is_empty() {
            return vec!["sequence has no terms".into()];
        }
        for (i, t) in self.terms.iter().enumerate() {
            if t.domain.ambient() != self.dim {
                problems.push(format!("term {i}: domain lives in Q^{}", t.domain.ambient()));
            }
            if t.map.rows() != self.dim || t.map.cols() != t.domain.dim() {
                problems.push(format!(
                    "term {i}: map is {}x{}, expected {}x{}",
                    t.map.rows(),
                    t.map.cols(),
                    self.dim,
                    t.domain.dim()
                ));
            }
            if t.map.is_zero() {
                problems.push(format!("term {i}: zero map"));
            }
        }
        if !problems.is_empty() {
            return problems;
        }
        if self.terms[0].domain != Subspace::full(self.dim) {
            problems.push("term 0: domain is not the full space".into());
        }
        for i in 0..self.terms.len() {
            let t = &self.terms[i];
            let ker = match t.domain.from_coords(&Subspace::kernel(&t.map)) {
                Ok(k) => k,
                Err(e) => {
                    problems.push(format!("term {i}: {e}"));
                    continue;
                }
            };
            if i + 1 < self.terms.len() {
                if self.terms[i + 1].domain != ker {
                    problems.push(format!(
                        "term {}: domain differs from the kernel of term {i}",
                        i + 1
                    ));
                }
            } else if !ker.is_zero() {
                problems.push(format!("term {i}: last term has a nonzero kernel"));
            }
        }
        problems
    }

    /// True iff the sequences agree up to one nonzero scalar per term.
    pub fn projective_equal(&self, other: &Self) -> bool {
        self.dim == other.dim
            && self.terms.len() == other.terms.len()
            && self.terms.iter().zip(&other.terms).all(|(a, b)| {
                a.domain == b.domain && a.map.scalar_multiple_of(&b.map)
            })
    }
}

/// A sequence of square matrices A_0, A_1, … where each term is nonzero on
/// the intersection of the kernels of all earlier terms and that intersection
/// ends at zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixSequenceTilde {
    dim: usize,
    terms: Vec<RationalMatrix>,
}

impl MatrixSequenceTilde {
    pub fn from_terms(dim: usize, terms: Vec<RationalMatrix>) -> Result<Self> {
        let s = Self { dim, terms };
        let problems = s.validate();
        if problems.is_empty() {
            Ok(s)
        } else {
            Err(Error::InvalidSequence(problems.join("; ")))
        }
    }

    /// Skips invariant validation; used for golden data and broken fixtures.
    pub fn from_terms_unchecked(dim: usize, terms: Vec<RationalMatrix>) -> Self {
        Self { dim, terms }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn terms(&self) -> &[RationalMatrix] {
        &self.terms
    }

    pub fn validate(&self) -> Vec<String> {
        let mut problems = Vec::new();
        if self.terms.is_empty() {
            return vec!["sequence has no terms".into()];
        }
        for (i, t) in self.terms.iter().enumerate() {
            if t.rows() != self.dim || t.cols() != self.dim {
                problems.push(format!(
                    "term {i}: matrix is {rx}x{cx}, expected {d}x{d}",
                    rx = t.rows(),
                    cx = t.cols(),
                    d = self.dim
                ));
            }
        }
        if !problems.is_empty() {
            return problems;
        }
        let mut common = Subspace::full(self.dim);
        for (i, t) in self.terms.iter().enumerate() {
            let alive = match Subspace::restrict(t, &common) {
                Ok(Some(r)) => !r.is_zero(),
                Ok(None) | Err(_) => false,
            };
            if !alive {
                problems.push(format!(
                    "term {i}: vanishes on the common kernel of the earlier terms"
                ));
                continue;
            }
            common = common.intersect(&Subspace::kernel(t)).expect("same ambient");
        }
        if !common.is_zero() {
            problems.push("common kernel of all terms is nonzero".into());
        }
        problems
    }

    pub fn projective_equal(&self, other: &Self) -> bool {
        self.dim == other.dim
            && self.terms.len() == other.terms.len()
            && self
                .terms
                .iter()
                .zip(&other.terms)
                .all(|(a, b)| a.scalar_multiple_of(b))
    }
}

/// A polynomial matrix family A_ε = Σ A_i ε^i whose coefficient kernels
/// intersect to zero, so A_ε is invertible for all small ε ≠ 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolynomialMatrixFamily {
    dim: usize,
    coefficients: Vec<RationalMatrix>,
}

impl PolynomialMatrixFamily {
    pub fn new(dim: usize, coefficients: Vec<RationalMatrix>) -> Result<Self> {
        if coefficients.is_empty() {
            return Err(Error::InvalidSequence("family has no coefficients".into()));
        }
        for (i, c) in coefficients.iter().enumerate() {
            if c.rows() != dim || c.cols() != dim {
                return Err(Error::SizeMismatch(format!(
                    "coefficient {i} is {}x{}, expected {dim}x{dim}",
                    c.rows(),
                    c.cols()
                )));
            }
        }
        let mut common = Subspace::full(dim);
        for c in &coefficients {
            common = common.intersect(&Subspace::kernel(c))?;
        }
        if !common.is_zero() {
            return Err(Error::InvalidSequence(
                "coefficient kernels share a nonzero subspace, family is never invertible".into(),
            ));
        }
        Ok(Self { dim, coefficients })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn coefficients(&self) -> &[RationalMatrix] {
        &self.coefficients
    }

    /// The matrix A_t = Σ A_i t^i at an exact parameter value.
    pub fn evaluate(&self, t: &BigRational) -> RationalMatrix {
        let mut acc = RationalMatrix::zeros(self.dim, self.dim);
        let mut pow = BigRational::one();
        for c in &self.coefficients {
            acc = acc.add(&c.scale(&pow)).expect("same shape");
            pow *= t;
        }
        acc
    }
}

/// The limit of A_ε as ε → 0: repeatedly restrict the least coefficient that
/// survives on the current subspace, then descend into its kernel.
pub fn limit_of_family(f: &PolynomialMatrixFamily) -> Result<MatrixSequenceM> {
    let mut w = Subspace::full(f.dim());
    let mut terms = Vec::new();
    while !w.is_zero() {
        let restriction = f
            .coefficients()
            .iter()
            .find_map(|c| match Subspace::restrict(c, &w) {
                Ok(Some(r)) if !r.is_zero() => Some(Ok(r)),
                Ok(_) => None,
                Err(e) => Some(Err(e)),
            })
            .transpose()?
            .ok_or_else(|| {
                Error::Inconsistent("every coefficient vanishes on a nonzero subspace".into())
            })?;
        let ker = w.from_coords(&Subspace::kernel(&restriction))?;
        terms.push(MTerm { domain: w, map: restriction });
        w = ker;
    }
    MatrixSequenceM::from_terms(f.dim(), terms)
}

/// Product of square-term sequences: all products A_iB_j (i fastest, j
/// slowest), keeping a term exactly when it survives on the common kernel of
/// the terms kept so far.
pub fn tilde_product(
    a: &MatrixSequenceTilde,
    b: &MatrixSequenceTilde,
) -> Result<MatrixSequenceTilde> {
    if a.dim() != b.dim() {
        return Err(Error::SizeMismatch(format!(
            "product of sequences on Q^{} and Q^{}",
            a.dim(),
            b.dim()
        )));
    }
    let mut kept = Vec::new();
    let mut common = Subspace::full(a.dim());
    for bj in b.terms() {
        for ai in a.terms() {
            if common.is_zero() {
                break;
            }
            let c = ai.mul(bj)?;
            let alive = match Subspace::restrict(&c, &common)? {
                Some(r) => !r.is_zero(),
                None => false,
            };
            if alive {
                common = common.intersect(&Subspace::kernel(&c))?;
                kept.push(c);
            }
        }
    }
    if !common.is_zero() {
        return Err(Error::Inconsistent(
            "product left a nonzero common kernel; inputs were not valid sequences".into(),
        ));
    }
    MatrixSequenceTilde::from_terms(a.dim(), kept)
        .map_err(|e| Error::Inconsistent(format!("product violates sequence invariants: {e}")))
}

/// Embeds a nested-domain sequence as square matrices, extending each term by
/// zero on the coordinate complement of its domain's pivot columns.
pub fn to_tilde(s: &MatrixSequenceM) -> Result<MatrixSequenceTilde> {
    let n = s.dim();
    let terms = s
        .terms()
        .iter()
        .map(|t| {
            let mut m = RationalMatrix::zeros(n, n);
            for (l, &p) in t.domain.pivots().iter().enumerate() {
                for r in 0..n {
                    m.set_entry(r, p, t.map.entry(r, l).clone());
                }
            }
            m
        })
        .collect();
    MatrixSequenceTilde::from_terms(n, terms)
}

/// Recovers the nested-domain form: term i is restricted to the intersection
/// of the kernels of terms 0..i.
pub fn to_m(s: &MatrixSequenceTilde) -> Result<MatrixSequenceM> {
    let mut domain = Subspace::full(s.dim());
    let mut terms = Vec::new();
    for t in s.terms() {
        let map = Subspace::restrict(t, &domain)?.ok_or_else(|| {
            Error::Inconsistent("term domain collapsed to zero; invalid sequence".into())
        })?;
        let next = domain.intersect(&Subspace::kernel(t))?;
        terms.push(MTerm { domain, map });
        domain = next;
    }
    MatrixSequenceM::from_terms(s.dim(), terms)
}

/// The square-term sequence of a monoid element: term l is supported on the
/// columns of block l of the partition and sends e_j to e_{w(j)} there.
pub fn realize_monomial(r: &RElement) -> MatrixSequenceTilde {
    let n = r.n();
    let terms = r
        .p()
        .blocks()
        .iter()
        .map(|block| {
            let mut m = RationalMatrix::zeros(n, n);
            for &j in block {
                m.set_entry(r.w().apply(j) - 1, j - 1, BigRational::one());
            }
            m
        })
        .collect();
    MatrixSequenceTilde::from_terms(n, terms).expect("monomial terms satisfy the invariants")
}
