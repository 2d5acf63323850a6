//! Subspaces of Q^n in a canonical reduced-basis form.

use super::rational::RationalMatrix;
use crate::error::{Error, Result};
use num::{BigRational, One, Zero};
use std::fmt;

/// A linear subspace of Q^n, stored as the unique reduced echelon basis
/// (each basis vector has a leading 1 in its pivot coordinate, pivots strictly
/// increasing, zeros above and below every pivot).  Two values are equal iff
/// they are the same subspace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vec<BigRational>>,
    pivots: Vec<usize>,
}

impl Subspace {
    /// The whole of Q^n.
    pub fn full(n: usize) -> Self {
        Self::from_spanning(
            n,
            (0..n)
                .map(|i| {
                    let mut v = vec![BigRational::zero(); n];
                    v[i] = BigRational::one();
                    v
                })
                .collect(),
        )
        .expect("standard basis spans")
    }

    /// The zero subspace of Q^n.
    pub fn zero(n: usize) -> Self {
        Self { ambient: n, basis: Vec::new(), pivots: Vec::new() }
    }

    /// Canonicalizes a spanning set (vectors of length n) by row reduction.
    pub fn from_spanning(n: usize, vectors: Vec<Vec<BigRational>>) -> Result<Self> {
        if vectors.iter().any(|v| v.len() != n) {
            return Err(Error::SizeMismatch(format!("spanning vectors must have length {n}")));
        }
        if n == 0 {
            return Err(Error::InvalidMatrix("ambient dimension must be positive".into()));
        }
        let nonzero: Vec<Vec<BigRational>> =
            vectors.into_iter().filter(|v| v.iter().any(|x| !x.is_zero())).collect();
        if nonzero.is_empty() {
            return Ok(Self::zero(n));
        }
        let (r, pivots) = RationalMatrix::new(nonzero)?.rref();
        let basis = (0..pivots.len())
            .map(|i| (0..n).map(|c| r.entry(i, c).clone()).collect())
            .collect();
        Ok(Self { ambient: n, basis, pivots })
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Vec<BigRational>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// The n × dim matrix whose columns are the basis vectors.
    pub fn basis_matrix(&self) -> Option<RationalMatrix> {
        if self.is_zero() {
            return None;
        }
        RationalMatrix::from_columns(&self.basis).ok()
    }

    /// Coordinates of v in the reduced basis, or None if v lies outside.
    ///
    /// Because the basis is reduced, the candidate coordinate vector is just
    /// v read off at the pivot positions; membership is the reconstruction
    /// check.
    pub fn coords(&self, v: &[BigRational]) -> Option<Vec<BigRational>> {
        if v.len() != self.ambient {
            return None;
        }
        let coeffs: Vec<BigRational> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut recon = vec![BigRational::zero(); self.ambient];
        for (c, b) in coeffs.iter().zip(&self.basis) {
            for (r, x) in recon.iter_mut().zip(b) {
                *r += c * x;
            }
        }
        if recon.iter().zip(v).all(|(a, b)| a == b) {
            Some(coeffs)
        } else {
            None
        }
    }

    pub fn contains(&self, v: &[BigRational]) -> bool {
        self.coords(v).is_some()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.ambient == self.ambient && other.basis.iter().all(|v| self.contains(v))
    }

    /// Sum of two subspaces.
    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        if self.ambient != other.ambient {
            return Err(Error::SizeMismatch("subspace sum in different ambients".into()));
        }
        let mut vecs = self.basis.clone();
        vecs.extend(other.basis.iter().cloned());
        Subspace::from_spanning(self.ambient, vecs)
    }

    /// Annihilator in the dual, identified with Q^n: the kernel of the matrix
    /// whose rows are the basis vectors.
    pub fn annihilator(&self) -> Result<Subspace> {
        if self.is_zero() {
            return Ok(Subspace::full(self.ambient));
        }
        let m = RationalMatrix::new(self.basis.clone())?;
        Subspace::from_spanning(self.ambient, m.nullspace())
    }

    /// Intersection via annihilators: (U ∩ W)° = U° + W°.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        if self.ambient != other.ambient {
            return Err(Error::SizeMismatch("subspace intersection in different ambients".into()));
        }
        self.annihilator()?.sum(&other.annihilator()?)?.annihilator()
    }

    /// Right kernel of a matrix, as a subspace of Q^cols.
    pub fn kernel(m: &RationalMatrix) -> Subspace {
        Subspace::from_spanning(m.cols(), m.nullspace()).expect("nullspace vectors fit")
    }

    /// m composed with the inclusion of w: the rows(m) × dim(w) matrix whose
    /// columns are m applied to w's basis vectors.  Zero-dimensional w has no
    /// matrix; None is returned.
    pub fn restrict(m: &RationalMatrix, w: &Subspace) -> Result<Option<RationalMatrix>> {
        if m.cols() != w.ambient {
            return Err(Error::SizeMismatch(format!(
                "restricting {}x{} to a subspace of Q^{}",
                m.rows(),
                m.cols(),
                w.ambient
            )));
        }
        if w.is_zero() {
            return Ok(None);
        }
        let cols: Vec<Vec<BigRational>> =
            w.basis.iter().map(|b| m.mul_vec(b)).collect::<Result<_>>()?;
        Ok(Some(RationalMatrix::from_columns(&cols)?))
    }

    /// Lifts a subspace expressed in this subspace's coordinates back to the
    /// ambient space.
    pub fn from_coords(&self, sub: &Subspace) -> Result<Subspace> {
        if sub.ambient != self.dim() {
            return Err(Error::SizeMismatch(format!(
                "coordinate subspace of Q^{} inside a {}-dimensional space",
                sub.ambient,
                self.dim()
            )));
        }
        let vecs = sub
            .basis
            .iter()
            .map(|c| {
                let mut v = vec![BigRational::zero(); self.ambient];
                for (coef, b) in c.iter().zip(&self.basis) {
                    for (r, x) in v.iter_mut().zip(b) {
                        *r += coef * x;
                    }
                }
                v
            })
            .collect();
        Subspace::from_spanning(self.ambient, vecs)
    }
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        write!(f, "span{{")?;
        for (i, b) in self.basis.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "(")?;
            for (j, x) in b.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, ")")?;
        }
        write!(f, "}}")
    }
}
