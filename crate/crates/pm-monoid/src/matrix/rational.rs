//! Dense matrices over exact rationals with elimination primitives.

use crate::error::{Error, Result};
use num::{BigRational, One, ToPrimitive, Zero};
use std::fmt;

/// A rows × cols matrix of exact rationals, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<BigRational>>,
}

impl RationalMatrix {
    pub fn new(entries: Vec<Vec<BigRational>>) -> Result<Self> {
        let rows = entries.len();
        if rows == 0 {
            return Err(Error::InvalidMatrix("matrix needs at least one row".into()));
        }
        let cols = entries[0].len();
        if cols == 0 {
            return Err(Error::InvalidMatrix("matrix needs at least one column".into()));
        }
        if entries.iter().any(|r| r.len() != cols) {
            return Err(Error::InvalidMatrix("ragged rows".into()));
        }
        Ok(Self { rows, cols, entries })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, entries: vec![vec![BigRational::zero(); cols]; rows] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries[i][i] = BigRational::one();
        }
        m
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        Self::new(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect())
                .collect(),
        )
        .expect("literal rows are rectangular")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, r: usize, c: usize) -> &BigRational {
        &self.entries[r][c]
    }

    pub fn set_entry(&mut self, r: usize, c: usize, v: BigRational) {
        self.entries[r][c] = v;
    }

    pub fn column(&self, c: usize) -> Vec<BigRational> {
        (0..self.rows).map(|r| self.entries[r][c].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|r| r.iter().all(|x| x.is_zero()))
    }

    /// Builds a matrix from its columns; all columns must share one length.
    pub fn from_columns(cols: &[Vec<BigRational>]) -> Result<Self> {
        if cols.is_empty() || cols[0].is_empty() {
            return Err(Error::InvalidMatrix("matrix needs at least one column".into()));
        }
        let rows = cols[0].len();
        if cols.iter().any(|c| c.len() != rows) {
            return Err(Error::InvalidMatrix("ragged columns".into()));
        }
        Ok(Self {
            rows,
            cols: cols.len(),
            entries: (0..rows).map(|r| cols.iter().map(|c| c[r].clone()).collect()).collect(),
        })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::SizeMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self.entries[i][k].is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    if other.entries[k][j].is_zero() {
                        continue;
                    }
                    let add = &self.entries[i][k] * &other.entries[k][j];
                    out.entries[i][j] += add;
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[BigRational]) -> Result<Vec<BigRational>> {
        if v.len() != self.cols {
            return Err(Error::SizeMismatch(format!(
                "{}x{} times vector of {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        Ok(self
            .entries
            .iter()
            .map(|row| {
                row.iter()
                    .zip(v)
                    .fold(BigRational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect())
    }

    pub fn scale(&self, s: &BigRational) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .map(|r| r.iter().map(|x| x * s).collect())
                .collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::SizeMismatch("matrix addition shape".into()));
        }
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x + y).collect())
                .collect(),
        })
    }

    pub fn transpose(&self) -> Self {
        Self {
            rows: self.cols,
            cols: self.rows,
            entries: (0..self.cols)
                .map(|c| (0..self.rows).map(|r| self.entries[r][c].clone()).collect())
                .collect(),
        }
    }

    /// Reduced row echelon form together with the pivot column indices.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.entries.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            let Some(pr) = (row..self.rows).find(|&r| !m[r][col].is_zero()) else {
                continue;
            };
            m.swap(row, pr);
            let inv = m[row][col].recip();
            for x in &mut m[row] {
                *x *= &inv;
            }
            let pivot_row = m[row].clone();
            for (r, row_r) in m.iter_mut().enumerate() {
                if r != row && !row_r[col].is_zero() {
                    let factor = row_r[col].clone();
                    for (x, p) in row_r.iter_mut().zip(&pivot_row) {
                        *x -= &factor * p;
                    }
                }
            }
            pivots.push(col);
            row += 1;
            if row == self.rows {
                break;
            }
        }
        (Self { rows: self.rows, cols: self.cols, entries: m }, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Canonical basis of the right kernel: one vector per free column, unit
    /// in that coordinate.
    pub fn nullspace(&self) -> Vec<Vec<BigRational>> {
        let (r, pivots) = self.rref();
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|c| !pivots.contains(c)) {
            let mut v = vec![BigRational::zero(); self.cols];
            v[free] = BigRational::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -r.entries[row][free].clone();
            }
            basis.push(v);
        }
        basis
    }

    /// Inverse of a square matrix, None when singular.
    pub fn inverse(&self) -> Option<Self> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = Self::zeros(n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug.entries[r][c] = self.entries[r][c].clone();
            }
            aug.entries[r][n + r] = BigRational::one();
        }
        let (red, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(Self {
            rows: n,
            cols: n,
            entries: red.entries.iter().map(|row| row[n..].to_vec()).collect(),
        })
    }

    /// Entries as f64 in row-major order.
    pub fn to_f64(&self) -> Vec<f64> {
        self.entries
            .iter()
            .flat_map(|r| r.iter().map(|x| x.to_f64().expect("finite rational")))
            .collect()
    }

    /// Frobenius norm as f64.
    pub fn frobenius(&self) -> f64 {
        self.to_f64().iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    /// True if the two matrices differ by a single nonzero rational scalar.
    pub fn scalar_multiple_of(&self, other: &Self) -> bool {
        if self.rows != other.rows || self.cols != other.cols || self.is_zero() || other.is_zero()
        {
            return false;
        }
        let mut ratio: Option<BigRational> = None;
        for (a, b) in self.entries.iter().flatten().zip(other.entries.iter().flatten()) {
            match (a.is_zero(), b.is_zero()) {
                (true, true) => {}
                (true, false) | (false, true) => return false,
                (false, false) => {
                    let q = a / b;
                    match &ratio {
                        None => ratio = Some(q),
                        Some(r) if *r == q => {}
                        Some(_) => return false,
                    }
                }
            }
        }
        ratio.is_some()
    }

    /// Divides by the first nonzero entry, fixing the projective scale.
    pub fn projective_normal_form(&self) -> Self {
        match self.entries.iter().flatten().find(|x| !x.is_zero()) {
            Some(lead) => self.scale(&lead.recip()),
            None => self.clone(),
        }
    }
}

impl fmt::Display for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            for (j, x) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{x}")?;
            }
        }
        write!(f, "]")
    }
}

/// Parses a rational scalar from decimal text `p` or `p/q`.
pub fn parse_rational(text: &str) -> Result<BigRational> {
    let t = text.trim();
    let (ns, ds) = match t.split_once('/') {
        Some((n, d)) => (n, d),
        None => (t, "1"),
    };
    let n: num::BigInt = ns
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational {text:?}")))?;
    let d: num::BigInt = ds
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational {text:?}")))?;
    if d.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {text:?}")));
    }
    Ok(BigRational::new(n, d))
}

/// Prints a rational as `p` or `p/q`.
pub fn format_rational(x: &BigRational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn construction_validates_shape() {
        assert!(RationalMatrix::new(vec![]).is_err());
        assert!(RationalMatrix::new(vec![vec![]]).is_err());
        assert!(RationalMatrix::new(vec![
            vec![BigRational::zero()],
            vec![BigRational::zero(), BigRational::zero()],
        ])
        .is_err());
    }

    #[test]
    fn multiplication_matches_hand_example() {
        let a = RationalMatrix::from_i64_rows(&[&[1, 2], &[3, 4]]);
        let b = RationalMatrix::from_i64_rows(&[&[0, 1], &[1, 0]]);
        assert_eq!(a.mul(&b).unwrap(), RationalMatrix::from_i64_rows(&[&[2, 1], &[4, 3]]));
        assert!(a.mul(&RationalMatrix::identity(3)).is_err());
        let v: Vec<BigRational> =
            vec![BigRational::from_integer(1.into()), BigRational::from_integer((-1).into())];
        let av = a.mul_vec(&v).unwrap();
        assert_eq!(av[0], BigRational::from_integer((-1).into()));
        assert_eq!(av[1], BigRational::from_integer((-1).into()));
    }

    #[test]
    fn rref_and_nullspace_small_cases() {
        let id = RationalMatrix::identity(3);
        assert!(id.nullspace().is_empty());
        assert_eq!(id.rank(), 3);
        let m = RationalMatrix::from_i64_rows(&[&[1, 1], &[0, 0]]);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 1);
        assert_eq!(ns[0][0], -BigRational::one());
        assert_eq!(ns[0][1], BigRational::one());
        let (r, pivots) = RationalMatrix::from_i64_rows(&[&[0, 2, 4], &[1, 1, 1]]).rref();
        assert_eq!(pivots, vec![0, 1]);
        assert_eq!(r, RationalMatrix::from_i64_rows(&[&[1, 0, -1], &[0, 1, 2]]));
    }

    /// Oracle: for random integer matrices the nullspace basis really is
    /// killed by the matrix and rank + nullity = cols.
    #[test]
    fn rank_nullity_on_random_matrices() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..60 {
            let rows = rng.gen_range(1..=5);
            let cols = rng.gen_range(1..=5);
            let m = RationalMatrix::new(
                (0..rows)
                    .map(|_| {
                        (0..cols)
                            .map(|_| BigRational::from_integer(rng.gen_range(-3i64..=3).into()))
                            .collect()
                    })
                    .collect(),
            )
            .unwrap();
            let ns = m.nullspace();
            assert_eq!(m.rank() + ns.len(), cols);
            for v in &ns {
                assert!(m.mul_vec(v).unwrap().iter().all(|x| x.is_zero()));
            }
        }
    }

    #[test]
    fn inverse_round_trips_and_detects_singularity() {
        let a = RationalMatrix::from_i64_rows(&[&[2, 1], &[1, 1]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv).unwrap(), RationalMatrix::identity(2));
        assert_eq!(inv.mul(&a).unwrap(), RationalMatrix::identity(2));
        assert!(RationalMatrix::from_i64_rows(&[&[1, 2], &[2, 4]]).inverse().is_none());
        assert!(RationalMatrix::from_i64_rows(&[&[1, 2]]).inverse().is_none());
    }

    #[test]
    fn scalar_multiple_detection() {
        let a = RationalMatrix::from_i64_rows(&[&[2, 0], &[0, -4]]);
        let b = RationalMatrix::from_i64_rows(&[&[1, 0], &[0, -2]]);
        assert!(a.scalar_multiple_of(&b));
        assert!(b.scalar_multiple_of(&a));
        let c = RationalMatrix::from_i64_rows(&[&[1, 0], &[0, 2]]);
        assert!(!a.scalar_multiple_of(&c));
        let z = RationalMatrix::zeros(2, 2);
        assert!(!z.scalar_multiple_of(&z));
        assert_eq!(
            a.projective_normal_form(),
            RationalMatrix::from_i64_rows(&[&[1, 0], &[0, -2]])
        );
    }

    #[test]
    fn rational_text_round_trip() {
        assert_eq!(parse_rational("3").unwrap(), BigRational::from_integer(3.into()));
        assert_eq!(
            parse_rational("-7/2").unwrap(),
            BigRational::new((-7).into(), 2.into())
        );
        assert_eq!(format_rational(&parse_rational("6/4").unwrap()), "3/2");
        assert_eq!(format_rational(&BigRational::from_integer(5.into())), "5");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("a").is_err());
    }
}
