//! Arbitrary-precision integer matrices and univariate polynomials.
//!
//! Every exact determinant in the crate goes through [`det_exact`], a
//! fraction-free (Bareiss) elimination that keeps all intermediate values
//! integral.

use std::fmt;
use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Dense row-major matrix of big integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BigMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl BigMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        BigMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(size: usize) -> Self {
        let mut m = Self::zeros(size, size);
        for i in 0..size {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from nested rows; every row must have the same length.
    pub fn from_rows<T, R>(rows: &[R]) -> Result<Self>
    where
        T: Into<BigInt> + Clone,
        R: AsRef<[T]>,
    {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            let r = r.as_ref();
            if r.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: r.len(),
                });
            }
            data.extend(r.iter().cloned().map(Into::into));
        }
        Ok(BigMatrix {
            rows: rows.len(),
            cols,
            data,
        })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        BigMatrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    /// Entries as `i64`, or `None` if any entry overflows.
    pub fn to_i64_rows(&self) -> Option<Vec<Vec<i64>>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|v| v.to_i64()).collect())
            .collect()
    }

    /// Submatrix on the given row and column index lists.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> BigMatrix {
        BigMatrix::from_fn(rows.len(), cols.len(), |i, j| self[(rows[i], cols[j])].clone())
    }

    /// Assembles a 2x2 block matrix `[[a, b], [c, d]]`.
    pub fn block2(a: &BigMatrix, b: &BigMatrix, c: &BigMatrix, d: &BigMatrix) -> Result<BigMatrix> {
        if a.rows != b.rows || c.rows != d.rows || a.cols != c.cols || b.cols != d.cols {
            return Err(Error::InvalidArgument("incompatible block shapes".into()));
        }
        let (top, left) = (a.rows, a.cols);
        Ok(BigMatrix::from_fn(top + c.rows, left + b.cols, |i, j| {
            match (i < top, j < left) {
                (true, true) => a[(i, j)].clone(),
                (true, false) => b[(i, j - left)].clone(),
                (false, true) => c[(i - top, j)].clone(),
                (false, false) => d[(i - top, j - left)].clone(),
            }
        }))
    }

    pub fn add(&self, other: &BigMatrix) -> Result<BigMatrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::InvalidArgument("shape mismatch in matrix sum".into()));
        }
        Ok(BigMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn mul(&self, other: &BigMatrix) -> Result<BigMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = BigMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = &self[(i, l)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(l, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigInt) -> BigMatrix {
        BigMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|v| v * c).collect(),
        }
    }

    pub fn trace(&self) -> BigInt {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)].clone()).sum()
    }
}

impl Index<(usize, usize)> for BigMatrix {
    type Output = BigInt;

    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for BigMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Display for BigMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Exact determinant by fraction-free Bareiss elimination.
///
/// Pivoting takes the first nonzero entry in the column; every row swap
/// flips the sign.
pub fn det_exact(m: &BigMatrix) -> Result<BigInt> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows,
            cols: m.cols,
        });
    }
    Ok(bareiss(m.to_rows()))
}

fn bareiss(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        let Some(p) = (k..n).find(|&r| !a[r][k].is_zero()) else {
            return BigInt::zero();
        };
        if p != k {
            a.swap(p, k);
            negate = !negate;
        }
        let (top, bottom) = a.split_at_mut(k + 1);
        let pivot_row = &top[k];
        let pivot = &pivot_row[k];
        let trivial_scale = pivot == &prev;
        for row in bottom.iter_mut() {
            let factor = std::mem::take(&mut row[k]);
            if factor.is_zero() && trivial_scale {
                continue;
            }
            for j in k + 1..n {
                let upper = &pivot_row[j];
                if row[j].is_zero() && (factor.is_zero() || upper.is_zero()) {
                    continue;
                }
                let mut v = &row[j] * pivot;
                if !factor.is_zero() && !upper.is_zero() {
                    v -= &factor * upper;
                }
                row[j] = if prev.is_one() { v } else { v / &prev };
            }
        }
        prev = pivot.clone();
    }
    let det = std::mem::take(&mut a[n - 1][n - 1]);
    if negate {
        -det
    } else {
        det
    }
}

/// Circulant matrix whose row `i` is `first_row` cyclically shifted right by `i`.
pub fn circulant<T: Into<BigInt> + Clone>(first_row: &[T]) -> Result<BigMatrix> {
    let m = first_row.len();
    if m == 0 {
        return Err(Error::Empty("circulant first row"));
    }
    let row: Vec<BigInt> = first_row.iter().cloned().map(Into::into).collect();
    Ok(BigMatrix::from_fn(m, m, |i, j| row[(j + m - i) % m].clone()))
}

/// Characteristic polynomial `det(xI - m)` by Faddeev–LeVerrier.
///
/// All divisions are exact over the integers.
pub fn char_poly_exact(m: &BigMatrix) -> Result<Poly> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows,
            cols: m.cols,
        });
    }
    let n = m.rows;
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    let mut aux = BigMatrix::zeros(n, n);
    for step in 1..=n {
        // aux <- m * aux + c_{n-step+1} I
        let mut next = m.mul(&aux)?;
        for i in 0..n {
            next[(i, i)] += &coeffs[n - step + 1];
        }
        aux = next;
        let tr = m.mul(&aux)?.trace();
        coeffs[n - step] = -(tr / BigInt::from(step));
    }
    Ok(Poly::new(coeffs))
}

/// Binomial coefficients `C(n, 0..=n)` from Pascal's rule.
pub fn binomial_row(n: usize) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for _ in 0..n {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(BigInt::one());
        for w in row.windows(2) {
            next.push(&w[0] + &w[1]);
        }
        next.push(BigInt::one());
        row = next;
    }
    row
}

/// Univariate polynomial with big-integer coefficients in ascending degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<BigInt>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Synthetic division by `(x - root)`, returning quotient and remainder.
    pub fn div_linear(&self, root: &BigInt) -> (Poly, BigInt) {
        if self.coeffs.is_empty() {
            return (Poly::zero(), BigInt::zero());
        }
        let n = self.coeffs.len();
        let mut quotient = vec![BigInt::zero(); n - 1];
        let mut carry = BigInt::zero();
        for i in (0..n).rev() {
            let v = &self.coeffs[i] + &carry * root;
            if i == 0 {
                return (Poly::new(quotient), v);
            }
            quotient[i - 1] = v.clone();
            carry = v;
        }
        unreachable!()
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            let show_mag = !mag.is_one() || i == 0;
            if show_mag {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}
