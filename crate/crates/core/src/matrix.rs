//! Dense row-major matrices over a [`Scalar`] kernel.
//!
//! Values are immutable after construction; every operation returns a new
//! matrix. The kernel is the type parameter, so mixed-kernel arithmetic is
//! unrepresentable.

use std::fmt;
use std::ops::Index;

use num_traits::{One, Zero};

use crate::error::Error;
use crate::scalar::{Rational, Scalar};

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<T: Scalar> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> Matrix<T> {
    /// Builds a matrix from a row-major entry list.
    pub fn from_vec(rows: usize, cols: usize, data: Vec<T>) -> Result<Self, Error> {
        if rows == 0 || cols == 0 {
            return Err(Error::EmptyDimension { rows, cols });
        }
        if data.len() != rows * cols {
            return Err(Error::EntryCount {
                rows,
                cols,
                got: data.len(),
            });
        }
        if let Some(bad) = data.iter().find(|v| !v.admissible()) {
            return Err(Error::NotFinite(bad.to_string()));
        }
        Ok(Self { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self, Error> {
        let r = rows.len();
        let c = rows.first().map(|row| row.len()).unwrap_or(0);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::EntryCount {
                rows: r,
                cols: c,
                got: rows.iter().map(|row| row.len()).sum(),
            });
        }
        Self::from_vec(r, c, rows.into_iter().flatten().collect())
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |_, _| T::zero())
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { T::one() } else { T::zero() })
    }

    /// Convenience for integer-valued fixtures.
    pub fn from_ints(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| T::from_int(v)).collect())
                .collect(),
        )
        .expect("ragged integer fixture")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.at(j, i).clone())
    }

    pub fn neg(&self) -> Self {
        self.map(|v| -v.clone())
    }

    pub fn scale(&self, s: &T) -> Self {
        self.map(|v| v.clone() * s.clone())
    }

    pub fn add(&self, other: &Self) -> Result<Self, Error> {
        if self.shape() != other.shape() {
            return Err(self.shape_error("add", other));
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a.clone() + b.clone())
            .collect();
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, Error> {
        if self.shape() != other.shape() {
            return Err(self.shape_error("sub", other));
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a.clone() - b.clone())
            .collect();
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn mul(&self, other: &Self) -> Result<Self, Error> {
        if self.cols != other.rows {
            return Err(self.shape_error("mul", other));
        }
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let cell = &mut out.data[i * other.cols + j];
                    *cell = cell.clone() + a.clone() * other.at(k, j).clone();
                }
            }
        }
        Ok(out)
    }

    fn shape_error(&self, op: &'static str, other: &Self) -> Error {
        Error::ShapeMismatch {
            op,
            left_rows: self.rows,
            left_cols: self.cols,
            right_rows: other.rows,
            right_cols: other.cols,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }

    pub fn is_symmetric(&self) -> bool {
        if !self.is_square() {
            return false;
        }
        for i in 0..self.rows {
            for j in (i + 1)..self.cols {
                if self.at(i, j) != self.at(j, i) {
                    return false;
                }
            }
        }
        true
    }

    /// Largest absolute entry.
    pub fn max_abs(&self) -> T {
        let mut best = T::zero();
        for v in &self.data {
            let a = v.abs();
            if a > best {
                best = a;
            }
        }
        best
    }

    pub fn row_sum(&self, i: usize) -> T {
        self.row(i)
            .iter()
            .fold(T::zero(), |acc, v| acc + v.clone())
    }

    pub fn col_sum(&self, j: usize) -> T {
        (0..self.rows).fold(T::zero(), |acc, i| acc + self.at(i, j).clone())
    }

    pub fn row_sums(&self) -> Vec<T> {
        (0..self.rows).map(|i| self.row_sum(i)).collect()
    }

    pub fn col_sums(&self) -> Vec<T> {
        (0..self.cols).map(|j| self.col_sum(j)).collect()
    }

    /// Keeps the listed rows and columns, in order. Both lists must be
    /// non-empty and in range.
    pub fn select(&self, keep_rows: &[usize], keep_cols: &[usize]) -> Result<Self, Error> {
        if keep_rows.is_empty() || keep_cols.is_empty() {
            return Err(Error::EmptyDimension {
                rows: keep_rows.len(),
                cols: keep_cols.len(),
            });
        }
        let mut data = Vec::with_capacity(keep_rows.len() * keep_cols.len());
        for &i in keep_rows {
            for &j in keep_cols {
                data.push(self.at(i, j).clone());
            }
        }
        Ok(Self {
            rows: keep_rows.len(),
            cols: keep_cols.len(),
            data,
        })
    }

    /// Entrywise distance in the max norm, as f64.
    pub fn max_abs_diff(&self, other: &Self) -> Result<f64, Error> {
        Ok(self.sub(other)?.max_abs().to_f64())
    }

    /// True when every entry differs by at most `tol` in absolute value.
    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.shape() == other.shape()
            && self
                .max_abs_diff(other)
                .map(|d| d <= tol)
                .unwrap_or(false)
    }
}

impl Matrix<Rational> {
    /// Exact conversion into the binary64 kernel (entries round once).
    pub fn to_float(&self) -> Matrix<f64> {
        self.map(|v| v.to_f64())
    }
}

impl Matrix<f64> {
    /// Exact lift into the rational kernel; every finite binary64 value is
    /// a rational number.
    pub fn to_rational(&self) -> Matrix<Rational> {
        self.map(|v| Rational::from_float(*v).expect("finite by construction"))
    }
}

impl<T: Scalar> Index<(usize, usize)> for Matrix<T> {
    type Output = T;

    fn index(&self, (i, j): (usize, usize)) -> &T {
        self.at(i, j)
    }
}

impl<T: Scalar> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  ")?;
            for j in 0..self.cols {
                write!(f, "{} ", self.at(i, j))?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

impl<T: Scalar> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.at(i, j))?;
            }
            if i + 1 < self.rows {
                writeln!(f)?;
            }
        }
        Ok(())
    }
}
