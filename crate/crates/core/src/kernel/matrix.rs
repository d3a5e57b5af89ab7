//! Dense exact matrices and row reduction.

use std::fmt;

use super::field::{Field, Scalar};
use super::vector;
use crate::error::{Error, Result};
use crate::par;

/// Row-major dense matrix over an exact field.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {}", self.rows, self.cols, self.field.spec())?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Reduced row-echelon form together with its pivot columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub reduced: Matrix,
    pub pivots: Vec<usize>,
}

impl Rref {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Basis of the right null space {x : A x = 0}, one vector per free column.
    pub fn nullspace(&self) -> Vec<Vec<Scalar>> {
        let m = &self.reduced;
        let field = &m.field;
        let mut is_pivot = vec![false; m.cols];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..m.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut x = vec![field.zero(); m.cols];
                x[free] = field.one();
                for (r, &p) in self.pivots.iter().enumerate() {
                    x[p] = field.neg(m.get(r, free));
                }
                x
            })
            .collect()
    }
}

impl Matrix {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Matrix {
        Matrix {
            field: field.clone(),
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: &Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    pub fn from_fn(field: &Field, rows: usize, cols: usize, f: impl Fn(usize, usize) -> Scalar) -> Matrix {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix {
            field: field.clone(),
            rows,
            cols,
            data,
        }
    }

    pub fn from_rows(field: &Field, cols: usize, rows: Vec<Vec<Scalar>>) -> Matrix {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged row");
            data.extend(r);
        }
        Matrix {
            field: field.clone(),
            rows: n,
            cols,
            data,
        }
    }

    /// Builds a matrix whose j-th column is `columns[j]`.
    pub fn from_columns(field: &Field, rows: usize, columns: &[Vec<Scalar>]) -> Matrix {
        Matrix::from_fn(field, rows, columns.len(), |r, c| columns[c][r].clone())
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        debug_assert!(self.field.contains(&v));
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Scalar>> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn row_vectors(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| self.field.is_zero(x))
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == Matrix::identity(&self.field, self.rows)
    }

    /// Number of nonzero entries.
    pub fn nnz(&self) -> usize {
        self.data.iter().filter(|x| !self.field.is_zero(x)).count()
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(&self.field, self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let f = &self.field;
        let rows: Vec<Vec<Scalar>> = par::map_range(self.rows, |r| {
            let mut out = vec![f.zero(); other.cols];
            for (k, a) in self.row(r).iter().enumerate() {
                if f.is_zero(a) {
                    continue;
                }
                vector::axpy(f, &mut out, a, other.row(k));
            }
            out
        });
        Matrix::from_rows(f, other.cols, rows)
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape mismatch");
        let f = &self.field;
        (0..self.rows)
            .map(|r| vector::dot(f, self.row(r), v))
            .collect()
    }

    /// Row vector times matrix: `v^T A`.
    pub fn vec_mul(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.rows, v.len(), "vector-matrix shape mismatch");
        let f = &self.field;
        let mut out = vec![f.zero(); self.cols];
        for (r, a) in v.iter().enumerate() {
            if !f.is_zero(a) {
                vector::axpy(f, &mut out, a, self.row(r));
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = &self.field;
        Matrix {
            field: f.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| f.add(a, b)).collect(),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = &self.field;
        Matrix {
            field: f.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| f.sub(a, b)).collect(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        let f = &self.field;
        Matrix {
            field: f.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| f.mul(a, s)).collect(),
        }
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix {
            field: self.field.clone(),
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    /// Places `other` to the right of `self`.
    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows);
        Matrix::from_fn(&self.field, self.rows, self.cols + other.cols, |r, c| {
            if c < self.cols {
                self.get(r, c).clone()
            } else {
                other.get(r, c - self.cols).clone()
            }
        })
    }

    /// Reduced row-echelon form. Columns are scanned left to right and the
    /// pivot for each column is the first remaining row with a nonzero entry.
    pub fn rref(&self) -> Rref {
        let f = self.field.clone();
        let cols = self.cols;
        let mut data = self.data.clone();
        let mut pivots = Vec::new();
        let mut lead = 0usize;
        for c in 0..cols {
            if lead == self.rows {
                break;
            }
            let Some(p) = (lead..self.rows).find(|&r| !f.is_zero(&data[r * cols + c])) else {
                continue;
            };
            if p != lead {
                for k in 0..cols {
                    data.swap(p * cols + k, lead * cols + k);
                }
            }
            let inv = f.inv(&data[lead * cols + c]).expect("pivot is nonzero");
            for k in c..cols {
                let v = f.mul(&data[lead * cols + k], &inv);
                data[lead * cols + k] = v;
            }
            let pivot_row: Vec<Scalar> = data[lead * cols..(lead + 1) * cols].to_vec();
            let lead_row = lead;
            par::for_each_row_mut(&mut data, cols, |r, row| {
                if r == lead_row || f.is_zero(&row[c]) {
                    return;
                }
                let factor = f.neg(&row[c]);
                for k in c..cols {
                    if !f.is_zero(&pivot_row[k]) {
                        row[k] = f.add(&row[k], &f.mul(&factor, &pivot_row[k]));
                    }
                }
            });
            pivots.push(c);
            lead += 1;
        }
        Rref {
            reduced: Matrix {
                field: f,
                rows: self.rows,
                cols,
                data,
            },
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank()
    }

    pub fn nullspace(&self) -> Vec<Vec<Scalar>> {
        self.rref().nullspace()
    }

    /// One solution of `A x = b` (free variables set to zero), or `None` if inconsistent.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(b.len(), self.rows);
        let aug = self.hstack(&Matrix::from_columns(&self.field, self.rows, &[b.to_vec()]));
        let rr = aug.rref();
        if rr.pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![self.field.zero(); self.cols];
        for (r, &p) in rr.pivots.iter().enumerate() {
            x[p] = rr.reduced.get(r, self.cols).clone();
        }
        Some(x)
    }

    pub fn inverse(&self) -> Result<Matrix> {
        if self.rows != self.cols {
            return Err(Error::Dimension(format!(
                "cannot invert a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        let rr = self.hstack(&Matrix::identity(&self.field, n)).rref();
        if n > 0 && (rr.pivots.len() < n || rr.pivots[n - 1] >= n) {
            return Err(Error::Structural("matrix is singular".into()));
        }
        Ok(Matrix::from_fn(&self.field, n, n, |r, c| rr.reduced.get(r, n + c).clone()))
    }

    /// Kronecker product; row (i, j) ↦ i * b.rows + j, column (k, l) ↦ k * b.cols + l.
    pub fn kron(&self, b: &Matrix) -> Matrix {
        let f = &self.field;
        Matrix::from_fn(f, self.rows * b.rows, self.cols * b.cols, |r, c| {
            let (i, j) = (r / b.rows, r % b.rows);
            let (k, l) = (c / b.cols, c % b.cols);
            f.mul(self.get(i, k), b.get(j, l))
        })
    }
}
