//! Sparse maps used for structure constants.

use std::collections::BTreeMap;

use super::field::{Field, Scalar};
use super::matrix::Matrix;

/// Sparse matrix keyed by `(row, col)`; zeros are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), Scalar>,
}

impl SparseMatrix {
    pub fn new(rows: usize, cols: usize) -> SparseMatrix {
        SparseMatrix {
            rows,
            cols,
            entries: BTreeMap::new(),
        }
    }

    pub fn from_dense(m: &Matrix) -> SparseMatrix {
        let mut s = SparseMatrix::new(m.rows(), m.cols());
        for r in 0..m.rows() {
            for c in 0..m.cols() {
                s.add(m.field(), r, c, m.get(r, c));
            }
        }
        s
    }

    pub fn to_dense(&self, field: &Field) -> Matrix {
        let mut m = Matrix::zeros(field, self.rows, self.cols);
        for (&(r, c), v) in &self.entries {
            m.set(r, c, v.clone());
        }
        m
    }

    pub fn add(&mut self, field: &Field, r: usize, c: usize, v: &Scalar) {
        assert!(r < self.rows && c < self.cols, "sparse index out of range");
        accumulate(&mut self.entries, field, (r, c), v);
    }

    pub fn get(&self, field: &Field, r: usize, c: usize) -> Scalar {
        self.entries.get(&(r, c)).cloned().unwrap_or_else(|| field.zero())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> {
        self.entries.iter().map(|(&(r, c), v)| (r, c, v))
    }
}

/// Sparse 3-index tensor with lexicographic iteration order; zeros are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SparseTensor3 {
    dims: (usize, usize, usize),
    entries: BTreeMap<(usize, usize, usize), Scalar>,
}

impl SparseTensor3 {
    pub fn new(dims: (usize, usize, usize)) -> SparseTensor3 {
        SparseTensor3 {
            dims,
            entries: BTreeMap::new(),
        }
    }

    pub fn cube(d: usize) -> SparseTensor3 {
        SparseTensor3::new((d, d, d))
    }

    pub fn dims(&self) -> (usize, usize, usize) {
        self.dims
    }

    /// Adds `v` to the entry at `(i, j, k)`, dropping it if the sum is zero.
    pub fn add(&mut self, field: &Field, i: usize, j: usize, k: usize, v: &Scalar) {
        assert!(
            i < self.dims.0 && j < self.dims.1 && k < self.dims.2,
            "tensor index ({i}, {j}, {k}) out of range {:?}",
            self.dims
        );
        accumulate(&mut self.entries, field, (i, j, k), v);
    }

    /// Overwrites the entry at `(i, j, k)`.
    pub fn set(&mut self, field: &Field, i: usize, j: usize, k: usize, v: Scalar) {
        if field.is_zero(&v) {
            self.entries.remove(&(i, j, k));
        } else {
            self.entries.insert((i, j, k), v);
        }
    }

    pub fn get(&self, field: &Field, i: usize, j: usize, k: usize) -> Scalar {
        self.entries
            .get(&(i, j, k))
            .cloned()
            .unwrap_or_else(|| field.zero())
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, usize, &Scalar)> {
        self.entries.iter().map(|(&(i, j, k), v)| (i, j, k, v))
    }

    /// Entries with first index `i`, in lexicographic order.
    pub fn slice(&self, i: usize) -> impl Iterator<Item = (usize, usize, &Scalar)> {
        self.entries
            .range((i, 0, 0)..(i + 1, 0, 0))
            .map(|(&(_, j, k), v)| (j, k, v))
    }
}

fn accumulate<K: Ord>(map: &mut BTreeMap<K, Scalar>, field: &Field, key: K, v: &Scalar) {
    if field.is_zero(v) {
        return;
    }
    match map.entry(key) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(v.clone());
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            let s = field.add(e.get(), v);
            if field.is_zero(&s) {
                e.remove();
            } else {
                *e.get_mut() = s;
            }
        }
    }
}
