//! Subspaces of `k^n` stored as a canonical RREF basis.

use super::field::{Field, Scalar};
use super::matrix::Matrix;
use super::vector;

/// A subspace of the ambient coordinate space. The rows of `basis` are in
/// reduced row-echelon form, so two subspaces are equal iff their bases are.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: &Field, ambient: usize) -> Subspace {
        Subspace {
            basis: Matrix::zeros(field, 0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: &Field, ambient: usize) -> Subspace {
        Subspace {
            basis: Matrix::identity(field, ambient),
            pivots: (0..ambient).collect(),
        }
    }

    /// Span of the given vectors.
    pub fn span(field: &Field, ambient: usize, vectors: &[Vec<Scalar>]) -> Subspace {
        let m = Matrix::from_rows(field, ambient, vectors.to_vec());
        Subspace::row_space(&m)
    }

    pub fn row_space(m: &Matrix) -> Subspace {
        let rr = m.rref();
        let rank = rr.rank();
        let basis = Matrix::from_rows(
            m.field(),
            m.cols(),
            (0..rank).map(|r| rr.reduced.row(r).to_vec()).collect(),
        );
        Subspace {
            basis,
            pivots: rr.pivots,
        }
    }

    /// Column space of `m`.
    pub fn column_space(m: &Matrix) -> Subspace {
        Subspace::row_space(&m.transpose())
    }

    /// Kernel of `m` acting on column vectors.
    pub fn kernel(m: &Matrix) -> Subspace {
        let ns = m.nullspace();
        Subspace::span(m.field(), m.cols(), &ns)
    }

    pub fn field(&self) -> &Field {
        self.basis.field()
    }

    pub fn ambient(&self) -> usize {
        self.basis.cols()
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Scalar>> {
        self.basis.row_vectors()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates that are not pivots, in increasing order.
    pub fn non_pivots(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient()];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient()).filter(|&c| !is_pivot[c]).collect()
    }

    /// `v` minus its component along the basis, read off at the pivots.
    /// The result vanishes at every pivot coordinate.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        let f = self.field();
        let mut out = v.to_vec();
        for (r, &p) in self.pivots.iter().enumerate() {
            if !f.is_zero(&out[p]) {
                let c = f.neg(&out[p]);
                vector::axpy(f, &mut out, &c, self.basis.row(r));
            }
        }
        out
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        vector::is_zero(self.field(), &self.reduce(v))
    }

    pub fn contains_all(&self, vs: &[Vec<Scalar>]) -> bool {
        vs.iter().all(|v| self.contains(v))
    }

    /// Coordinates of `v` in the RREF basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        (0..self.dim()).all(|r| other.contains(self.basis.row(r)))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        Subspace::row_space(&self.basis.vstack(&other.basis))
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        // x A = y B  ⇔  [x, -y] [A; B] = 0
        let f = self.field();
        let stacked = self.basis.vstack(&other.basis.scale(&f.neg(&f.one())));
        let left_kernel = stacked.transpose().nullspace();
        let vecs: Vec<Vec<Scalar>> = left_kernel
            .iter()
            .map(|c| self.basis.vec_mul(&c[..self.dim()]))
            .collect();
        Subspace::span(f, self.ambient(), &vecs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sum_and_intersection() {
        let f = Field::rationals();
        let e = |i| vector::unit(&f, 3, i);
        let a = Subspace::span(&f, 3, &[e(0), e(1)]);
        let b = Subspace::span(&f, 3, &[e(1), e(2)]);
        assert_eq!(a.sum(&b).dim(), 3);
        let i = a.intersection(&b);
        assert_eq!(i, Subspace::span(&f, 3, &[e(1)]));
        assert!(i.is_subspace_of(&a));
        assert_eq!(a.non_pivots(), vec![2]);
    }
}
