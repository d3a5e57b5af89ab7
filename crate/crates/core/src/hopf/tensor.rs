//! Sparse elements of tensor products `A_1 ⊗ ... ⊗ A_n`.
//!
//! Basis tensors are addressed by a flat mixed-radix index with leg 0 the
//! most significant digit, so in `A ⊗ B` the tensor `e_i ⊗ e_j` sits at
//! `i * dim(B) + j`.

use std::collections::BTreeMap;

use crate::algebra::Algebra;
use crate::kernel::{Field, Matrix, Scalar};
use crate::par;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tensor {
    dims: Vec<usize>,
    terms: BTreeMap<usize, Scalar>,
}

impl Tensor {
    pub fn zero(dims: &[usize]) -> Tensor {
        Tensor {
            dims: dims.to_vec(),
            terms: BTreeMap::new(),
        }
    }

    /// Pure tensor of the given leg vectors.
    pub fn pure(field: &Field, legs: &[&[Scalar]]) -> Tensor {
        let mut t = Tensor::from_vector(field, &[legs[0].len()], legs[0]);
        for leg in &legs[1..] {
            t = t.outer(field, &Tensor::from_vector(field, &[leg.len()], leg));
        }
        t
    }

    /// One-leg tensor from a coefficient vector, or a multi-leg tensor from
    /// its flat coefficient vector.
    pub fn from_vector(field: &Field, dims: &[usize], v: &[Scalar]) -> Tensor {
        assert_eq!(v.len(), dims.iter().product::<usize>(), "vector length vs dims");
        let mut t = Tensor::zero(dims);
        for (i, c) in v.iter().enumerate() {
            t.add_term(field, i, c);
        }
        t
    }

    /// Two-leg tensor `Σ m[i][j] e_i ⊗ e_j`.
    pub fn from_matrix(m: &Matrix) -> Tensor {
        let mut t = Tensor::zero(&[m.rows(), m.cols()]);
        for r in 0..m.rows() {
            for c in 0..m.cols() {
                t.add_term(m.field(), r * m.cols() + c, m.get(r, c));
            }
        }
        t
    }

    pub fn from_terms(field: &Field, dims: &[usize], terms: impl IntoIterator<Item = (usize, Scalar)>) -> Tensor {
        let mut t = Tensor::zero(dims);
        for (i, c) in terms {
            t.add_term(field, i, &c);
        }
        t
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn legs(&self) -> usize {
        self.dims.len()
    }

    pub fn size(&self) -> usize {
        self.dims.iter().product()
    }

    pub fn nnz(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &Scalar)> {
        self.terms.iter().map(|(&i, c)| (i, c))
    }

    pub fn coeff(&self, field: &Field, idx: usize) -> Scalar {
        self.terms.get(&idx).cloned().unwrap_or_else(|| field.zero())
    }

    pub fn add_term(&mut self, field: &Field, idx: usize, c: &Scalar) {
        debug_assert!(idx < self.size());
        if field.is_zero(c) {
            return;
        }
        match self.terms.entry(idx) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = field.add(e.get(), c);
                if field.is_zero(&s) {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn to_vector(&self, field: &Field) -> Vec<Scalar> {
        let mut v = vec![field.zero(); self.size()];
        for (&i, c) in &self.terms {
            v[i] = c.clone();
        }
        v
    }

    /// Coefficient matrix of a two-leg tensor.
    pub fn to_matrix(&self, field: &Field) -> Matrix {
        assert_eq!(self.legs(), 2);
        let cols = self.dims[1];
        let mut m = Matrix::zeros(field, self.dims[0], cols);
        for (&i, c) in &self.terms {
            m.set(i / cols, i % cols, c.clone());
        }
        m
    }

    pub fn split_index(&self, mut idx: usize) -> Vec<usize> {
        let mut out = vec![0; self.dims.len()];
        for (leg, &d) in self.dims.iter().enumerate().rev() {
            out[leg] = idx % d;
            idx /= d;
        }
        out
    }

    pub fn join_index(dims: &[usize], parts: &[usize]) -> usize {
        parts.iter().zip(dims).fold(0, |acc, (&p, &d)| acc * d + p)
    }

    pub fn add(&self, field: &Field, other: &Tensor) -> Tensor {
        assert_eq!(self.dims, other.dims);
        let mut out = self.clone();
        for (&i, c) in &other.terms {
            out.add_term(field, i, c);
        }
        out
    }

    pub fn sub(&self, field: &Field, other: &Tensor) -> Tensor {
        self.add(field, &other.scale(field, &field.neg(&field.one())))
    }

    pub fn scale(&self, field: &Field, s: &Scalar) -> Tensor {
        let mut out = Tensor::zero(&self.dims);
        for (&i, c) in &self.terms {
            out.add_term(field, i, &field.mul(c, s));
        }
        out
    }

    /// `self ⊗ other`, legs concatenated.
    pub fn outer(&self, field: &Field, other: &Tensor) -> Tensor {
        let mut dims = self.dims.clone();
        dims.extend(&other.dims);
        let n = other.size();
        let mut out = Tensor::zero(&dims);
        for (&i, a) in &self.terms {
            for (&j, b) in &other.terms {
                out.add_term(field, i * n + j, &field.mul(a, b));
            }
        }
        out
    }

    /// Product in the tensor product algebra `algs[0] ⊗ ... ⊗ algs[n-1]`.
    pub fn mul(&self, other: &Tensor, algs: &[&Algebra]) -> Tensor {
        assert_eq!(self.dims, other.dims, "tensor product of mismatched shapes");
        assert_eq!(algs.len(), self.legs());
        let field = algs[0].field();
        let left: Vec<(usize, Scalar)> = self.terms.iter().map(|(&i, c)| (i, c.clone())).collect();
        let right: Vec<(Vec<usize>, Scalar)> = other
            .terms
            .iter()
            .map(|(&j, c)| (self.split_index(j), c.clone()))
            .collect();
        let partials: Vec<Tensor> = par::map_slice(&left, |(i, a)| {
            let ip = self.split_index(*i);
            let mut acc = Tensor::zero(&self.dims);
            for (jp, b) in &right {
                let ab = field.mul(a, b);
                // expand the per-leg products
                let mut partial: Vec<(usize, Scalar)> = vec![(0, ab)];
                for (leg, alg) in algs.iter().enumerate() {
                    let prod = alg.basis_product(ip[leg], jp[leg]);
                    if prod.is_empty() {
                        partial.clear();
                        break;
                    }
                    let d = self.dims[leg];
                    let mut next = Vec::with_capacity(partial.len() * prod.len());
                    for (idx, c) in &partial {
                        for (k, ck) in prod {
                            next.push((idx * d + k, field.mul(c, ck)));
                        }
                    }
                    partial = next;
                }
                for (idx, c) in partial {
                    acc.add_term(field, idx, &c);
                }
            }
            acc
        });
        let mut out = Tensor::zero(&self.dims);
        for p in partials {
            for (&i, c) in &p.terms {
                out.add_term(field, i, c);
            }
        }
        out
    }

    /// Replaces leg `leg` by the legs `new_dims`, sending basis vector `k`
    /// of that leg to `image(k)` (terms indexed by the flat index of the new legs).
    pub fn map_leg(
        &self,
        field: &Field,
        leg: usize,
        new_dims: &[usize],
        image: impl Fn(usize) -> Vec<(usize, Scalar)>,
    ) -> Tensor {
        let mut dims = self.dims[..leg].to_vec();
        dims.extend(new_dims);
        dims.extend(&self.dims[leg + 1..]);
        let tail: usize = self.dims[leg + 1..].iter().product();
        let mid: usize = new_dims.iter().product();
        let cache: Vec<Vec<(usize, Scalar)>> = (0..self.dims[leg]).map(&image).collect();
        let mut out = Tensor::zero(&dims);
        for (&i, c) in &self.terms {
            let t = i % tail;
            let k = (i / tail) % self.dims[leg];
            let h = i / tail / self.dims[leg];
            for (m, cm) in &cache[k] {
                out.add_term(field, (h * mid + m) * tail + t, &field.mul(c, cm));
            }
        }
        out
    }

    /// Applies a linear map (given as a matrix whose column `k` is the image
    /// of basis vector `k`) to one leg.
    pub fn apply_matrix(&self, leg: usize, m: &Matrix) -> Tensor {
        assert_eq!(m.cols(), self.dims[leg], "matrix does not fit leg {leg}");
        let f = m.field().clone();
        self.map_leg(&f, leg, &[m.rows()], |k| {
            (0..m.rows())
                .filter(|&r| !f.is_zero(m.get(r, k)))
                .map(|r| (r, m.get(r, k).clone()))
                .collect()
        })
    }

    /// Applies a functional to one leg, removing it.
    pub fn apply_functional(&self, field: &Field, leg: usize, phi: &[Scalar]) -> Tensor {
        self.map_leg(field, leg, &[], |k| {
            if field.is_zero(&phi[k]) {
                Vec::new()
            } else {
                vec![(0, phi[k].clone())]
            }
        })
    }

    /// Reorders legs: leg `i` of the result is leg `perm[i]` of `self`.
    pub fn permute(&self, field: &Field, perm: &[usize]) -> Tensor {
        assert_eq!(perm.len(), self.legs());
        let dims: Vec<usize> = perm.iter().map(|&p| self.dims[p]).collect();
        let mut out = Tensor::zero(&dims);
        for (&i, c) in &self.terms {
            let parts = self.split_index(i);
            let np: Vec<usize> = perm.iter().map(|&p| parts[p]).collect();
            out.add_term(field, Tensor::join_index(&dims, &np), c);
        }
        out
    }

    /// Two-leg flip `x ⊗ y ↦ y ⊗ x`.
    pub fn flip(&self, field: &Field) -> Tensor {
        self.permute(field, &[1, 0])
    }

    /// Inserts a new leg at position `pos` carrying the vector `v`.
    pub fn insert_leg(&self, field: &Field, pos: usize, v: &[Scalar]) -> Tensor {
        // tensor with v on the right, then move the last leg into place
        let t = self.outer(field, &Tensor::from_vector(field, &[v.len()], v));
        let n = t.legs();
        let mut perm: Vec<usize> = (0..n - 1).collect();
        perm.insert(pos, n - 1);
        t.permute(field, &perm)
    }

    /// Sum over terms of `f(leg indices) * coefficient`, collected into a tensor
    /// of shape `dims`. Useful for contractions not covered by the other helpers.
    pub fn contract(
        &self,
        field: &Field,
        dims: &[usize],
        f: impl Fn(&[usize]) -> Vec<(usize, Scalar)>,
    ) -> Tensor {
        let mut out = Tensor::zero(dims);
        for (&i, c) in &self.terms {
            for (j, cj) in f(&self.split_index(i)) {
                out.add_term(field, j, &field.mul(c, &cj));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::vector;

    #[test]
    fn permute_and_insert() {
        let f = Field::rationals();
        let a = vector::unit(&f, 2, 1);
        let b = vector::unit(&f, 3, 2);
        let t = Tensor::pure(&f, &[&a, &b]);
        assert_eq!(t.terms().next().unwrap().0, 3 + 2);
        let s = t.flip(&f);
        assert_eq!(s.dims(), &[3, 2]);
        assert_eq!(s.terms().next().unwrap().0, 2 * 2 + 1);
        let u = t.insert_leg(&f, 1, &vector::unit(&f, 4, 3));
        assert_eq!(u.dims(), &[2, 4, 3]);
        assert_eq!(u.split_index(u.terms().next().unwrap().0), vec![1, 3, 2]);
    }
}
