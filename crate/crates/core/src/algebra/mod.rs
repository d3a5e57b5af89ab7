//! Finite-dimensional associative algebras given by structure constants.

mod characters;

pub use characters::{characters, verify_characters, CharacterSet};

use crate::error::{Error, Result};
use crate::kernel::{vector, Field, Matrix, Scalar, SparseTensor3, Subspace};
use crate::par;
use crate::report::{Check, Report};

/// `e_i e_j = Σ_k mul[i, j, k] e_k` together with the coordinates of 1.
#[derive(Clone, Debug)]
pub struct Algebra {
    field: Field,
    dim: usize,
    mul: SparseTensor3,
    unit: Vec<Scalar>,
    // products of basis pairs at index i * dim + j
    table: Vec<Vec<(usize, Scalar)>>,
}

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.dim == other.dim && self.mul == other.mul && self.unit == other.unit
    }
}

impl Algebra {
    pub fn new(field: &Field, mul: SparseTensor3, unit: Vec<Scalar>) -> Result<Algebra> {
        let (d0, d1, d2) = mul.dims();
        if d0 != d1 || d1 != d2 || unit.len() != d0 {
            return Err(Error::Dimension(format!(
                "multiplication tensor {:?} with unit of length {}",
                mul.dims(),
                unit.len()
            )));
        }
        let dim = d0;
        let mut table = vec![Vec::new(); dim * dim];
        for (i, j, k, c) in mul.iter() {
            table[i * dim + j].push((k, c.clone()));
        }
        Ok(Algebra {
            field: field.clone(),
            dim,
            mul,
            unit,
            table,
        })
    }

    /// Builds the multiplication tensor from a product rule on basis pairs.
    pub fn from_fn(
        field: &Field,
        dim: usize,
        unit: Vec<Scalar>,
        product: impl Fn(usize, usize) -> Vec<Scalar> + Sync + Send,
    ) -> Result<Algebra> {
        let rows = par::map_range(dim * dim, |ij| product(ij / dim, ij % dim));
        let mut mul = SparseTensor3::cube(dim);
        for (ij, v) in rows.iter().enumerate() {
            for (k, c) in v.iter().enumerate() {
                mul.add(field, ij / dim, ij % dim, k, c);
            }
        }
        Algebra::new(field, mul, unit)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn mul_tensor(&self) -> &SparseTensor3 {
        &self.mul
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    /// Nonzero terms of `e_i e_j`.
    pub fn basis_product(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.table[i * self.dim + j]
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        vector::unit(&self.field, self.dim, i)
    }

    pub fn zero_vector(&self) -> Vec<Scalar> {
        vec![self.field.zero(); self.dim]
    }

    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let f = &self.field;
        let mut out = self.zero_vector();
        for (i, a) in x.iter().enumerate() {
            if f.is_zero(a) {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if f.is_zero(b) {
                    continue;
                }
                let ab = f.mul(a, b);
                for (k, c) in self.basis_product(i, j) {
                    out[*k] = f.add(&out[*k], &f.mul(&ab, c));
                }
            }
        }
        out
    }

    /// Matrix of `y ↦ x y`.
    pub fn left_mult_matrix(&self, x: &[Scalar]) -> Matrix {
        let cols: Vec<Vec<Scalar>> = (0..self.dim).map(|j| self.mul(x, &self.basis_vector(j))).collect();
        Matrix::from_columns(&self.field, self.dim, &cols)
    }

    /// Matrix of `y ↦ y x`.
    pub fn right_mult_matrix(&self, x: &[Scalar]) -> Matrix {
        let cols: Vec<Vec<Scalar>> = (0..self.dim).map(|j| self.mul(&self.basis_vector(j), x)).collect();
        Matrix::from_columns(&self.field, self.dim, &cols)
    }

    pub fn power(&self, x: &[Scalar], e: usize) -> Vec<Scalar> {
        let mut acc = self.unit.clone();
        for _ in 0..e {
            acc = self.mul(&acc, x);
        }
        acc
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim).all(|i| (0..i).all(|j| self.basis_product(i, j) == self.basis_product(j, i)))
    }

    /// Opposite algebra.
    pub fn opposite(&self) -> Algebra {
        let mut mul = SparseTensor3::cube(self.dim);
        for (i, j, k, c) in self.mul.iter() {
            mul.add(&self.field, j, i, k, c);
        }
        Algebra::new(&self.field, mul, self.unit.clone()).expect("same shape")
    }

    /// Smallest two-sided ideal containing `generators`, by iterating
    /// `span + A·span + span·A` until the dimension stops growing.
    pub fn ideal_closure(&self, generators: &[Vec<Scalar>]) -> Subspace {
        let mut span = Subspace::span(&self.field, self.dim, generators);
        loop {
            let basis = span.basis_vectors();
            let products: Vec<Vec<Vec<Scalar>>> = par::map_range(basis.len() * self.dim, |idx| {
                let (v, i) = (&basis[idx / self.dim], idx % self.dim);
                let e = self.basis_vector(i);
                vec![self.mul(&e, v), self.mul(v, &e)]
            });
            let mut all = basis.clone();
            all.extend(products.into_iter().flatten());
            let next = Subspace::span(&self.field, self.dim, &all);
            if next.dim() == span.dim() {
                return span;
            }
            span = next;
        }
    }

    /// Span of `{ a x : a ∈ A, x ∈ generators }`.
    pub fn left_ideal(&self, generators: &[Vec<Scalar>]) -> Subspace {
        let mut all = Vec::new();
        for v in generators {
            for i in 0..self.dim {
                all.push(self.mul(&self.basis_vector(i), v));
            }
        }
        Subspace::span(&self.field, self.dim, &all)
    }

    /// Two-sided ideal generated by all commutators `e_i e_j - e_j e_i`.
    pub fn commutator_ideal(&self) -> Subspace {
        let mut gens = Vec::new();
        for i in 0..self.dim {
            for j in (i + 1)..self.dim {
                let a = self.mul(&self.basis_vector(i), &self.basis_vector(j));
                let b = self.mul(&self.basis_vector(j), &self.basis_vector(i));
                let c = vector::sub(&self.field, &a, &b);
                if !vector::is_zero(&self.field, &c) {
                    gens.push(c);
                }
            }
        }
        self.ideal_closure(&gens)
    }

    /// Quotient by a two-sided ideal. The quotient basis is the set of
    /// non-pivot coordinates of the ideal's RREF.
    pub fn quotient(&self, ideal: &Subspace) -> Result<AlgebraQuotient> {
        let f = &self.field;
        let keep = ideal.non_pivots();
        let m = keep.len();
        let project = |v: &[Scalar]| -> Vec<Scalar> {
            let r = ideal.reduce(v);
            keep.iter().map(|&c| r[c].clone()).collect()
        };
        let projection = Matrix::from_columns(f, m, &(0..self.dim).map(|i| project(&self.basis_vector(i))).collect::<Vec<_>>());
        let section = Matrix::from_columns(f, self.dim, &keep.iter().map(|&c| self.basis_vector(c)).collect::<Vec<_>>());
        let algebra = Algebra::from_fn(f, m, project(&self.unit), |s, t| {
            project(&self.mul(&self.basis_vector(keep[s]), &self.basis_vector(keep[t])))
        })?;
        Ok(AlgebraQuotient {
            algebra,
            projection,
            section,
            kept: keep,
        })
    }

    /// Elements commuting with every basis element.
    pub fn center(&self) -> Subspace {
        // stack the maps x ↦ x e_j - e_j x
        let mut rows = Vec::new();
        for j in 0..self.dim {
            let e = self.basis_vector(j);
            let m = self.right_mult_matrix(&e).sub(&self.left_mult_matrix(&e));
            rows.extend(m.row_vectors());
        }
        let stacked = Matrix::from_rows(&self.field, self.dim, rows);
        Subspace::kernel(&stacked)
    }

    /// Subalgebra test: contains 1 and is closed under products of basis vectors.
    pub fn is_subalgebra(&self, s: &Subspace) -> Option<Vec<usize>> {
        if !s.contains(&self.unit) {
            return Some(vec![]);
        }
        let b = s.basis_vectors();
        par::find_first(b.len() * b.len(), |idx| {
            let (i, j) = (idx / b.len(), idx % b.len());
            (!s.contains(&self.mul(&b[i], &b[j]))).then(|| vec![i, j])
        })
    }
}

/// `A → A/I` with its section on the kept coordinates.
#[derive(Clone, Debug)]
pub struct AlgebraQuotient {
    pub algebra: Algebra,
    /// `dim(A/I) × dim(A)`
    pub projection: Matrix,
    /// `dim(A) × dim(A/I)`
    pub section: Matrix,
    pub kept: Vec<usize>,
}

/// Associativity and unit laws; each failure names the first basis triple (or index).
pub fn verify_algebra(a: &Algebra) -> Report {
    let d = a.dim();
    let mut report = Report::new();
    let assoc = par::find_first(d * d * d, |idx| {
        let (i, j, k) = (idx / (d * d), (idx / d) % d, idx % d);
        let (ei, ej, ek) = (a.basis_vector(i), a.basis_vector(j), a.basis_vector(k));
        let lhs = a.mul(&a.mul(&ei, &ej), &ek);
        let rhs = a.mul(&ei, &a.mul(&ej, &ek));
        (lhs != rhs).then(|| vec![i, j, k])
    });
    report.push(Check::from_witness("associativity", assoc));
    let unit = (0..d).find(|&i| {
        let e = a.basis_vector(i);
        a.mul(a.unit(), &e) != e || a.mul(&e, a.unit()) != e
    });
    report.push(Check::from_witness("unit", unit.map(|i| vec![i])));
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyclic(field: &Field, n: usize) -> Algebra {
        let mut unit = vec![field.zero(); n];
        unit[0] = field.one();
        Algebra::from_fn(field, n, unit, |i, j| vector::unit(field, n, (i + j) % n)).unwrap()
    }

    #[test]
    fn group_algebra_verifies_and_mutation_fails() {
        let f = Field::rationals();
        let a = cyclic(&f, 2);
        assert!(verify_algebra(&a).passed());
        let mut mul = a.mul_tensor().clone();
        // 1 · g = g becomes 1 · g = 0; then (1 · g) · g = 0 but 1 · (g · g) = 1
        mul.set(&f, 0, 1, 1, f.zero());
        let bad = Algebra::new(&f, mul, a.unit().to_vec()).unwrap();
        let r = verify_algebra(&bad);
        assert_eq!(r.get("associativity").unwrap().witness, Some(vec![0, 1, 1]));
        assert_eq!(r.get("unit").unwrap().witness, Some(vec![1]));
    }

    #[test]
    fn commutative_center_is_everything() {
        let f = Field::prime(7).unwrap();
        assert_eq!(cyclic(&f, 3).center().dim(), 3);
        assert_eq!(cyclic(&f, 3).commutator_ideal().dim(), 0);
    }
}
