//! Exact arithmetic: fields, vectors, matrices, subspaces, polynomials and
//! sparse structure-constant tensors.

pub mod field;
pub mod matrix;
pub mod poly;
pub mod sparse;
pub mod subspace;
pub mod vector;

pub use field::{cyclotomic_polynomial, prime_factors, Field, FieldSpec, Scalar, ScalarOp, ScalarResult};
pub use matrix::{Matrix, Rref};
pub use poly::{factor_primefield_poly, find_roots, Factorization, Poly, RootSearch};
pub use sparse::{SparseMatrix, SparseTensor3};
pub use subspace::Subspace;
