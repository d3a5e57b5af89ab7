//! Small helpers on coefficient vectors.

use super::field::{Field, Scalar};

/// `y += a * x`
pub fn axpy(f: &Field, y: &mut [Scalar], a: &Scalar, x: &[Scalar]) {
    debug_assert_eq!(y.len(), x.len());
    for (yi, xi) in y.iter_mut().zip(x) {
        if !f.is_zero(xi) {
            *yi = f.add(yi, &f.mul(a, xi));
        }
    }
}

pub fn dot(f: &Field, x: &[Scalar], y: &[Scalar]) -> Scalar {
    let mut acc = f.zero();
    for (a, b) in x.iter().zip(y) {
        if !f.is_zero(a) && !f.is_zero(b) {
            acc = f.add(&acc, &f.mul(a, b));
        }
    }
    acc
}

pub fn scale(f: &Field, a: &Scalar, x: &[Scalar]) -> Vec<Scalar> {
    x.iter().map(|v| f.mul(a, v)).collect()
}

pub fn add(f: &Field, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    x.iter().zip(y).map(|(a, b)| f.add(a, b)).collect()
}

pub fn sub(f: &Field, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    x.iter().zip(y).map(|(a, b)| f.sub(a, b)).collect()
}

pub fn is_zero(f: &Field, x: &[Scalar]) -> bool {
    x.iter().all(|a| f.is_zero(a))
}

pub fn unit(f: &Field, n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![f.zero(); n];
    v[i] = f.one();
    v
}

/// Index of the first nonzero coordinate.
pub fn first_nonzero(f: &Field, x: &[Scalar]) -> Option<usize> {
    x.iter().position(|a| !f.is_zero(a))
}

/// `x ⊗ y` with `x_i y_j` at `i * len(y) + j`.
pub fn kron(f: &Field, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    x.iter().flat_map(|a| y.iter().map(move |b| f.mul(a, b))).collect()
}
