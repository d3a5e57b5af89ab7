//! One-dimensional representations (algebra maps to the ground field).

use super::Algebra;
use crate::error::{Error, Result};
use crate::kernel::{find_roots, vector, Matrix, Poly, Scalar, Subspace};
use crate::par;

/// Characters of an algebra as value vectors `χ(e_i)`, sorted.
/// `complete` is false when some minimal polynomial did not split over a
/// non-prime field; `offending` then holds that factor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterSet {
    pub values: Vec<Vec<Scalar>>,
    pub complete: bool,
    pub offending: Option<String>,
}

/// Enumerates characters: abelianize, then split the dual space of the
/// commutative quotient into joint eigenlines of the multiplication operators.
pub fn characters(a: &Algebra) -> Result<CharacterSet> {
    let f = a.field().clone();
    let ideal = a.commutator_ideal();
    if ideal.dim() == a.dim() {
        return Ok(CharacterSet {
            values: Vec::new(),
            complete: true,
            offending: None,
        });
    }
    let q = a.quotient(&ideal)?;
    let b = &q.algebra;
    let m = b.dim();
    // right action of L_{b_j} on functionals (row vectors)
    let ops: Vec<Matrix> = (0..m).map(|j| b.left_mult_matrix(&b.basis_vector(j))).collect();

    let mut leaves = Vec::new();
    let mut complete = true;
    let mut offending = None;
    let mut stack = vec![(Subspace::full(&f, m), 0usize)];
    while let Some((w, j)) = stack.pop() {
        if w.dim() == 0 {
            continue;
        }
        if j == m {
            leaves.push(w);
            continue;
        }
        let basis = w.basis_vectors();
        let r = basis.len();
        // coordinates of (row_i · L_j) in the basis of w
        let images: Vec<Vec<Scalar>> = basis.iter().map(|v| ops[j].vec_mul(v)).collect();
        let restricted = Matrix::from_rows(
            &f,
            r,
            images
                .iter()
                .map(|v| w.coordinates(v).ok_or_else(|| Error::Structural("eigenspace not invariant".into())))
                .collect::<Result<Vec<_>>>()?,
        );
        let minpoly = minimal_polynomial(&restricted);
        let search = find_roots(&minpoly)?;
        if !search.splits() && !f.is_prime_field() && complete {
            complete = false;
            offending = Some(search.residual.to_string());
        }
        // push in reverse so roots are explored in sorted order
        for lambda in search.roots.iter().rev() {
            let shifted = restricted.sub(&Matrix::identity(&f, r).scale(lambda));
            let kernel = shifted.transpose().nullspace();
            let vecs: Vec<Vec<Scalar>> = kernel
                .iter()
                .map(|c| Matrix::from_rows(&f, m, basis.clone()).vec_mul(c))
                .collect();
            stack.push((Subspace::span(&f, m, &vecs), j + 1));
        }
    }

    let mut values = Vec::new();
    for leaf in leaves {
        for phi in leaf.basis_vectors() {
            let at_one = vector::dot(&f, &phi, b.unit());
            if f.is_zero(&at_one) {
                continue;
            }
            let phi = vector::scale(&f, &f.inv(&at_one)?, &phi);
            // pull back along the projection A → A/[A, A]
            values.push(q.projection.vec_mul(&phi));
        }
    }
    values.sort();
    values.dedup();
    for chi in &values {
        if let Some(w) = character_violation(a, chi) {
            return Err(Error::Structural(format!("computed character fails at {w:?}")));
        }
    }
    Ok(CharacterSet {
        values,
        complete,
        offending,
    })
}

/// Checks a user-supplied list of candidate characters on all basis pairs.
pub fn verify_characters(a: &Algebra, candidates: &[Vec<Scalar>]) -> Result<CharacterSet> {
    for (n, chi) in candidates.iter().enumerate() {
        if chi.len() != a.dim() {
            return Err(Error::Dimension(format!("character {n} has length {}", chi.len())));
        }
        if let Some(w) = character_violation(a, chi) {
            return Err(Error::Structural(format!("candidate {n} is not multiplicative at {w:?}")));
        }
    }
    let mut values = candidates.to_vec();
    values.sort();
    values.dedup();
    Ok(CharacterSet {
        values,
        complete: false,
        offending: Some("user-supplied list".into()),
    })
}

/// First basis pair where `χ(e_i e_j) ≠ χ(e_i) χ(e_j)`, or `[]` if `χ(1) ≠ 1`.
pub(crate) fn character_violation(a: &Algebra, chi: &[Scalar]) -> Option<Vec<usize>> {
    let f = a.field();
    if !f.is_one(&vector::dot(f, chi, a.unit())) {
        return Some(vec![]);
    }
    let d = a.dim();
    par::find_first(d * d, |idx| {
        let (i, j) = (idx / d, idx % d);
        let mut lhs = f.zero();
        for (k, c) in a.basis_product(i, j) {
            lhs = f.add(&lhs, &f.mul(c, &chi[*k]));
        }
        (lhs != f.mul(&chi[i], &chi[j])).then(|| vec![i, j])
    })
}

/// Minimal polynomial of a square matrix, from the first linear dependency
/// among its powers.
pub(crate) fn minimal_polynomial(m: &Matrix) -> Poly {
    let f = m.field().clone();
    let n = m.rows();
    let flat = |x: &Matrix| -> Vec<Scalar> { (0..n).flat_map(|r| x.row(r).to_vec()).collect() };
    let mut powers = vec![flat(&Matrix::identity(&f, n))];
    let mut cur = Matrix::identity(&f, n);
    loop {
        cur = cur.mul(m);
        let target = flat(&cur);
        let cols = Matrix::from_columns(&f, n * n, &powers);
        if let Some(x) = cols.solve(&target) {
            let mut coeffs: Vec<Scalar> = x.iter().map(|c| f.neg(c)).collect();
            coeffs.push(f.one());
            return Poly::new(&f, coeffs);
        }
        powers.push(target);
    }
}
