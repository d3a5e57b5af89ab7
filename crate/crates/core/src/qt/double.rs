//! The Drinfeld double on `(K*)^cop ⊗ K`.
//!
//! Basis `e^a ⊗ e_b` sits at `a * dim K + b`. The product is
//! `(f ⊗ h)(g ⊗ k) = f g' ⊗ h₂ k` with `g'(c) = g(S⁻¹(h₃) c h₁)`, and
//! `R = Σ_i (ε ⊗ e_i) ⊗ (e^i ⊗ 1)`.

use std::collections::HashMap;
use std::sync::Arc;

use super::{verify_rmatrix, QTStructure, SOLVE_LIMIT};
use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::hopf::{antipode_holds, HopfAlgebra, Tensor};
use crate::kernel::{vector, Matrix, Scalar, SparseTensor3};
use crate::par;

pub fn double_basis_index(dim: usize, a: usize, b: usize) -> usize {
    a * dim + b
}

pub fn drinfeld_double(k: &HopfAlgebra) -> Result<QTStructure> {
    let f = k.field().clone();
    let d = k.dim();
    let n = d * d;
    let s_inv = k.antipode_inverse()?;
    let dual = k.dual();

    // Δ²(e_b) as (b1, b2, b3, c)
    let delta2: Vec<Vec<(usize, usize, usize, Scalar)>> = (0..d)
        .map(|b| {
            let t = k.delta_leg(&k.coproduct(&k.basis_vector(b)), 0);
            t.terms()
                .map(|(idx, c)| {
                    let p = t.split_index(idx);
                    (p[0], p[1], p[2], c.clone())
                })
                .collect()
        })
        .collect();

    // X[(b1, b3)][c][m] = coefficient of e_c in S⁻¹(e_b3) e_m e_b1
    let mut conj: HashMap<(usize, usize), Matrix> = HashMap::new();
    for terms in &delta2 {
        for (b1, _, b3, _) in terms {
            conj.entry((*b1, *b3)).or_insert_with(|| {
                let left = s_inv.column(*b3);
                let cols: Vec<Vec<Scalar>> = (0..d)
                    .map(|m| k.mul(&k.mul(&left, &k.basis_vector(m)), &k.basis_vector(*b1)))
                    .collect();
                Matrix::from_columns(&f, d, &cols)
            });
        }
    }

    // G[b][c] = Σ coef · g'_{c,b1,b3} ⊗ e_b2 as terms (m, b2, coef)
    let moved: Vec<Vec<Vec<(usize, usize, Scalar)>>> = par::map_range(d, |b| {
        (0..d)
            .map(|c| {
                let mut acc: HashMap<(usize, usize), Scalar> = HashMap::new();
                for (b1, b2, b3, coef) in &delta2[b] {
                    let x = &conj[&(*b1, *b3)];
                    for m in 0..d {
                        let v = x.get(c, m);
                        if f.is_zero(v) {
                            continue;
                        }
                        let e = acc.entry((m, *b2)).or_insert_with(|| f.zero());
                        *e = f.add(e, &f.mul(coef, v));
                    }
                }
                let mut terms: Vec<(usize, usize, Scalar)> = acc
                    .into_iter()
                    .filter(|(_, v)| !f.is_zero(v))
                    .map(|((m, b2), v)| (m, b2, v))
                    .collect();
                terms.sort();
                terms
            })
            .collect()
    });

    let mut unit = vec![f.zero(); n];
    for a in 0..d {
        for b in 0..d {
            unit[a * d + b] = f.mul(&k.counit()[a], &k.unit()[b]);
        }
    }
    let algebra = Algebra::from_fn(&f, n, unit, |s, t| {
        let (a, b) = (s / d, s % d);
        let (c, kk) = (t / d, t % d);
        let mut out = vec![f.zero(); n];
        for (m, b2, coef) in &moved[b][c] {
            for (p, cp) in dual.algebra().basis_product(a, *m) {
                for (q, cq) in k.algebra().basis_product(*b2, kk) {
                    let idx = p * d + q;
                    out[idx] = f.add(&out[idx], &f.mul(coef, &f.mul(cp, cq)));
                }
            }
        }
        out
    })?;

    let mut comul = SparseTensor3::cube(n);
    for a in 0..d {
        // Δ_{K*}(e^a) = Σ mul[j, kk, a] e^j ⊗ e^kk; the cop swaps them
        let dual_terms: Vec<(usize, usize, Scalar)> = k
            .algebra()
            .mul_tensor()
            .iter()
            .filter(|t| t.2 == a)
            .map(|(j, kk, _, c)| (j, kk, c.clone()))
            .collect();
        for b in 0..d {
            for (j, kk, c1) in &dual_terms {
                for (pq, c2) in k.basis_coproduct(b) {
                    let (p, q) = (pq / d, pq % d);
                    comul.add(&f, a * d + b, kk * d + p, j * d + q, &f.mul(c1, c2));
                }
            }
        }
    }
    let counit: Vec<Scalar> = (0..n).map(|s| f.mul(&k.unit()[s / d], &k.counit()[s % d])).collect();
    let hopf = HopfAlgebra::from_parts(format!("double({})", k.name()), algebra, comul, counit, None)?;

    // S(f ⊗ h) = (ε ⊗ S h)((S*)⁻¹ f ⊗ 1)
    let s = k.antipode();
    let eps_coords = k.counit().to_vec();
    let cols: Vec<Vec<Scalar>> = par::map_range(n, |idx| {
        let (a, b) = (idx / d, idx % d);
        let left = pure_coords(&f, &eps_coords, &s.column(b));
        let inv_dual = s_inv.row(a).to_vec();
        let right = pure_coords(&f, &inv_dual, k.unit());
        hopf.mul(&left, &right)
    });
    let candidate = hopf.with_antipode(Matrix::from_columns(&f, n, &cols));
    let hopf = if antipode_holds(&candidate) {
        candidate
    } else if n <= SOLVE_LIMIT {
        hopf.with_computed_antipode()?
    } else {
        return Err(Error::Structural("double antipode candidate failed".into()));
    };
    let hopf = Arc::new(hopf);

    let mut r = Tensor::zero(&[n, n]);
    for i in 0..d {
        let left = pure_coords(&f, &eps_coords, &k.basis_vector(i));
        let right = pure_coords(&f, &vector::unit(&f, d, i), k.unit());
        r = r.add(&f, &Tensor::pure(&f, &[&left, &right]));
    }
    verify_rmatrix(&hopf, &r)
}

/// Coordinates of `φ ⊗ h` in the double's basis.
fn pure_coords(f: &crate::kernel::Field, phi: &[Scalar], h: &[Scalar]) -> Vec<Scalar> {
    let d = h.len();
    let mut out = vec![f.zero(); d * d];
    for (a, x) in phi.iter().enumerate() {
        if f.is_zero(x) {
            continue;
        }
        for (b, y) in h.iter().enumerate() {
            out[a * d + b] = f.mul(x, y);
        }
    }
    out
}
