//! Linear maps out of the dual determined by R: `Φ`, `Φ_τ`, `l`, `r`.
//!
//! Functionals are written in dual-basis coordinates, so each map is a
//! matrix with one column per dual basis vector.

use super::{monodromy, QTStructure};
use crate::error::Result;
use crate::hopf::{is_normal_left_coideal_subalgebra, HopfAlgebra, HopfMorphism};
use crate::kernel::{vector, Matrix, Scalar, Subspace};
use crate::par;
use crate::report::Report;

#[derive(Clone, Debug)]
pub struct PhiMaps {
    /// `f ↦ (f ⊗ id)(R₂₁R)`, `dim H × dim K`.
    pub phi: Matrix,
    /// `f ↦ (id ⊗ f)(R₂₁R)`.
    pub phi_tau: Matrix,
    pub image: Subspace,
    pub image_tau: Subspace,
    pub rank: usize,
    pub rank_tau: usize,
    /// Normal left coideal subalgebra clauses for `image`.
    pub coideal: Report,
}

/// `Φ` and `Φ_τ`, optionally precomposed with `π^*` for `π: H → K`.
pub fn phi_maps(q: &QTStructure, pi: Option<&HopfMorphism>) -> Result<PhiMaps> {
    let h = q.hopf();
    let m = monodromy(q).to_matrix(h.field());
    let (phi, phi_tau) = match pi {
        None => (m.transpose(), m.clone()),
        Some(p) => (p.matrix.mul(&m).transpose(), m.mul(&p.matrix.transpose())),
    };
    let image = Subspace::column_space(&phi);
    let image_tau = Subspace::column_space(&phi_tau);
    let coideal = is_normal_left_coideal_subalgebra(h, &image);
    Ok(PhiMaps {
        rank: image.dim(),
        rank_tau: image_tau.dim(),
        phi,
        phi_tau,
        image,
        image_tau,
        coideal,
    })
}

#[derive(Clone, Debug)]
pub struct LrMaps {
    /// `f ↦ (f ⊗ id)(R)`.
    pub l: Matrix,
    /// `f ↦ (id ⊗ f)(R)`.
    pub r: Matrix,
    pub l_image: Subspace,
    pub r_image: Subspace,
    pub full_rank: bool,
    /// First dual/basis pair violating the commutation identity, if any.
    pub lem_comm: Option<Vec<usize>>,
    /// `l(fg) = l(f) l(g)` and `l(ε) = 1`.
    pub algebra_map: bool,
    /// `Δ l(f) = l(f₂) ⊗ l(f₁)`.
    pub anti_coalgebra_map: bool,
}

/// `l`, `r` and their self-tests. With `π`, the domain is `K^*` via `f ↦ f ∘ π`.
pub fn lr_maps(q: &QTStructure, pi: Option<&HopfMorphism>) -> Result<LrMaps> {
    let h = q.hopf();
    let rm = q.r_matrix();
    let (l, r) = match pi {
        None => (rm.transpose(), rm.clone()),
        Some(p) => (p.matrix.mul(&rm).transpose(), rm.mul(&p.matrix.transpose())),
    };
    let l_image = Subspace::column_space(&l);
    let r_image = Subspace::column_space(&r);
    let full_rank = l_image.dim() == h.dim();
    let lt = rm.transpose();
    let lem_comm = lem_comm_violation(h, &lt);
    let algebra_map = l_is_algebra_map(h, &lt);
    let anti_coalgebra_map = l_is_anti_coalgebra_map(h, &lt);
    Ok(LrMaps {
        l,
        r,
        l_image,
        r_image,
        full_rank,
        lem_comm,
        algebra_map,
        anti_coalgebra_map,
    })
}

/// `f ⇀ h = h₁ f(h₂)` for `f = e^a`, `h = e_b`.
fn hit_left(h: &HopfAlgebra, a: usize, b: usize) -> Vec<Scalar> {
    let f = h.field();
    let mut out = h.zero_vector();
    for (pq, c) in h.basis_coproduct(b) {
        if pq % h.dim() == a {
            vector::axpy(f, &mut out, c, &h.basis_vector(pq / h.dim()));
        }
    }
    out
}

/// `h ↼ f = f(h₁) h₂` for `f = e^a`, `h = e_b`.
fn hit_right(h: &HopfAlgebra, b: usize, a: usize) -> Vec<Scalar> {
    let f = h.field();
    let mut out = h.zero_vector();
    for (pq, c) in h.basis_coproduct(b) {
        if pq / h.dim() == a {
            vector::axpy(f, &mut out, c, &h.basis_vector(pq % h.dim()));
        }
    }
    out
}

/// Checks `(f₁ ⇀ h) l(f₂) = l(f₁)(h ↼ f₂)` for all dual basis `f` and basis `h`.
/// `l` is the `dim × dim` matrix of `f ↦ (f ⊗ id)(R)`.
pub fn lem_comm_violation(h: &HopfAlgebra, l: &Matrix) -> Option<Vec<usize>> {
    let f = h.field();
    let d = h.dim();
    let l_cols: Vec<Vec<Scalar>> = l.columns();
    par::find_first(d * d, |ab| {
        let (a, b) = (ab / d, ab % d);
        let mut lhs = h.zero_vector();
        let mut rhs = h.zero_vector();
        // Δ(e^a) = Σ mul[j, k, a] e^j ⊗ e^k
        for (j, k, _, c) in h.algebra().mul_tensor().iter().filter(|t| t.2 == a) {
            let left = h.mul(&hit_left(h, j, b), &l_cols[k]);
            vector::axpy(f, &mut lhs, c, &left);
            let right = h.mul(&l_cols[j], &hit_right(h, b, k));
            vector::axpy(f, &mut rhs, c, &right);
        }
        (lhs != rhs).then(|| vec![a, b])
    })
}

fn l_is_algebra_map(h: &HopfAlgebra, l: &Matrix) -> bool {
    let f = h.field();
    let d = h.dim();
    let cols = l.columns();
    if l.mul_vec(h.counit()) != h.unit() {
        return false;
    }
    par::find_first(d * d, |ac| {
        let (a, c) = (ac / d, ac % d);
        // e^a e^c = Σ_n comul[n, a, c] e^n
        let mut lhs = h.zero_vector();
        for (n, (pq, coef)) in (0..d).flat_map(|n| h.basis_coproduct(n).iter().map(move |t| (n, t))) {
            if *pq == a * d + c {
                vector::axpy(f, &mut lhs, coef, &cols[n]);
            }
        }
        (lhs != h.mul(&cols[a], &cols[c])).then_some(())
    })
    .is_none()
}

fn l_is_anti_coalgebra_map(h: &HopfAlgebra, l: &Matrix) -> bool {
    let f = h.field();
    let d = h.dim();
    let cols = l.columns();
    par::find_first(d, |a| {
        let lhs = h.coproduct(&cols[a]);
        let mut rhs = crate::hopf::Tensor::zero(&[d, d]);
        for (j, k, _, c) in h.algebra().mul_tensor().iter().filter(|t| t.2 == a) {
            let t = crate::hopf::Tensor::pure(f, &[&cols[k], &cols[j]]).scale(f, c);
            rhs = rhs.add(f, &t);
        }
        (lhs != rhs).then_some(())
    })
    .is_none()
}
