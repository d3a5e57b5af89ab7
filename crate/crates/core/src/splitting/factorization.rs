use crate::hopf::{is_normal_left_coideal_subalgebra, HopfAlgebra};
use crate::kernel::{Matrix, Scalar, Subspace};
use crate::report::Report;

/// Multiplication `L1 ⊗ L2 → H` on basis pairs.
#[derive(Clone, Debug)]
pub struct FactorizationWitness {
    pub l1: Subspace,
    pub l2: Subspace,
    /// Column `a * dim L2 + b` is `u_a v_b`.
    pub mult_map: Matrix,
    pub bijective: bool,
    pub reason: Option<String>,
    pub l1_normal: Report,
    pub l2_normal: Report,
}

pub fn exact_factorization(h: &HopfAlgebra, l1: &Subspace, l2: &Subspace) -> FactorizationWitness {
    let f = h.field();
    let (u, v) = (l1.basis_vectors(), l2.basis_vectors());
    let cols: Vec<Vec<Scalar>> = u.iter().flat_map(|a| v.iter().map(move |b| h.mul(a, b))).collect();
    let mult_map = Matrix::from_columns(f, h.dim(), &cols);
    let reason = if l1.dim() * l2.dim() != h.dim() {
        Some(format!("dim L1 · dim L2 = {} · {} ≠ {}", l1.dim(), l2.dim(), h.dim()))
    } else {
        let rank = mult_map.rank();
        (rank != h.dim()).then(|| format!("multiplication has rank {rank} < {}", h.dim()))
    };
    FactorizationWitness {
        l1: l1.clone(),
        l2: l2.clone(),
        mult_map,
        bijective: reason.is_none(),
        reason,
        l1_normal: is_normal_left_coideal_subalgebra(h, l1),
        l2_normal: is_normal_left_coideal_subalgebra(h, l2),
    }
}
