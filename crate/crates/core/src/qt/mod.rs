//! R-matrices and constructions built from them.
//!
//! An element of `H ⊗ H` is a two-leg [`Tensor`]; `R = Σ R_i ⊗ R^i` has
//! `R_i` on leg 0.

mod double;
mod maps;
mod ribbon;
mod transmute;
mod twist;

use std::sync::Arc;

pub use double::{double_basis_index, drinfeld_double};
pub use maps::{lem_comm_violation, lr_maps, phi_maps, LrMaps, PhiMaps};
pub use ribbon::ribbon_check;
pub use transmute::{braided_dual, check_underline_pi, transmute, BraidedDual, BraidedHopfData};
pub use twist::{apply_twist, twisted_antipode, verify_twist, verify_twist_with_inverse, Twist};

use crate::error::{Error, Result};
use crate::hopf::{HopfAlgebra, HopfMorphism, Tensor};
use crate::kernel::{Matrix, Scalar};
use crate::par;
use crate::report::{Check, Report};

/// Dimension of `H` up to which elements of `H ⊗ H` are inverted by a
/// regular-representation solve when no hint is available.
pub const SOLVE_LIMIT: usize = 16;

/// An element of `H ⊗ H` bound to its host.
#[derive(Clone, Debug)]
pub struct TensorSquare {
    pub host: Arc<HopfAlgebra>,
    pub tensor: Tensor,
}

impl TensorSquare {
    pub fn new(host: Arc<HopfAlgebra>, tensor: Tensor) -> TensorSquare {
        let d = host.dim();
        assert_eq!(tensor.dims(), &[d, d]);
        TensorSquare { host, tensor }
    }

    pub fn from_matrix(host: Arc<HopfAlgebra>, m: &Matrix) -> TensorSquare {
        TensorSquare::new(host, Tensor::from_matrix(m))
    }

    pub fn one(host: Arc<HopfAlgebra>) -> TensorSquare {
        let t = host.one_tensor(2);
        TensorSquare::new(host, t)
    }

    /// `ρ` with `self = Σ ρ_ij e_i ⊗ e_j`.
    pub fn matrix(&self) -> Matrix {
        self.tensor.to_matrix(self.host.field())
    }

    pub fn mul(&self, other: &TensorSquare) -> TensorSquare {
        TensorSquare::new(self.host.clone(), self.host.tmul(&self.tensor, &other.tensor))
    }

    pub fn flip(&self) -> TensorSquare {
        TensorSquare::new(self.host.clone(), self.tensor.flip(self.host.field()))
    }

    pub fn inverse(&self, hint: Option<&Tensor>) -> Result<TensorSquare> {
        invert(&self.host, &self.tensor, hint).map(|t| TensorSquare::new(self.host.clone(), t))
    }
}

/// Places an element with `t.legs()` legs into `n` legs: leg `i` of `t`
/// goes to position `positions[i]`, the remaining positions carry 1.
pub fn embed(h: &HopfAlgebra, t: &Tensor, positions: &[usize], n: usize) -> Tensor {
    let f = h.field();
    let k = t.legs();
    assert_eq!(positions.len(), k);
    let mut padded = t.clone();
    for _ in k..n {
        padded = padded.outer(f, &Tensor::from_vector(f, &[h.dim()], h.unit()));
    }
    let mut perm = vec![usize::MAX; n];
    for (i, &p) in positions.iter().enumerate() {
        perm[p] = i;
    }
    let mut next = k;
    for slot in perm.iter_mut() {
        if *slot == usize::MAX {
            *slot = next;
            next += 1;
        }
    }
    padded.permute(f, &perm)
}

/// Inverse of `t` in `H ⊗ H`. A hint is accepted only if it is a
/// two-sided inverse; otherwise the left-regular representation is solved
/// for `dim H ≤ SOLVE_LIMIT`.
pub fn invert(h: &HopfAlgebra, t: &Tensor, hint: Option<&Tensor>) -> Result<Tensor> {
    let one = h.one_tensor(t.legs());
    if let Some(c) = hint {
        if h.tmul(t, c) == one && h.tmul(c, t) == one {
            return Ok(c.clone());
        }
    }
    let size = t.size();
    if h.dim() > SOLVE_LIMIT {
        return Err(Error::NotInvertible(format!(
            "no valid inverse hint and dimension {} exceeds the solve limit",
            h.dim()
        )));
    }
    let f = h.field();
    let dims = t.dims().to_vec();
    let cols: Vec<Vec<Scalar>> = par::map_range(size, |idx| {
        h.tmul(t, &Tensor::from_terms(f, &dims, [(idx, f.one())])).to_vector(f)
    });
    let left = Matrix::from_columns(f, size, &cols);
    let sol = left
        .solve(&one.to_vector(f))
        .ok_or_else(|| Error::NotInvertible("left multiplication is singular".into()))?;
    let inv = Tensor::from_vector(f, &dims, &sol);
    if h.tmul(&inv, t) != one {
        return Err(Error::NotInvertible("right inverse is not a left inverse".into()));
    }
    Ok(inv)
}

/// A verified (or rejected) quasitriangular structure.
#[derive(Clone, Debug)]
pub struct QTStructure {
    hopf: Arc<HopfAlgebra>,
    r: Tensor,
    r_inv: Tensor,
    pub report: Report,
    pub verified: bool,
    pub triangular: bool,
    pub factorizable: bool,
    pub full_rank: bool,
}

impl QTStructure {
    pub fn hopf(&self) -> &Arc<HopfAlgebra> {
        &self.hopf
    }

    pub fn r(&self) -> &Tensor {
        &self.r
    }

    pub fn r_inv(&self) -> &Tensor {
        &self.r_inv
    }

    pub fn r_square(&self) -> TensorSquare {
        TensorSquare::new(self.hopf.clone(), self.r.clone())
    }

    pub fn r_matrix(&self) -> Matrix {
        self.r.to_matrix(self.hopf.field())
    }

    /// `(K, (π ⊗ π)(R))` for a surjective Hopf map `π: H → K`.
    pub fn push_forward(&self, pi: &HopfMorphism) -> Result<QTStructure> {
        verify_rmatrix(&pi.target, &pi.apply_tensor(&self.r))
    }
}

/// Checks invertibility, `(Δ ⊗ id)R = R₁₃R₂₃`, `(id ⊗ Δ)R = R₁₃R₁₂` and
/// `Δ^op(h) R = R Δ(h)` on basis elements. Non-invertible R is an error;
/// axiom failures are report content.
pub fn verify_rmatrix(h: &Arc<HopfAlgebra>, r: &Tensor) -> Result<QTStructure> {
    let d = h.dim();
    if r.dims() != [d, d] {
        return Err(Error::Dimension(format!("R has shape {:?} for dimension {d}", r.dims())));
    }
    let hint = h.antipode_leg(r, 0);
    let r_inv = invert(h, r, Some(&hint))?;
    let mut report = Report::new();

    let r13 = embed(h, r, &[0, 2], 3);
    let r23 = embed(h, r, &[1, 2], 3);
    let r12 = embed(h, r, &[0, 1], 3);
    report.push(Check::from_bool(
        "delta_left",
        h.delta_leg(r, 0) == h.tmul(&r13, &r23),
        "(Δ ⊗ id)R ≠ R13 R23",
    ));
    report.push(Check::from_bool(
        "delta_right",
        h.delta_leg(r, 1) == h.tmul(&r13, &r12),
        "(id ⊗ Δ)R ≠ R13 R12",
    ));
    let f = h.field();
    let quasi = par::find_first(d, |i| {
        let delta = h.coproduct(&h.basis_vector(i));
        (h.tmul(&delta.flip(f), r) != h.tmul(r, &delta)).then(|| vec![i])
    });
    report.push(Check::from_witness("quasi_cocommutative", quasi));

    let verified = report.passed();
    let mono = monodromy_of_tensor(h, r);
    let triangular = mono == h.one_tensor(2);
    let (factorizable, full_rank) = if verified {
        let m = mono.to_matrix(f);
        (m.rank() == d, r.to_matrix(f).rank() == d)
    } else {
        (false, false)
    };
    Ok(QTStructure {
        hopf: h.clone(),
        r: r.clone(),
        r_inv,
        report,
        verified,
        triangular,
        factorizable,
        full_rank,
    })
}

/// `R₂₁ R` for a raw tensor.
pub fn monodromy_of_tensor(h: &HopfAlgebra, r: &Tensor) -> Tensor {
    h.tmul(&r.flip(h.field()), r)
}

/// `R₂₁ R`.
pub fn monodromy(q: &QTStructure) -> Tensor {
    monodromy_of_tensor(&q.hopf, &q.r)
}

/// `R₁₂ R₁₃ R₂₃ = R₂₃ R₁₃ R₁₂`.
pub fn yang_baxter_holds(q: &QTStructure) -> bool {
    let h = &q.hopf;
    let (r12, r13, r23) = (embed(h, &q.r, &[0, 1], 3), embed(h, &q.r, &[0, 2], 3), embed(h, &q.r, &[1, 2], 3));
    h.tmul(&h.tmul(&r12, &r13), &r23) == h.tmul(&h.tmul(&r23, &r13), &r12)
}

/// Convenience: the trivial R-matrix `1 ⊗ 1`.
pub fn trivial_r(h: &HopfAlgebra) -> Tensor {
    h.one_tensor(2)
}

pub fn is_factorizable(q: &QTStructure) -> Result<bool> {
    let maps = phi_maps(q, None)?;
    if maps.rank != maps.rank_tau {
        return Err(Error::Structural(format!(
            "rank Φ = {} but rank Φ_τ = {}",
            maps.rank, maps.rank_tau
        )));
    }
    Ok(maps.rank == q.hopf.dim())
}
