//! Twists `J ∈ H ⊗ H` and the twisted structures `Δ^J = J Δ J⁻¹`, `R^J = J₂₁ R J⁻¹`.

use super::{embed, invert};
use crate::error::{Error, Result};
use crate::hopf::{antipode_holds, HopfAlgebra, Tensor};
use crate::kernel::{Matrix, SparseTensor3};
use crate::report::{Check, Report};

#[derive(Clone, Debug)]
pub struct Twist {
    pub j: Tensor,
    pub j_inv: Tensor,
    /// `normalized_left`, `normalized_right`, `cocycle`.
    pub report: Report,
    /// Whether `(Δ ⊗ id)(J)(J ⊗ 1) = (id ⊗ Δ)(J)(1 ⊗ J)` also holds; this
    /// order is the one matching `J⁻¹ Δ J`, recorded for comparison only.
    pub reversed_cocycle: bool,
}

pub fn verify_twist(h: &HopfAlgebra, j: &Tensor) -> Result<Twist> {
    verify_twist_with_inverse(h, j, None)
}

/// As [`verify_twist`], trying `hint` as `J⁻¹` before solving.
pub fn verify_twist_with_inverse(h: &HopfAlgebra, j: &Tensor, hint: Option<&Tensor>) -> Result<Twist> {
    let d = h.dim();
    if j.dims() != [d, d] {
        return Err(Error::Dimension(format!("J has shape {:?} for dimension {d}", j.dims())));
    }
    let j_inv = invert(h, j, hint)?;
    let one = h.one_tensor(1);
    let mut report = Report::new();
    report.push(Check::from_bool(
        "normalized_left",
        h.eps_leg(j, 0) == one,
        "(ε ⊗ id)(J) ≠ 1",
    ));
    report.push(Check::from_bool(
        "normalized_right",
        h.eps_leg(j, 1) == one,
        "(id ⊗ ε)(J) ≠ 1",
    ));
    let j12 = embed(h, j, &[0, 1], 3);
    let j23 = embed(h, j, &[1, 2], 3);
    let dl = h.delta_leg(j, 0);
    let dr = h.delta_leg(j, 1);
    report.push(Check::from_bool(
        "cocycle",
        h.tmul(&j12, &dl) == h.tmul(&j23, &dr),
        "(J ⊗ 1)(Δ ⊗ id)(J) ≠ (1 ⊗ J)(id ⊗ Δ)(J)",
    ));
    let reversed_cocycle = h.tmul(&dl, &j12) == h.tmul(&dr, &j23);
    Ok(Twist {
        j: j.clone(),
        j_inv,
        report,
        reversed_cocycle,
    })
}

/// `U S(x) U⁻¹` with `U = J¹ S(J²)`. Verified by the caller.
pub fn twisted_antipode(h: &HopfAlgebra, tw: &Twist) -> Result<Matrix> {
    let f = h.field();
    let u = h.mul_legs(&h.antipode_leg(&tw.j, 1), 0).to_vector(f);
    let u_inv = h
        .algebra()
        .left_mult_matrix(&u)
        .solve(h.unit())
        .ok_or_else(|| Error::NotInvertible("U = J¹ S(J²) is not invertible".into()))?;
    let cols: Vec<_> = (0..h.dim())
        .map(|i| h.mul(&h.mul(&u, &h.antipode().column(i)), &u_inv))
        .collect();
    Ok(Matrix::from_columns(f, h.dim(), &cols))
}

/// `H^J` and, when given, `R^J = J₂₁ R J⁻¹`.
pub fn apply_twist(h: &HopfAlgebra, tw: &Twist, r: Option<&Tensor>) -> Result<(HopfAlgebra, Option<Tensor>)> {
    let f = h.field();
    let d = h.dim();
    let mut comul = SparseTensor3::cube(d);
    for i in 0..d {
        let t = h.tmul(&h.tmul(&tw.j, &h.coproduct(&h.basis_vector(i))), &tw.j_inv);
        for (jk, c) in t.terms() {
            comul.add(f, i, jk / d, jk % d, c);
        }
    }
    let twisted = HopfAlgebra::from_parts(
        format!("{}^J", h.name()),
        h.algebra().clone(),
        comul,
        h.counit().to_vec(),
        None,
    )?;
    let candidate = twisted.with_antipode(twisted_antipode(h, tw)?);
    let twisted = if antipode_holds(&candidate) {
        candidate
    } else if d <= super::SOLVE_LIMIT {
        twisted.with_computed_antipode()?
    } else {
        return Err(Error::Structural("twisted antipode candidate failed".into()));
    };
    let r_twisted = r.map(|r| h.tmul(&h.tmul(&tw.j.flip(f), r), &tw.j_inv));
    Ok((twisted, r_twisted))
}
