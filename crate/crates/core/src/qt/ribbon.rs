use super::{monodromy, QTStructure};
use crate::hopf::Tensor;
use crate::kernel::Scalar;
use crate::report::{Check, Report};

/// Ribbon conditions for a candidate `θ`. The coproduct identity
/// `Δ(θ) = (R₂₁R)⁻¹(θ ⊗ θ)` is checked as `R₂₁R Δ(θ) = θ ⊗ θ`.
pub fn ribbon_check(q: &QTStructure, theta: &[Scalar]) -> Report {
    let h = q.hopf();
    let f = h.field();
    let mut report = Report::new();
    let center = h.algebra().center();
    report.push(Check::from_bool("central", center.contains(theta), "θ is not central"));
    report.push(Check::from_bool("counit", f.is_one(&h.eps(theta)), "ε(θ) ≠ 1"));
    report.push(Check::from_bool("antipode_fixed", h.apply_antipode(theta) == theta, "S(θ) ≠ θ"));
    let lhs = h.tmul(&monodromy(q), &h.coproduct(theta));
    let rhs = Tensor::pure(f, &[theta, theta]);
    report.push(Check::from_bool("coproduct", lhs == rhs, "Δ(θ) ≠ (R₂₁R)⁻¹(θ ⊗ θ)"));
    report
}
