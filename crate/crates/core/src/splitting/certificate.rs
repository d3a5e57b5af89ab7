use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::factorization::FactorizationWitness;
use crate::error::Result;
use crate::hopf::{verify_morphism, HopfAlgebra, HopfMorphism, QuotientData, Tensor};
use crate::kernel::{Scalar, Subspace};
use crate::par;
use crate::qt::{apply_twist, monodromy_of_tensor, verify_twist_with_inverse};
use crate::report::{Check, Report};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SplitPath {
    Factorizable,
    FullRank,
    Double,
}

impl SplitPath {
    pub fn as_str(self) -> &'static str {
        match self {
            SplitPath::Factorizable => "factorizable",
            SplitPath::FullRank => "full_rank",
            SplitPath::Double => "double",
        }
    }
}

/// Witness data for `(H, R) ≅ ((K1 ⊗ K2)^J, R̃^J)`.
#[derive(Clone, Debug)]
pub struct SplitCertificate {
    pub path: SplitPath,
    pub host: Arc<HopfAlgebra>,
    pub r: Tensor,
    pub l1: Subspace,
    pub l2: Subspace,
    pub k1: QuotientData,
    pub k2: QuotientData,
    /// Twist on `K1 ⊗ K2`, basis `x ⊗ y` at `x * dim K2 + y` on each leg.
    pub j: Tensor,
    pub j_inv: Tensor,
    /// `"stated"` when `J` is used as given, `"inverse"` when `J⁻¹` had to be used.
    pub twist_variant: String,
    pub twisted: Arc<HopfAlgebra>,
    pub r_tilde: Tensor,
    /// `J₂₁ R̃ J⁻¹`.
    pub r_target: Tensor,
    /// `(π1 ⊗ π2) ∘ Δ: H → (K1 ⊗ K2)^J`.
    pub f: HopfMorphism,
    pub checks: Report,
}

impl SplitCertificate {
    pub fn passed(&self) -> bool {
        self.checks.passed()
    }
}

/// `R̃ = Σ (R1_i ⊗ R2_j) ⊗ (R1^i ⊗ R2^j)` on `K1 ⊗ K2`.
pub fn componentwise_r(field: &crate::kernel::Field, r1: &Tensor, r2: &Tensor) -> Tensor {
    let (d1, d2) = (r1.dims()[0], r2.dims()[0]);
    let d = d1 * d2;
    let mut out = Tensor::zero(&[d, d]);
    for (a, ca) in r1.terms() {
        let (p1, q1) = (a / d1, a % d1);
        for (b, cb) in r2.terms() {
            let (p2, q2) = (b / d2, b % d2);
            out.add_term(field, (p1 * d2 + p2) * d + q1 * d2 + q2, &field.mul(ca, cb));
        }
    }
    out
}

/// `(π1 ⊗ π2) ∘ Δ` as a `dim K1·dim K2 × dim H` matrix.
pub fn f_matrix(h: &HopfAlgebra, pi1: &HopfMorphism, pi2: &HopfMorphism) -> crate::kernel::Matrix {
    let f = h.field();
    let cols: Vec<Vec<Scalar>> = par::map_range(h.dim(), |i| {
        h.coproduct(&h.basis_vector(i))
            .apply_matrix(0, &pi1.matrix)
            .apply_matrix(1, &pi2.matrix)
            .to_vector(f)
    });
    crate::kernel::Matrix::from_columns(f, pi1.target.dim() * pi2.target.dim(), &cols)
}

/// Everything derived from the primary certificate data.
pub(crate) struct Rebuilt {
    pub twisted: Arc<HopfAlgebra>,
    pub r_tilde: Tensor,
    pub r_target: Tensor,
    pub f: HopfMorphism,
}

/// Re-derives `R̃`, `(K1 ⊗ K2)^J` and `R̃^J`, pushing the checks it performs.
pub(crate) fn rebuild(
    host: &Arc<HopfAlgebra>,
    r: &Tensor,
    k1: &QuotientData,
    k2: &QuotientData,
    j: &Tensor,
    j_inv: &Tensor,
    f_mat: &crate::kernel::Matrix,
    report: &mut Report,
) -> Result<Option<Rebuilt>> {
    let field = host.field();
    let (pi1, pi2) = (&k1.projection, &k2.projection);
    let product = Arc::new(k1.quotient.tensor(&k2.quotient)?);
    let r1 = pi1.apply_tensor(r);
    let r2 = pi2.apply_tensor(r);
    let r_tilde = componentwise_r(field, &r1, &r2);

    let tw = match verify_twist_with_inverse(&product, j, Some(j_inv)) {
        Ok(tw) => tw,
        Err(e) => {
            report.push(Check::fail("twist_invertible", None, e.to_string()));
            return Ok(None);
        }
    };
    report.push(Check::pass("twist_invertible"));
    let normalized = tw.report.get("normalized_left").is_some_and(|c| c.pass)
        && tw.report.get("normalized_right").is_some_and(|c| c.pass);
    report.push(Check::from_bool("twist_normalized", normalized, "(ε ⊗ id)J or (id ⊗ ε)J ≠ 1"));
    let cocycle = tw.report.get("cocycle").is_some_and(|c| c.pass);
    report.push(Check::from_bool("twist_cocycle", cocycle, "J fails the 2-cocycle identity"));
    if !(normalized && cocycle) {
        return Ok(None);
    }
    let (twisted, r_target) = match apply_twist(&product, &tw, Some(&r_tilde)) {
        Ok((t, Some(rt))) => (Arc::new(t), rt),
        Ok((_, None)) => unreachable!("R was supplied"),
        Err(e) => {
            report.push(Check::fail("twisted_antipode", None, e.to_string()));
            return Ok(None);
        }
    };
    let f = HopfMorphism::new(host.clone(), twisted.clone(), f_mat.clone());
    Ok(Some(Rebuilt {
        twisted,
        r_tilde,
        r_target,
        f,
    }))
}

/// Primary data of a certificate; everything else is derived by [`reassemble`].
#[derive(Clone, Debug)]
pub struct CertificateParts {
    pub path: SplitPath,
    pub host: Arc<HopfAlgebra>,
    pub r: Tensor,
    pub l1: Subspace,
    pub l2: Subspace,
    pub k1: QuotientData,
    pub k2: QuotientData,
    pub j: Tensor,
    pub j_inv: Tensor,
    pub twist_variant: String,
    pub f_matrix: crate::kernel::Matrix,
}

/// Derives the twisted target and `R̃^J`. When `J` is not a usable twist the
/// untwisted product and zero tensors stand in, and verification reports it.
pub fn reassemble(parts: CertificateParts, checks: Report) -> Result<SplitCertificate> {
    let mut scratch = Report::new();
    let CertificateParts {
        path,
        host,
        r,
        l1,
        l2,
        k1,
        k2,
        j,
        j_inv,
        twist_variant,
        f_matrix,
    } = parts;
    let (twisted, r_tilde, r_target, f) = match rebuild(&host, &r, &k1, &k2, &j, &j_inv, &f_matrix, &mut scratch)? {
        Some(b) => (b.twisted, b.r_tilde, b.r_target, b.f),
        None => {
            let product = Arc::new(k1.quotient.tensor(&k2.quotient)?);
            let n = product.dim();
            let f = HopfMorphism::new(host.clone(), product.clone(), f_matrix);
            (product, Tensor::zero(&[n, n]), Tensor::zero(&[n, n]), f)
        }
    };
    Ok(SplitCertificate {
        path,
        host,
        r,
        l1,
        l2,
        k1,
        k2,
        j,
        j_inv,
        twist_variant,
        twisted,
        r_tilde,
        r_target,
        f,
        checks,
    })
}

/// Re-checks every identity of a certificate from its primary data
/// (`H`, `R`, the two quotients, `J`, `J⁻¹`, the matrix of `F`).
pub fn verify_certificate(cert: &SplitCertificate) -> Report {
    let mut report = Report::new();
    let h = &cert.host;
    let field = h.field();
    let (pi1, pi2) = (&cert.k1.projection, &cert.k2.projection);

    for (name, pi) in [("pi1", pi1), ("pi2", pi2)] {
        let rebuilt = HopfMorphism::new(h.clone(), pi.target.clone(), pi.matrix.clone());
        let r = verify_morphism(&rebuilt);
        match r.first_failure() {
            None => report.push(Check::pass(format!("{name}_hopf_map"))),
            Some(c) => report.push(Check::fail(format!("{name}_hopf_map"), c.witness.clone(), c.name.clone())),
        }
        report.push(Check::from_bool(
            format!("{name}_surjective"),
            rebuilt.is_surjective(),
            format!("rank {} < {}", rebuilt.rank(), pi.target.dim()),
        ));
    }
    let (d1, d2) = (cert.k1.dim(), cert.k2.dim());
    report.push(Check::from_bool(
        "dimension",
        d1 * d2 == h.dim(),
        format!("{d1} · {d2} ≠ {}", h.dim()),
    ));
    let mono = monodromy_of_tensor(h, &cert.r).apply_matrix(0, &pi1.matrix).apply_matrix(1, &pi2.matrix);
    let one = Tensor::pure(field, &[pi1.target.unit(), pi2.target.unit()]);
    report.push(Check::from_bool("monodromy_trivial", mono == one, "(π1 ⊗ π2)(R₂₁R) ≠ 1 ⊗ 1"));

    let expected_f = f_matrix(h, pi1, pi2);
    let f_formula = expected_f == cert.f.matrix;
    report.push(Check::from_bool("f_formula", f_formula, "F ≠ (π1 ⊗ π2) ∘ Δ"));

    let rebuilt = match rebuild(h, &cert.r, &cert.k1, &cert.k2, &cert.j, &cert.j_inv, &cert.f.matrix, &mut report) {
        Ok(Some(b)) => b,
        Ok(None) => return report,
        Err(e) => {
            report.push(Check::fail("rebuild", None, e.to_string()));
            return report;
        }
    };
    let fr = verify_morphism(&rebuilt.f);
    match fr.first_failure() {
        None => report.push(Check::pass("f_hopf_map")),
        Some(c) => report.push(Check::fail("f_hopf_map", c.witness.clone(), format!("{}: {}", c.name, c.detail))),
    }
    report.push(Check::from_bool(
        "f_bijective",
        rebuilt.f.rank() == h.dim() && rebuilt.twisted.dim() == h.dim(),
        format!("rank {} for dimension {}", rebuilt.f.rank(), h.dim()),
    ));
    report.push(Check::from_bool(
        "r_transport",
        rebuilt.f.apply_tensor(&cert.r) == rebuilt.r_target,
        "(F ⊗ F)(R) ≠ J₂₁ R̃ J⁻¹",
    ));
    report
}

/// Prefix checks recorded while building (normality, exact factorization).
pub(crate) fn construction_checks(fw: &FactorizationWitness) -> Report {
    let mut report = Report::new();
    for (name, r) in [("l1_normal_coideal", &fw.l1_normal), ("l2_normal_coideal", &fw.l2_normal)] {
        match r.first_failure() {
            None => report.push(Check::pass(name)),
            Some(c) => report.push(Check::fail(name, c.witness.clone(), c.name.clone())),
        }
    }
    report.push(Check::from_bool(
        "exact_factorization",
        fw.bijective,
        fw.reason.clone().unwrap_or_default(),
    ));
    report
}
