//! Coinvariants, normal coideal subalgebras, Hopf-ideal quotients, extensions.

use std::sync::Arc;

use super::{HopfAlgebra, HopfMorphism, Tensor};
use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::kernel::{vector, Matrix, Scalar, SparseTensor3, Subspace};
use crate::par;
use crate::report::{Check, Report};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// `(id ⊗ π) Δ(h) = h ⊗ 1`
    Right,
    /// `(π ⊗ id) Δ(h) = 1 ⊗ h`
    Left,
}

/// Coinvariants of a Hopf map `π: H → K`, as the kernel of a linear map `H → H ⊗ K`.
pub fn coinvariants(pi: &HopfMorphism, side: Side) -> Subspace {
    let (h, k) = (&*pi.source, &*pi.target);
    let f = h.field();
    let (d, dk) = (h.dim(), k.dim());
    let cols: Vec<Vec<Scalar>> = par::map_range(d, |i| {
        let e = h.basis_vector(i);
        let t = h.coproduct(&e);
        let (mapped, fixed) = match side {
            Side::Right => (
                t.apply_matrix(1, &pi.matrix),
                Tensor::pure(f, &[&e, k.unit()]),
            ),
            Side::Left => (
                t.apply_matrix(0, &pi.matrix),
                Tensor::pure(f, &[k.unit(), &e]),
            ),
        };
        mapped.sub(f, &fixed).to_vector(f)
    });
    Subspace::kernel(&Matrix::from_columns(f, d * dk, &cols))
}

/// Clauses `subalgebra`, `coideal` (`Δ(L) ⊆ H ⊗ L`) and `adjoint`
/// (`h₁ l S(h₂) ∈ L`). Witnesses index basis vectors of `H` and of `L`.
pub fn is_normal_left_coideal_subalgebra(h: &HopfAlgebra, l: &Subspace) -> Report {
    let f = h.field();
    let d = h.dim();
    let mut report = Report::new();
    let basis = l.basis_vectors();
    report.push(Check::from_witness("subalgebra", h.algebra().is_subalgebra(l)));

    let coideal = par::find_first(basis.len(), |n| {
        let m = h.coproduct(&basis[n]).to_matrix(f);
        (0..d).find(|&r| !l.contains(m.row(r))).map(|_| vec![n])
    });
    report.push(Check::from_witness("coideal", coideal));

    let adjoint = if h.has_antipode() {
        par::find_first(d * basis.len(), |idx| {
            let (i, n) = (idx / basis.len(), idx % basis.len());
            let v = adjoint_action(h, &h.basis_vector(i), &basis[n]);
            (!l.contains(&v)).then(|| vec![i, n])
        })
    } else {
        Some(vec![])
    };
    report.push(Check::from_witness("adjoint", adjoint));
    report
}

/// `h₁ x S(h₂)`.
pub fn adjoint_action(h: &HopfAlgebra, a: &[Scalar], x: &[Scalar]) -> Vec<Scalar> {
    let f = h.field();
    let t = h.coproduct(a);
    let s = h.antipode();
    let mut out = h.zero_vector();
    for (jk, c) in t.terms() {
        let (j, k) = (jk / h.dim(), jk % h.dim());
        let left = h.mul(&h.basis_vector(j), x);
        let v = h.mul(&left, &s.column(k));
        vector::axpy(f, &mut out, c, &v);
    }
    out
}

/// A quotient Hopf algebra with its projection and a linear section.
#[derive(Clone, Debug)]
pub struct QuotientData {
    pub projection: HopfMorphism,
    /// `dim(H) × dim(K)`, with `projection ∘ section = id`.
    pub section: Matrix,
    pub ideal: Subspace,
    pub quotient: Arc<HopfAlgebra>,
}

impl QuotientData {
    /// Packages a surjective Hopf map; the section picks, for each basis
    /// vector of the target, a preimage solved by row reduction.
    pub fn from_surjection(pi: HopfMorphism) -> Result<QuotientData> {
        if !pi.is_surjective() {
            return Err(Error::Structural(format!(
                "map of rank {} onto dimension {} is not surjective",
                pi.rank(),
                pi.target.dim()
            )));
        }
        let f = pi.source.field().clone();
        let cols = (0..pi.target.dim())
            .map(|j| {
                pi.matrix
                    .solve(&vector::unit(&f, pi.target.dim(), j))
                    .ok_or_else(|| Error::Structural("no preimage".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        let section = Matrix::from_columns(&f, pi.source.dim(), &cols);
        Ok(QuotientData {
            ideal: pi.kernel(),
            quotient: pi.target.clone(),
            section,
            projection: pi,
        })
    }

    pub fn dim(&self) -> usize {
        self.quotient.dim()
    }
}

/// `H / H L⁺` for a normal left coideal subalgebra `L`.
pub fn quotient_by_coideal(h: &Arc<HopfAlgebra>, l: &Subspace) -> Result<QuotientData> {
    let f = h.field().clone();
    let d = h.dim();
    let eps_kernel = Subspace::kernel(&Matrix::from_rows(&f, d, vec![h.counit().to_vec()]));
    let l_plus = l.intersection(&eps_kernel);
    let ideal = h.algebra().left_ideal(&l_plus.basis_vectors());
    let ideal_basis = ideal.basis_vectors();

    // two-sided: H L⁺ H = H L⁺
    if let Some(w) = par::find_first(ideal_basis.len() * d, |idx| {
        let (n, i) = (idx / d, idx % d);
        (!ideal.contains(&h.mul(&ideal_basis[n], &h.basis_vector(i)))).then(|| vec![n, i])
    }) {
        return Err(Error::Structural(format!("H L⁺ is not a right ideal: ideal vector {} times e_{}", w[0], w[1])));
    }

    let keep = ideal.non_pivots();
    let m = keep.len();
    let project = |v: &[Scalar]| -> Vec<Scalar> {
        let r = ideal.reduce(v);
        keep.iter().map(|&c| r[c].clone()).collect()
    };
    let projection = Matrix::from_columns(&f, m, &(0..d).map(|i| project(&h.basis_vector(i))).collect::<Vec<_>>());
    let section = Matrix::from_columns(&f, d, &keep.iter().map(|&c| h.basis_vector(c)).collect::<Vec<_>>());

    // coideal: (p ⊗ p) Δ(I) = 0, ε(I) = 0, S(I) ⊆ I
    for (n, v) in ideal_basis.iter().enumerate() {
        if !f.is_zero(&h.eps(v)) {
            return Err(Error::Structural(format!("ideal vector {n} is not in ker ε")));
        }
        let t = h.coproduct(v).apply_matrix(0, &projection).apply_matrix(1, &projection);
        if !t.is_zero() {
            return Err(Error::Structural(format!("ideal is not a coideal at ideal vector {n}")));
        }
        if !ideal.contains(&h.apply_antipode(v)) {
            return Err(Error::Structural(format!("ideal is not S-stable at ideal vector {n}")));
        }
    }

    let algebra = Algebra::from_fn(&f, m, project(h.unit()), |s, t| {
        project(&h.mul(&h.basis_vector(keep[s]), &h.basis_vector(keep[t])))
    })?;
    let mut comul = SparseTensor3::cube(m);
    for (s, &c) in keep.iter().enumerate() {
        let t = h.coproduct(&h.basis_vector(c)).apply_matrix(0, &projection).apply_matrix(1, &projection);
        for (jk, v) in t.terms() {
            comul.add(&f, s, jk / m, jk % m, v);
        }
    }
    let counit: Vec<Scalar> = keep.iter().map(|&c| h.counit()[c].clone()).collect();
    let antipode = projection.mul(h.antipode()).mul(&section);
    let quotient = HopfAlgebra::from_parts(format!("{}/HL+", h.name()), algebra, comul, counit, Some(antipode))?.into_arc();
    let (projection, report) = HopfMorphism::new(h.clone(), quotient.clone(), projection).verified();
    if !report.passed() {
        return Err(Error::Structural(format!("projection is not a Hopf map: {report}")));
    }
    Ok(QuotientData {
        projection,
        section,
        ideal,
        quotient,
    })
}

/// Clauses of an extension `A → H → K`: `i_injective`, `ii_surjective`,
/// `iii_coinvariants` (image of ι equals the right coinvariants of π) and
/// `iv_kernel` (ker π = H ι(A)⁺).
pub fn verify_extension(iota: &HopfMorphism, pi: &HopfMorphism) -> Report {
    let h = &pi.source;
    let f = h.field();
    let mut report = Report::new();
    report.push(Check::from_bool("i_injective", iota.is_injective(), "ι has a kernel"));
    report.push(Check::from_bool("ii_surjective", pi.is_surjective(), "π is not onto"));
    let image = iota.image();
    let coinv = coinvariants(pi, Side::Right);
    report.push(Check::from_bool(
        "iii_coinvariants",
        image == coinv,
        format!("image has dim {}, coinvariants dim {}", image.dim(), coinv.dim()),
    ));
    let eps_kernel = Subspace::kernel(&Matrix::from_rows(f, h.dim(), vec![h.counit().to_vec()]));
    let a_plus = image.intersection(&eps_kernel);
    let generated = h.algebra().left_ideal(&a_plus.basis_vectors());
    let kernel = pi.kernel();
    report.push(Check::from_bool(
        "iv_kernel",
        generated == kernel,
        format!("H A⁺ has dim {}, ker π dim {}", generated.dim(), kernel.dim()),
    ));
    report
}
