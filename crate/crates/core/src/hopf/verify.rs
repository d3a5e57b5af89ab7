use super::HopfAlgebra;
use crate::algebra::{verify_algebra, Algebra};
use crate::error::Error;
use crate::kernel::{vector, Matrix, Scalar, SparseTensor3};
use crate::par;
use crate::report::{Check, Report};

/// Runs every Hopf axiom on basis elements (pairs for the multiplicative
/// ones). If no antipode was supplied one is solved for; a singular
/// convolution system is reported as a failed `antipode` check.
pub fn verify_hopf(h: &HopfAlgebra) -> Report {
    let f = h.field();
    let d = h.dim();
    let mut report = verify_algebra(h.algebra());

    let coassoc = par::find_first(d, |i| {
        let t = h.coproduct(&h.basis_vector(i));
        (h.delta_leg(&t, 0) != h.delta_leg(&t, 1)).then(|| vec![i])
    });
    report.push(Check::from_witness("coassociativity", coassoc));

    let counit = par::find_first(d, |i| {
        let e = h.basis_vector(i);
        let t = h.coproduct(&e);
        let left = h.eps_leg(&t, 0).to_vector(f);
        let right = h.eps_leg(&t, 1).to_vector(f);
        (left != e || right != e).then(|| vec![i])
    });
    report.push(Check::from_witness("counit", counit));

    let delta_unit_ok = h.coproduct(h.unit()) == h.one_tensor(2);
    let comult = if !delta_unit_ok {
        Some(vec![])
    } else {
        par::find_first(d * d, |ij| {
            let (i, j) = (ij / d, ij % d);
            let lhs = h.coproduct(&h.mul(&h.basis_vector(i), &h.basis_vector(j)));
            let rhs = h.tmul(&h.coproduct(&h.basis_vector(i)), &h.coproduct(&h.basis_vector(j)));
            (lhs != rhs).then(|| vec![i, j])
        })
    };
    report.push(Check::from_witness("comultiplicative", comult));

    let eps_unit_ok = f.is_one(&h.eps(h.unit()));
    let eps_mult = if !eps_unit_ok {
        Some(vec![])
    } else {
        par::find_first(d * d, |ij| {
            let (i, j) = (ij / d, ij % d);
            let lhs = h.eps(&h.mul(&h.basis_vector(i), &h.basis_vector(j)));
            let rhs = f.mul(&h.counit()[i], &h.counit()[j]);
            (lhs != rhs).then(|| vec![i, j])
        })
    };
    report.push(Check::from_witness("counit_multiplicative", eps_mult));

    let antipode = match h.antipode_opt() {
        Some(_) => Check::from_witness(
            "antipode",
            antipode_violation(h, AntipodeSide::Left).or_else(|| antipode_violation(h, AntipodeSide::Right)),
        ),
        None => match h.solve_antipode() {
            Ok(_) => Check {
                name: "antipode".into(),
                pass: true,
                witness: None,
                detail: "computed as convolution inverse of the identity".into(),
            },
            Err(Error::NoAntipode) => Check::fail("antipode", None, "no antipode"),
            Err(e) => Check::fail("antipode", None, e.to_string()),
        },
    };
    report.push(antipode);
    report
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum AntipodeSide {
    /// `m (S ⊗ id) Δ = η ε`
    Left,
    /// `m (id ⊗ S) Δ = η ε`
    Right,
}

pub(crate) fn antipode_violation(h: &HopfAlgebra, side: AntipodeSide) -> Option<Vec<usize>> {
    let f = h.field();
    let s = h.antipode_opt()?;
    let d = h.dim();
    par::find_first(d, |i| {
        let t = h.coproduct(&h.basis_vector(i));
        let leg = match side {
            AntipodeSide::Left => 0,
            AntipodeSide::Right => 1,
        };
        let applied = t.apply_matrix(leg, s);
        let got = h.mul_legs(&applied, 0).to_vector(f);
        let want = vector::scale(f, &h.counit()[i], h.unit());
        (got != want).then(|| vec![i])
    })
}

/// A single structure constant.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StructureSlot {
    Mul(usize, usize, usize),
    Unit(usize),
    Comul(usize, usize, usize),
    Counit(usize),
    Antipode(usize, usize),
}

impl StructureSlot {
    /// The slot with ordinal `n` in the enumeration mul, unit, comul, counit, antipode.
    pub fn nth(d: usize, mut n: usize) -> StructureSlot {
        let cube = d * d * d;
        if n < cube {
            return StructureSlot::Mul(n / (d * d), (n / d) % d, n % d);
        }
        n -= cube;
        if n < d {
            return StructureSlot::Unit(n);
        }
        n -= d;
        if n < cube {
            return StructureSlot::Comul(n / (d * d), (n / d) % d, n % d);
        }
        n -= cube;
        if n < d {
            return StructureSlot::Counit(n);
        }
        n -= d;
        StructureSlot::Antipode(n / d, n % d)
    }

    pub fn count(d: usize) -> usize {
        2 * d * d * d + 2 * d + d * d
    }
}

/// Copy of `h` with `delta` added to one structure constant.
pub fn mutate_constant(h: &HopfAlgebra, slot: StructureSlot, delta: &Scalar) -> HopfAlgebra {
    let f = h.field();
    let bump = |t: &SparseTensor3, i, j, k| {
        let mut t = t.clone();
        t.add(f, i, j, k, delta);
        t
    };
    let mut mul = h.algebra().mul_tensor().clone();
    let mut unit = h.unit().to_vec();
    let mut comul = h.comul_tensor().clone();
    let mut counit = h.counit().to_vec();
    let mut antipode: Option<Matrix> = h.antipode_opt().cloned();
    match slot {
        StructureSlot::Mul(i, j, k) => mul = bump(&mul, i, j, k),
        StructureSlot::Unit(i) => unit[i] = f.add(&unit[i], delta),
        StructureSlot::Comul(i, j, k) => comul = bump(&comul, i, j, k),
        StructureSlot::Counit(i) => counit[i] = f.add(&counit[i], delta),
        StructureSlot::Antipode(r, c) => {
            if let Some(s) = antipode.as_mut() {
                let v = f.add(s.get(r, c), delta);
                s.set(r, c, v);
            }
        }
    }
    let algebra = Algebra::new(f, mul, unit).expect("same shape");
    HopfAlgebra::from_parts(format!("mutated({})", h.name()), algebra, comul, counit, antipode)
        .expect("same shape")
}
