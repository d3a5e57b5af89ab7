//! Linear maps between Hopf algebras and the check that they are Hopf maps.

use std::sync::Arc;

use super::{HopfAlgebra, Tensor};
use crate::kernel::{Matrix, Scalar, Subspace};
use crate::par;
use crate::report::{Check, Report};

/// `matrix` is `dim(target) × dim(source)`; column `i` is the image of `e_i`.
#[derive(Clone, Debug)]
pub struct HopfMorphism {
    pub source: Arc<HopfAlgebra>,
    pub target: Arc<HopfAlgebra>,
    pub matrix: Matrix,
    pub verified: bool,
}

impl HopfMorphism {
    pub fn new(source: Arc<HopfAlgebra>, target: Arc<HopfAlgebra>, matrix: Matrix) -> HopfMorphism {
        assert_eq!(matrix.rows(), target.dim(), "morphism rows vs target dimension");
        assert_eq!(matrix.cols(), source.dim(), "morphism columns vs source dimension");
        HopfMorphism {
            source,
            target,
            matrix,
            verified: false,
        }
    }

    /// Runs [`verify_morphism`] and records the verdict.
    pub fn verified(mut self) -> (HopfMorphism, Report) {
        let r = verify_morphism(&self);
        self.verified = r.passed();
        (self, r)
    }

    pub fn identity(h: Arc<HopfAlgebra>) -> HopfMorphism {
        let m = Matrix::identity(h.field(), h.dim());
        HopfMorphism::new(h.clone(), h, m)
    }

    pub fn apply(&self, x: &[Scalar]) -> Vec<Scalar> {
        self.matrix.mul_vec(x)
    }

    /// `(φ ⊗ ... ⊗ φ)(t)`.
    pub fn apply_tensor(&self, t: &Tensor) -> Tensor {
        (0..t.legs()).fold(t.clone(), |acc, leg| acc.apply_matrix(leg, &self.matrix))
    }

    pub fn compose(&self, first: &HopfMorphism) -> HopfMorphism {
        HopfMorphism::new(first.source.clone(), self.target.clone(), self.matrix.mul(&first.matrix))
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.source.dim()
    }

    pub fn is_surjective(&self) -> bool {
        self.rank() == self.target.dim()
    }

    pub fn kernel(&self) -> Subspace {
        Subspace::kernel(&self.matrix)
    }

    pub fn image(&self) -> Subspace {
        Subspace::column_space(&self.matrix)
    }
}

/// Checks that the matrix intertwines m, η, Δ and ε. Failures name the
/// first basis pair (for m) or basis index (for Δ, ε).
pub fn verify_morphism(phi: &HopfMorphism) -> Report {
    let (h, k) = (&*phi.source, &*phi.target);
    let mut report = Report::new();
    if h.field() != k.field() {
        report.push(Check::fail("field", None, "source and target fields differ"));
        return report;
    }
    let d = h.dim();
    let images: Vec<Vec<Scalar>> = (0..d).map(|i| phi.matrix.column(i)).collect();

    let mul = par::find_first(d * d, |ij| {
        let (i, j) = (ij / d, ij % d);
        let lhs = phi.apply(&h.mul(&h.basis_vector(i), &h.basis_vector(j)));
        let rhs = k.mul(&images[i], &images[j]);
        (lhs != rhs).then(|| vec![i, j])
    });
    report.push(Check::from_witness("multiplicative", mul));
    report.push(Check::from_bool("unit", phi.apply(h.unit()) == k.unit(), "φ(1) ≠ 1"));

    let comul = par::find_first(d, |i| {
        let lhs = phi.apply_tensor(&h.coproduct(&h.basis_vector(i)));
        let rhs = k.coproduct(&images[i]);
        (lhs != rhs).then(|| vec![i])
    });
    report.push(Check::from_witness("comultiplicative", comul));

    let counit = (0..d).find(|&i| k.eps(&images[i]) != h.counit()[i]);
    report.push(Check::from_witness("counit", counit.map(|i| vec![i])));
    report
}
