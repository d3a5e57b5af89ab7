#![allow(dead_code)]

pub mod oracle;

use std::sync::Arc;

use hopfkit_core::hopf::builders::{group_algebra, sweedler};
use hopfkit_core::hopf::{build_catalog, BuilderExpr, GroupSpec, HopfAlgebra, HopfMorphism, Tensor};
use hopfkit_core::kernel::{Field, FieldSpec, Matrix, Scalar};
use hopfkit_core::qt::{trivial_r, verify_rmatrix, QTStructure};
use hopfkit_core::splitting::componentwise_r;

/// The one-parameter family on Sweedler's algebra (basis 1, a, x, ax).
pub fn sweedler_r(f: &Field, alpha: &Scalar) -> Tensor {
    let half = f.parse("1/2").unwrap();
    let ha = f.mul(&half, alpha);
    let terms: Vec<(usize, Scalar)> = vec![
        (0, half.clone()),
        (1, half.clone()),
        (4, half.clone()),
        (5, f.neg(&half)),
        (10, ha.clone()),
        (11, ha.clone()),
        (15, ha.clone()),
        (14, f.neg(&ha)),
    ];
    Tensor::from_terms(f, &[4, 4], terms)
}

pub fn sweedler_qt(f: &Field, alpha: &Scalar) -> QTStructure {
    let h = Arc::new(sweedler(f).unwrap());
    verify_rmatrix(&h, &sweedler_r(f, alpha)).unwrap()
}

/// `sweedler ⊗ kZ2` with `R_α ⊗ (1 ⊗ 1)` and `π(b ⊗ c) = b ε(c)`.
pub fn sweedler_times_z2(f: &Field, alpha: &Scalar) -> (QTStructure, HopfMorphism) {
    let sw = Arc::new(sweedler(f).unwrap());
    let z2 = group_algebra(f, &GroupSpec::Cyclic { n: 2 }).unwrap();
    let h = Arc::new(sw.tensor(&z2).unwrap());
    let r = componentwise_r(f, &sweedler_r(f, alpha), &trivial_r(&z2));
    let q = verify_rmatrix(&h, &r).unwrap();
    let pi = Matrix::from_fn(f, 4, 8, |row, col| {
        if col / 2 == row {
            z2.counit()[col % 2].clone()
        } else {
            f.zero()
        }
    });
    (q, HopfMorphism::new(h, sw, pi))
}

/// The catalog the axiom suite runs over, with its fields.
pub fn catalog() -> Vec<(Field, BuilderExpr)> {
    let q = Field::rationals();
    let gf7 = Field::new(FieldSpec::PrimeField { p: 7 }).unwrap();
    let cyc = |n| BuilderExpr::cyclic(n);
    let sw = || BuilderExpr::Sweedler {};
    let taft = || BuilderExpr::Taft {
        p: 3,
        omega: Some("2".into()),
    };
    vec![
        (q.clone(), cyc(2)),
        (q.clone(), cyc(3)),
        (q.clone(), cyc(4)),
        (q.clone(), BuilderExpr::group(GroupSpec::Symmetric { n: 3 })),
        (q.clone(), sw()),
        (gf7.clone(), taft()),
        (q.clone(), BuilderExpr::dual(cyc(3))),
        (q.clone(), BuilderExpr::dual(BuilderExpr::group(GroupSpec::Symmetric { n: 3 }))),
        (q.clone(), BuilderExpr::dual(sw())),
        (gf7.clone(), BuilderExpr::dual(taft())),
        (q.clone(), BuilderExpr::tensor(sw(), cyc(2))),
        (q.clone(), BuilderExpr::tensor(cyc(2), cyc(3))),
        (q.clone(), BuilderExpr::double(cyc(2))),
        (q.clone(), BuilderExpr::double(cyc(3))),
        (q, BuilderExpr::double(sw())),
    ]
}

pub fn build(f: &Field, e: &BuilderExpr) -> Arc<HopfAlgebra> {
    Arc::new(build_catalog(f, e).unwrap())
}
