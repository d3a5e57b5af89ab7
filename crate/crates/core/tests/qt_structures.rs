use std::sync::Arc;

use hopfkit_core::hopf::builders::{group_algebra, sweedler, taft};
use hopfkit_core::hopf::{verify_hopf, GroupSpec, HopfAlgebra, Tensor};
use hopfkit_core::kernel::{Field, Scalar};
use hopfkit_core::qt::{braided_dual, drinfeld_double, lr_maps, transmute, verify_rmatrix, QTStructure};

fn q() -> Field {
    Field::rationals()
}

/// `R_α` on Sweedler's algebra, basis `1, a, x, ax`.
fn sweedler_r(f: &Field, alpha: i64) -> Tensor {
    let half = f.parse("1/2").unwrap();
    let ha = f.mul(&half, &f.from_i64(alpha));
    let terms: Vec<(usize, Scalar)> = vec![
        (0, half.clone()),
        (1, half.clone()),
        (4, half.clone()),
        (5, f.neg(&half)),
        (2 * 4 + 2, ha.clone()),
        (2 * 4 + 3, ha.clone()),
        (3 * 4 + 3, ha.clone()),
        (3 * 4 + 2, f.neg(&ha)),
    ];
    Tensor::from_terms(f, &[4, 4], terms)
}

fn sweedler_qt(alpha: i64) -> QTStructure {
    let f = q();
    let h = Arc::new(sweedler(&f).unwrap());
    verify_rmatrix(&h, &sweedler_r(&f, alpha)).unwrap()
}

#[test]
fn sweedler_r_family_verifies() {
    for alpha in [0, 1, -3] {
        let qt = sweedler_qt(alpha);
        assert!(qt.report.passed(), "alpha {alpha}: {}", qt.report);
        assert_eq!(qt.full_rank, alpha != 0);
        assert!(!qt.factorizable);
    }
}

#[test]
fn double_of_cyclic_group_is_factorizable() {
    let f = q();
    let k = group_algebra(&f, &GroupSpec::Cyclic { n: 2 }).unwrap();
    let d = drinfeld_double(&k).unwrap();
    assert!(verify_hopf(d.hopf()).passed(), "{}", verify_hopf(d.hopf()));
    assert!(d.report.passed(), "{}", d.report);
    assert!(d.factorizable);
}

#[test]
fn double_of_sweedler() {
    let f = q();
    let k = sweedler(&f).unwrap();
    let d = drinfeld_double(&k).unwrap();
    assert!(verify_hopf(d.hopf()).passed(), "{}", verify_hopf(d.hopf()));
    assert!(d.report.passed(), "{}", d.report);
    assert!(d.factorizable);
    let lr = lr_maps(&d, None).unwrap();
    assert_eq!(lr.lem_comm, None);
    assert!(lr.algebra_map && lr.anti_coalgebra_map);
}

#[test]
fn double_of_taft3() {
    let f = Field::prime(7).unwrap();
    let k = taft(&f, 3, None).unwrap();
    let d = drinfeld_double(&k).unwrap();
    assert!(d.report.passed(), "{}", d.report);
    assert!(d.factorizable);
}

#[test]
fn transmutation_of_sweedler() {
    for alpha in [0, 1] {
        let qt = sweedler_qt(alpha);
        let b = transmute(&qt, None).unwrap();
        assert!(b.report.passed(), "alpha {alpha}: {}", b.report);
    }
}

#[test]
fn transmutation_of_double() {
    let f = q();
    let k: HopfAlgebra = group_algebra(&f, &GroupSpec::Cyclic { n: 2 }).unwrap();
    let d = drinfeld_double(&k).unwrap();
    let b = transmute(&d, None).unwrap();
    assert!(b.report.passed(), "{}", b.report);
    let bd = braided_dual(&d).unwrap();
    assert!(bd.report.passed(), "{}", bd.report);
}

#[test]
fn braided_dual_of_sweedler_double() {
    let f = q();
    let d = drinfeld_double(&sweedler(&f).unwrap()).unwrap();
    let bd = braided_dual(&d).unwrap();
    assert!(bd.report.passed(), "{} variant {:?}", bd.report, bd.phi_variant);
    assert_eq!(bd.phi_variant, Some("phi"));
}
