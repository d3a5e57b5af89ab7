use std::sync::Arc;

use hopfkit_core::hopf::builders::{group_algebra, sweedler, taft};
use hopfkit_core::hopf::{GroupSpec, HopfAlgebra, HopfMorphism, Tensor};
use hopfkit_core::kernel::{Field, Matrix, Scalar};
use hopfkit_core::qt::{drinfeld_double, monodromy, trivial_r, verify_rmatrix, QTStructure};
use hopfkit_core::splitting::{
    componentwise_r, double_splitting, obstruction_check, split_via_factorizable, split_via_fullrank,
    verify_certificate, Clause,
};

fn sweedler_r(f: &Field, alpha: i64) -> Tensor {
    let half = f.parse("1/2").unwrap();
    let ha = f.mul(&half, &f.from_i64(alpha));
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

/// `H = sweedler ⊗ kZ2` with `R_α ⊗ (1 ⊗ 1)` and `π(b ⊗ c) = b ε(c)`.
fn sweedler_times_z2(alpha: i64) -> (QTStructure, HopfMorphism) {
    let f = Field::rationals();
    let sw = Arc::new(sweedler(&f).unwrap());
    let z2 = group_algebra(&f, &GroupSpec::Cyclic { n: 2 }).unwrap();
    let h = Arc::new(sw.tensor(&z2).unwrap());
    let r = componentwise_r(&f, &sweedler_r(&f, alpha), &trivial_r(&z2));
    let q = verify_rmatrix(&h, &r).unwrap();
    let pi = Matrix::from_fn(&f, 4, 8, |row, col| {
        if col / 2 == row {
            z2.counit()[col % 2].clone()
        } else {
            f.zero()
        }
    });
    (q, HopfMorphism::new(h, sw, pi))
}

#[test]
fn fullrank_split_of_sweedler_times_z2() {
    let (q, pi) = sweedler_times_z2(1);
    assert!(q.verified);
    let cert = split_via_fullrank(&q, &pi).unwrap();
    assert!(cert.passed(), "{}", cert.checks);
    assert_eq!((cert.k1.dim(), cert.k2.dim()), (4, 2));
    assert!(verify_certificate(&cert).passed());
    assert_eq!(cert.twist_variant, "stated");
}

#[test]
fn fullrank_requires_full_rank() {
    let (q, pi) = sweedler_times_z2(0);
    assert!(split_via_fullrank(&q, &pi).is_err());
}

#[test]
fn factorizable_split_of_double_times_z2() {
    let f = Field::rationals();
    let z2 = group_algebra(&f, &GroupSpec::Cyclic { n: 2 }).unwrap();
    let d = drinfeld_double(&z2).unwrap();
    let h = Arc::new(d.hopf().tensor(&z2).unwrap());
    let r = componentwise_r(&f, d.r(), &trivial_r(&z2));
    let q = verify_rmatrix(&h, &r).unwrap();
    let pi = Matrix::from_fn(&f, 4, 8, |row, col| {
        if col / 2 == row {
            z2.counit()[col % 2].clone()
        } else {
            f.zero()
        }
    });
    let pi = HopfMorphism::new(h, d.hopf().clone(), pi);
    let cert = split_via_factorizable(&q, &pi).unwrap();
    assert!(cert.passed(), "{}", cert.checks);
    assert_eq!((cert.k1.dim(), cert.k2.dim()), (4, 2));
    assert_eq!(cert.twist_variant, "stated");
}

#[test]
fn double_splitting_of_double_z2() {
    let f = Field::rationals();
    let z2 = group_algebra(&f, &GroupSpec::Cyclic { n: 2 }).unwrap();
    let k = drinfeld_double(&z2).unwrap();
    let cert = double_splitting(&k).unwrap();
    assert!(cert.passed(), "{}", cert.checks);
    assert_eq!(cert.host.dim(), 16);
    assert_eq!(cert.twist_variant, "stated");
}

#[test]
fn double_splitting_rejects_trivial_r() {
    let f = Field::rationals();
    let z2 = Arc::new(group_algebra(&f, &GroupSpec::Cyclic { n: 2 }).unwrap());
    let q = verify_rmatrix(&z2, &trivial_r(&z2)).unwrap();
    assert!(double_splitting(&q).is_err());
    let _ = monodromy(&q);
}

#[test]
fn taft_obstruction() {
    let f = Field::prime(7).unwrap();
    let h: HopfAlgebra = taft(&f, 3, Some(f.from_i64(2))).unwrap();
    let rep = obstruction_check(&h).unwrap();
    assert_eq!(rep.clause, Clause::NoQt, "{}", rep.detail);
    let mut vals: Vec<String> = rep.pairings.iter().map(|p| p.value.to_string()).collect();
    vals.sort();
    assert_eq!(vals, ["2", "2", "4", "4"]);
    assert!(rep.recheck(&h));
}

#[test]
fn group_algebra_clauses() {
    let f = Field::rationals();
    // characters of kZ3 need cube roots of unity
    let z3 = group_algebra(&f, &GroupSpec::Cyclic { n: 3 }).unwrap();
    assert_eq!(obstruction_check(&z3).unwrap().clause, Clause::Inconclusive);
    let f7 = Field::prime(7).unwrap();
    let z3 = group_algebra(&f7, &GroupSpec::Cyclic { n: 3 }).unwrap();
    assert_eq!(obstruction_check(&z3).unwrap().clause, Clause::Ii);
    let s3 = group_algebra(&f, &GroupSpec::Symmetric { n: 3 }).unwrap();
    assert_eq!(obstruction_check(&s3).unwrap().clause, Clause::Ii);
}

#[test]
fn underline_pi_on_sweedler_times_z2() {
    for alpha in [0, 1] {
        let (q, pi) = sweedler_times_z2(alpha);
        let rep = hopfkit_core::qt::check_underline_pi(&q, &pi).unwrap();
        assert!(rep.passed(), "alpha {alpha}: {rep}");
    }
}

#[test]
fn certificate_round_trip() {
    use hopfkit_core::serial::CertificateData;
    let (q, pi) = sweedler_times_z2(1);
    let cert = split_via_fullrank(&q, &pi).unwrap();
    let data = CertificateData::from_certificate(&cert);
    let text = serde_json::to_string(&data).unwrap();
    let back: CertificateData = serde_json::from_str(&text).unwrap();
    assert_eq!(back, data);
    let cert2 = back.to_certificate().unwrap();
    assert_eq!(verify_certificate(&cert2), verify_certificate(&cert));
    assert!(verify_certificate(&cert2).passed());
}
