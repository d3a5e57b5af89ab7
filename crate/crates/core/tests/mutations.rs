//! Single-constant mutations must be caught.

mod common;

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use hopfkit_core::hopf::{mutate_constant, verify_hopf, HopfMorphism, StructureSlot, Tensor};
use hopfkit_core::kernel::Field;
use hopfkit_core::qt::check_underline_pi;
use hopfkit_core::splitting::{split_via_fullrank, verify_certificate};

const MUTATIONS: usize = 50;

#[test]
fn catalog_mutations_fail_verification() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for (field, expr) in common::catalog() {
        let h = common::build(&field, &expr);
        assert!(verify_hopf(&h).passed(), "{} does not verify", h.name());
        let slots = StructureSlot::count(h.dim());
        for _ in 0..MUTATIONS {
            let slot = StructureSlot::nth(h.dim(), rng.random_range(0..slots));
            let delta = field.from_i64(rng.random_range(1..=3));
            let m = mutate_constant(&h, slot, &delta);
            let report = verify_hopf(&m);
            assert!(!report.passed(), "{}: mutation {slot:?} by {delta} passed", h.name());
        }
    }
}

#[test]
fn perturbed_twist_fails_certificate() {
    let f = Field::rationals();
    let (q, pi) = common::sweedler_times_z2(&f, &f.one());
    let cert = split_via_fullrank(&q, &pi).unwrap();
    assert!(verify_certificate(&cert).passed());
    let n = cert.j.dims()[0];
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..10 {
        let mut bad = cert.clone();
        let idx = rng.random_range(0..n * n);
        let mut j = Tensor::zero(&[n, n]);
        for (i, c) in cert.j.terms() {
            j.add_term(&f, i, c);
        }
        j.add_term(&f, idx, &f.from_i64(rng.random_range(1..=3)));
        bad.j = j;
        let report = verify_certificate(&bad);
        assert!(!report.passed(), "perturbation at {idx} passed");
    }
}

#[test]
fn corrupted_projection_fails_underline_pi() {
    let f = Field::rationals();
    for alpha in [0, 1] {
        let (q, pi) = common::sweedler_times_z2(&f, &f.from_i64(alpha));
        assert!(check_underline_pi(&q, &pi).unwrap().passed());
        let mut rng = ChaCha8Rng::seed_from_u64(alpha as u64);
        for _ in 0..10 {
            let mut m = pi.matrix.clone();
            let (r, c) = (rng.random_range(0..m.rows()), rng.random_range(0..m.cols()));
            let v = f.add(m.get(r, c), &f.from_i64(rng.random_range(1..=3)));
            m.set(r, c, v);
            let bad = HopfMorphism::new(Arc::clone(&pi.source), Arc::clone(&pi.target), m);
            let report = check_underline_pi(&q, &bad).unwrap();
            assert!(!report.passed(), "corrupted entry ({r}, {c}) passed");
        }
    }
}
