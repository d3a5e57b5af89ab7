use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use hopfkit_core::hopf::builders::group_algebra;
use hopfkit_core::hopf::{build_catalog, verify_hopf, BuilderExpr, GroupSpec};
use hopfkit_core::kernel::{Field, Matrix};
use hopfkit_core::par;
use hopfkit_core::qt::drinfeld_double;
use hopfkit_core::splitting::double_splitting;

fn modes(c: &mut Criterion, group: &str, mut run: impl FnMut()) {
    let mut g = c.benchmark_group(group);
    g.sample_size(10);
    g.bench_function(BenchmarkId::from_parameter("parallel"), |b| b.iter(&mut run));
    g.bench_function(BenchmarkId::from_parameter("sequential"), |b| b.iter(|| par::sequential(&mut run)));
    g.finish();
}

fn rref(c: &mut Criterion) {
    let f = Field::rationals();
    // deterministic dense matrix with small entries
    let m = Matrix::from_fn(&f, 48, 48, |r, c| f.from_i64(((r * 31 + c * 17 + r * c) % 11) as i64 - 5));
    modes(c, "rref_48x48", || {
        black_box(m.rref());
    });
}

fn axioms(c: &mut Criterion) {
    let f = Field::rationals();
    let h = build_catalog(&f, &BuilderExpr::double(BuilderExpr::Sweedler {})).unwrap();
    modes(c, "verify_hopf_double_sweedler", || {
        black_box(verify_hopf(&h));
    });
}

fn split(c: &mut Criterion) {
    let f = Field::rationals();
    let k = drinfeld_double(&group_algebra(&f, &GroupSpec::Cyclic { n: 2 }).unwrap()).unwrap();
    modes(c, "double_splitting_dkz2", || {
        black_box(double_splitting(&k).unwrap());
    });
}

criterion_group!(benches, rref, axioms, split);
criterion_main!(benches);
