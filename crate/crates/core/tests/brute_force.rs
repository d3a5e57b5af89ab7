//! Brute-force R-matrix searches with the independent dense oracle, cross-checked
//! against `verify_rmatrix` point by point.

mod common;

use std::sync::Arc;

use num_rational::Rational64;

use common::oracle::{linear_candidates, search, Coef, Dense, Gf};
use hopfkit_core::hopf::builders::{group_algebra, sweedler, taft};
use hopfkit_core::hopf::{GroupSpec, HopfAlgebra, Tensor};
use hopfkit_core::kernel::{Field, FieldSpec};
use hopfkit_core::qt::{is_factorizable, verify_rmatrix};

fn halves(lo: i64, hi: i64) -> Vec<Rational64> {
    (2 * lo..=2 * hi).map(|n| Rational64::new(n, 2)).collect()
}

fn to_tensor<C: Coef + ToString>(f: &Field, d: usize, r: &[C]) -> Tensor {
    let terms = r
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i, f.parse(&c.to_string()).unwrap()));
    Tensor::from_terms(f, &[d, d], terms)
}

fn library_verifies(h: &Arc<HopfAlgebra>, r: &Tensor) -> bool {
    verify_rmatrix(h, r).map(|q| q.verified).unwrap_or(false)
}

/// Runs the oracle search over `particular + span(basis)` and checks every
/// visited point against the library verdict.
fn solve_and_compare<C: Coef + ToString>(h: &Arc<HopfAlgebra>, zero: C, values: &[C]) -> Vec<Vec<C>> {
    let dense = Dense::from_hopf(h, zero);
    let (particular, basis) = linear_candidates(&dense).expect("consistent linear conditions");
    let (found, visited) = search(&dense, &particular, &basis, values);
    assert_eq!(visited, values.len().pow(basis.len() as u32));
    // Walk the same grid again through the library.
    let mut idx = vec![0usize; basis.len()];
    let mut library = Vec::new();
    loop {
        let mut r = particular.clone();
        for (b, &i) in basis.iter().zip(&idx) {
            for (x, y) in r.iter_mut().zip(b) {
                *x = x.add(&y.mul(&values[i]));
            }
        }
        if library_verifies(h, &to_tensor(h.field(), h.dim(), &r)) {
            library.push(r);
        }
        let mut k = 0;
        while k < idx.len() {
            idx[k] += 1;
            if idx[k] < values.len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
        if k == idx.len() {
            break;
        }
    }
    assert_eq!(found, library, "oracle and library disagree");
    found
}

#[test]
fn cyclic_two_grid() {
    let q = Field::rationals();
    let h = Arc::new(group_algebra(&q, &GroupSpec::Cyclic { n: 2 }).unwrap());
    let found = solve_and_compare(&h, Rational64::from_integer(0), &halves(-2, 2));
    let shown: Vec<Vec<String>> = found.iter().map(|r| r.iter().map(|c| c.to_string()).collect()).collect();
    // Oracle output: 1 ⊗ 1 and ½(1⊗1 + 1⊗g + g⊗1 − g⊗g).
    assert_eq!(
        shown,
        vec![vec!["1/2", "1/2", "1/2", "-1/2"], vec!["1", "0", "0", "0"]]
    );
}

#[test]
fn sweedler_grid_is_the_alpha_family() {
    let q = Field::rationals();
    let h = Arc::new(sweedler(&q).unwrap());
    let found = solve_and_compare(&h, Rational64::from_integer(0), &halves(-1, 1));
    // Oracle output: exactly the five members with α/2 ∈ {-1, -1/2, 0, 1/2, 1}
    // on the grid of x-part coordinates.
    assert_eq!(found.len(), 5);
    let mut alphas = Vec::new();
    for r in &found {
        let alpha = r[10] * Rational64::from_integer(2);
        let expected = common::sweedler_r(&q, &q.parse(&alpha.to_string()).unwrap());
        assert_eq!(to_tensor(&q, 4, r), expected);
        alphas.push(alpha);
        let qt = verify_rmatrix(&h, &expected).unwrap();
        assert!(!is_factorizable(&qt).unwrap());
        assert!(qt.triangular);
        assert_eq!(qt.full_rank, alpha != Rational64::from_integer(0));
    }
    alphas.sort();
    assert_eq!(alphas, (-2..=2).map(Rational64::from_integer).collect::<Vec<_>>());
}

#[test]
fn taft_three_has_no_rmatrix() {
    let gf7 = Field::new(FieldSpec::PrimeField { p: 7 }).unwrap();
    let h = Arc::new(taft(&gf7, 3, Some(gf7.from_i64(2))).unwrap());
    let dense = Dense::from_hopf(&h, Gf::new(0, 7));
    // Quasi-cocommutativity and counit normalization are linear in R and
    // already inconsistent on all of H ⊗ H.
    assert!(linear_candidates(&dense).is_none());

    // Explicit enumeration of the x-free part: R = Σ c_ik a^i ⊗ a^k with
    // counit normalization, 7^4 points.
    let zero = Gf::new(0, 7);
    let idx = |i: usize, k: usize| i * 9 + k;
    let mut visited = 0;
    let mut oracle_hits = 0;
    let mut library_hits = 0;
    for c11 in 0..7 {
        for c12 in 0..7 {
            for c21 in 0..7 {
                for c22 in 0..7 {
                    let mut r = vec![zero; 81];
                    let c = |v: i64| Gf::new(v, 7);
                    r[idx(1, 1)] = c(c11);
                    r[idx(1, 2)] = c(c12);
                    r[idx(2, 1)] = c(c21);
                    r[idx(2, 2)] = c(c22);
                    // Row and column sums fixed by (ε ⊗ id)R = (id ⊗ ε)R = 1.
                    r[idx(1, 0)] = c(-c11 - c12);
                    r[idx(2, 0)] = c(-c21 - c22);
                    r[idx(0, 1)] = c(-c11 - c21);
                    r[idx(0, 2)] = c(-c12 - c22);
                    r[idx(0, 0)] = c(1 + c11 + c12 + c21 + c22);
                    visited += 1;
                    if dense.is_rmatrix(&r) {
                        oracle_hits += 1;
                    }
                    let t = Tensor::from_terms(
                        &gf7,
                        &[9, 9],
                        r.iter().enumerate().map(|(i, v)| (i, gf7.from_i64(v.v as i64))),
                    );
                    if library_verifies(&h, &t) {
                        library_hits += 1;
                    }
                }
            }
        }
    }
    assert_eq!(visited, 2401);
    assert_eq!(oracle_hits, 0);
    assert_eq!(library_hits, 0);
}

#[test]
fn cyclic_three_bicharacters_over_gf7() {
    // Sanity check of the same enumeration on kZ3, where R-matrices exist.
    let gf7 = Field::new(FieldSpec::PrimeField { p: 7 }).unwrap();
    let h = Arc::new(group_algebra(&gf7, &GroupSpec::Cyclic { n: 3 }).unwrap());
    let dense = Dense::from_hopf(&h, Gf::new(0, 7));
    let (particular, basis) = linear_candidates(&dense).unwrap();
    let values: Vec<Gf> = (0..7).map(|v| Gf::new(v, 7)).collect();
    let (found, visited) = search(&dense, &particular, &basis, &values);
    assert_eq!(visited, 7usize.pow(basis.len() as u32));
    for r in &found {
        let t = Tensor::from_terms(&gf7, &[3, 3], r.iter().enumerate().map(|(i, v)| (i, gf7.from_i64(v.v as i64))));
        assert!(library_verifies(&h, &t));
    }
    // Oracle output: one R-matrix per bicharacter of Z3 with values in GF(7).
    assert_eq!(found.len(), 3);
}
