//! Transmutation: the braided Hopf algebra living in `Rep(H)`, its dual
//! version on `K*`, and the quotient map between transmutations.
//!
//! With `R = Σ R_i ⊗ R^i` and `x ▷ y = x₁ y S(x₂)`:
//! `Δ_b(a) = a₁ S(R^i) ⊗ R_i ▷ a₂`, `S_b(a) = R^i S(R_i ▷ a)`, and the
//! braided tensor product is `(a ⊗ b)(c ⊗ d) = a (R^i ▷ c) ⊗ (R_i ▷ b) d`.

use std::sync::Arc;

use super::{monodromy, QTStructure};
use crate::error::Result;
use crate::hopf::{adjoint_action, coinvariants, verify_morphism, HopfAlgebra, HopfMorphism, Side, Tensor};
use crate::kernel::{vector, Matrix, Scalar, SparseTensor3, Subspace};
use crate::par;
use crate::report::{Check, Report};

#[derive(Clone, Debug)]
pub struct BraidedHopfData {
    /// The Hopf algebra whose algebra part is kept.
    pub carrier: Arc<HopfAlgebra>,
    pub r: Tensor,
    pub braided_comul: SparseTensor3,
    /// Column `i` is `S_b(e_i)`.
    pub braided_antipode: Matrix,
    /// `action[i]` is the matrix of `y ↦ e_i ▷ y`.
    pub action: Vec<Matrix>,
    pub report: Report,
}

impl BraidedHopfData {
    pub fn coproduct(&self, x: &[Scalar]) -> Tensor {
        let f = self.carrier.field();
        let d = self.carrier.dim();
        let mut t = Tensor::zero(&[d, d]);
        for (i, a) in x.iter().enumerate() {
            if f.is_zero(a) {
                continue;
            }
            for (j, k, c) in self.braided_comul.slice(i) {
                t.add_term(f, j * d + k, &f.mul(a, c));
            }
        }
        t
    }

    pub fn apply_antipode(&self, x: &[Scalar]) -> Vec<Scalar> {
        self.braided_antipode.mul_vec(x)
    }

    /// Subspace `{h : (id ⊗ π)Δ_b(h) = h ⊗ 1}`.
    pub fn coinvariants(&self, pi: &HopfMorphism) -> Subspace {
        let f = self.carrier.field();
        let d = self.carrier.dim();
        let cols: Vec<Vec<Scalar>> = (0..d)
            .map(|i| {
                let e = self.carrier.basis_vector(i);
                self.coproduct(&e)
                    .apply_matrix(1, &pi.matrix)
                    .sub(f, &Tensor::pure(f, &[&e, pi.target.unit()]))
                    .to_vector(f)
            })
            .collect();
        Subspace::kernel(&Matrix::from_columns(f, d * pi.target.dim(), &cols))
    }
}

fn action_matrices(h: &HopfAlgebra) -> Vec<Matrix> {
    par::map_range(h.dim(), |i| {
        let e = h.basis_vector(i);
        let cols: Vec<Vec<Scalar>> = (0..h.dim()).map(|j| adjoint_action(h, &e, &h.basis_vector(j))).collect();
        Matrix::from_columns(h.field(), h.dim(), &cols)
    })
}

/// `x ▷ y` for an arbitrary `x`, from the basis action matrices.
fn act(h: &HopfAlgebra, action: &[Matrix], x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    let f = h.field();
    let mut out = vec![f.zero(); y.len()];
    for (i, c) in x.iter().enumerate() {
        if !f.is_zero(c) {
            vector::axpy(f, &mut out, c, &action[i].mul_vec(y));
        }
    }
    out
}

fn r_terms(h: &HopfAlgebra, r: &Tensor) -> Vec<(usize, usize, Scalar)> {
    let d = h.dim();
    r.terms().map(|(pq, c)| (pq / d, pq % d, c.clone())).collect()
}

/// Braided product on `A ⊗ B` where `H` acts on `A` by `act_a` and on `B` by `act_b`:
/// `(a ⊗ b)(c ⊗ d) = a (R^i ▷ c) ⊗ (R_i ▷ b) d`.
#[allow(clippy::too_many_arguments)]
fn braided_tensor_mul(
    h: &HopfAlgebra,
    r: &[(usize, usize, Scalar)],
    a_alg: &HopfAlgebra,
    act_a: &[Matrix],
    b_alg: &HopfAlgebra,
    act_b: &[Matrix],
    x: &Tensor,
    y: &Tensor,
) -> Tensor {
    let f = h.field();
    let (da, db) = (a_alg.dim(), b_alg.dim());
    let mut out = Tensor::zero(&[da, db]);
    for (xi, xc) in x.terms() {
        let (x0, x1) = (xi / db, xi % db);
        for (yi, yc) in y.terms() {
            let (y0, y1) = (yi / db, yi % db);
            let coef = f.mul(xc, yc);
            for (p, q, rc) in r {
                let left = a_alg.mul(&a_alg.basis_vector(x0), &act_a[*q].column(y0));
                let right = b_alg.mul(&act_b[*p].column(x1), &b_alg.basis_vector(y1));
                let c = f.mul(&coef, rc);
                out = out.add(f, &Tensor::pure(f, &[&left, &right]).scale(f, &c));
            }
        }
    }
    out
}

fn transmute_inner(h: &Arc<HopfAlgebra>, r: &Tensor) -> BraidedHopfData {
    let f = h.field().clone();
    let d = h.dim();
    let action = action_matrices(h);
    let terms = r_terms(h, r);
    let s = h.antipode();

    let images: Vec<Tensor> = par::map_range(d, |i| {
        let t = h.coproduct(&h.basis_vector(i));
        let mut out = Tensor::zero(&[d, d]);
        for (xy, c) in t.terms() {
            let (x, y) = (xy / d, xy % d);
            for (p, q, rc) in &terms {
                let left = h.mul(&h.basis_vector(x), &s.column(*q));
                let right = action[*p].column(y);
                out = out.add(&f, &Tensor::pure(&f, &[&left, &right]).scale(&f, &f.mul(c, rc)));
            }
        }
        out
    });
    let mut braided_comul = SparseTensor3::cube(d);
    for (i, t) in images.iter().enumerate() {
        for (jk, c) in t.terms() {
            braided_comul.add(&f, i, jk / d, jk % d, c);
        }
    }
    let cols: Vec<Vec<Scalar>> = (0..d)
        .map(|i| {
            let mut out = h.zero_vector();
            for (p, q, rc) in &terms {
                let v = h.mul(&h.basis_vector(*q), &s.mul_vec(&action[*p].column(i)));
                vector::axpy(&f, &mut out, rc, &v);
            }
            out
        })
        .collect();
    let braided_antipode = Matrix::from_columns(&f, d, &cols);
    let mut data = BraidedHopfData {
        carrier: h.clone(),
        r: r.clone(),
        braided_comul,
        braided_antipode,
        action,
        report: Report::new(),
    };
    data.report = braided_checks(&data, &terms);
    data
}

fn braided_checks(b: &BraidedHopfData, terms: &[(usize, usize, Scalar)]) -> Report {
    let h = &*b.carrier;
    let f = h.field();
    let d = h.dim();
    let mut report = Report::new();
    let delta_leg = |t: &Tensor, leg: usize| -> Tensor {
        t.map_leg(f, leg, &[d, d], |k| b.coproduct(&h.basis_vector(k)).terms().map(|(i, c)| (i, c.clone())).collect())
    };
    let coassoc = par::find_first(d, |i| {
        let t = b.coproduct(&h.basis_vector(i));
        (delta_leg(&t, 0) != delta_leg(&t, 1)).then(|| vec![i])
    });
    report.push(Check::from_witness("braided_coassociativity", coassoc));

    let counit = par::find_first(d, |i| {
        let e = h.basis_vector(i);
        let t = b.coproduct(&e);
        (h.eps_leg(&t, 0).to_vector(f) != e || h.eps_leg(&t, 1).to_vector(f) != e).then(|| vec![i])
    });
    report.push(Check::from_witness("braided_counit", counit));

    let mult = par::find_first(d * d, |ij| {
        let (i, j) = (ij / d, ij % d);
        let lhs = b.coproduct(&h.mul(&h.basis_vector(i), &h.basis_vector(j)));
        let rhs = braided_tensor_mul(
            h,
            terms,
            h,
            &b.action,
            h,
            &b.action,
            &b.coproduct(&h.basis_vector(i)),
            &b.coproduct(&h.basis_vector(j)),
        );
        (lhs != rhs).then(|| vec![i, j])
    });
    report.push(Check::from_witness("braided_multiplicativity", mult));

    let antipode = par::find_first(d, |i| {
        let t = b.coproduct(&h.basis_vector(i));
        let want = vector::scale(f, &h.counit()[i], h.unit());
        let left = h.mul_legs(&t.apply_matrix(0, &b.braided_antipode), 0).to_vector(f);
        let right = h.mul_legs(&t.apply_matrix(1, &b.braided_antipode), 0).to_vector(f);
        (left != want || right != want).then(|| vec![i])
    });
    report.push(Check::from_witness("braided_antipode", antipode));
    report
}

/// Transmutation of `(H, R)`, or of `(K, (π ⊗ π)R)` when `π` is given.
pub fn transmute(q: &QTStructure, pi: Option<&HopfMorphism>) -> Result<BraidedHopfData> {
    match pi {
        None => Ok(transmute_inner(q.hopf(), q.r())),
        Some(p) => {
            let r = p.apply_tensor(q.r());
            Ok(transmute_inner(&p.target, &r))
        }
    }
}

/// Braided product and antipode on `K*` for `(K, R)`, with `⟨f, g⟩_R = (f ⊗ g)(R)`:
/// `f · g = ⟨S(f₁) f₃, S(g₁)⟩_R f₂ g₂` and
/// `S_b(f) = ⟨S²(f₃) S(f₁), f₄⟩_R S(f₂)`. The coalgebra is that of `K*`.
#[derive(Clone, Debug)]
pub struct BraidedDual {
    pub dual: Arc<HopfAlgebra>,
    pub mul: SparseTensor3,
    pub antipode: Matrix,
    /// Which of `Φ`, `Φ_τ` intertwines, if any.
    pub phi_variant: Option<&'static str>,
    pub report: Report,
}

impl BraidedDual {
    pub fn product(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let f = self.dual.field();
        let d = self.dual.dim();
        let mut out = vec![f.zero(); d];
        for (i, a) in x.iter().enumerate() {
            if f.is_zero(a) {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if f.is_zero(b) {
                    continue;
                }
                let ab = f.mul(a, b);
                for (jj, k, c) in self.mul.slice(i) {
                    if jj == j {
                        out[k] = f.add(&out[k], &f.mul(&ab, c));
                    }
                }
            }
        }
        out
    }
}

pub fn braided_dual(q: &QTStructure) -> Result<BraidedDual> {
    let k = q.hopf();
    let f = k.field().clone();
    let d = k.dim();
    let dual = Arc::new(k.dual());
    let rm = q.r_matrix();
    let pair = |x: &[Scalar], y: &[Scalar]| -> Scalar { vector::dot(&f, x, &rm.mul_vec(y)) };
    let sd = dual.antipode().clone();

    let delta_n = |a: usize, legs: usize| -> Vec<(Vec<usize>, Scalar)> {
        let mut t = dual.coproduct(&dual.basis_vector(a));
        for leg in 2..legs {
            t = dual.delta_leg(&t, leg - 2);
        }
        t.terms().map(|(i, c)| (t.split_index(i), c.clone())).collect()
    };

    let products: Vec<Vec<Scalar>> = par::map_range(d * d, |ac| {
        let (a, c) = (ac / d, ac % d);
        let mut out = vec![f.zero(); d];
        for (fa, ca) in delta_n(a, 3) {
            let sf1_f3 = dual.mul(&sd.column(fa[0]), &dual.basis_vector(fa[2]));
            for (gc, cc) in delta_n(c, 2) {
                let w = pair(&sf1_f3, &sd.column(gc[0]));
                if f.is_zero(&w) {
                    continue;
                }
                let v = dual.mul(&dual.basis_vector(fa[1]), &dual.basis_vector(gc[1]));
                vector::axpy(&f, &mut out, &f.mul(&w, &f.mul(&ca, &cc)), &v);
            }
        }
        out
    });
    let mut mul = SparseTensor3::cube(d);
    for (ac, v) in products.iter().enumerate() {
        for (m, c) in v.iter().enumerate() {
            mul.add(&f, ac / d, ac % d, m, c);
        }
    }
    let s2 = sd.mul(&sd);
    let cols: Vec<Vec<Scalar>> = par::map_range(d, |a| {
        let mut out = vec![f.zero(); d];
        for (fa, ca) in delta_n(a, 4) {
            let x = dual.mul(&s2.column(fa[2]), &sd.column(fa[0]));
            let w = pair(&x, &dual.basis_vector(fa[3]));
            if !f.is_zero(&w) {
                vector::axpy(&f, &mut out, &f.mul(&w, &ca), &sd.column(fa[1]));
            }
        }
        out
    });
    let antipode = Matrix::from_columns(&f, d, &cols);
    let mut bd = BraidedDual {
        dual: dual.clone(),
        mul,
        antipode,
        phi_variant: None,
        report: Report::new(),
    };

    let mut report = Report::new();
    let assoc = par::find_first(d * d * d, |idx| {
        let (a, b, c) = (idx / (d * d), (idx / d) % d, idx % d);
        let (x, y, z) = (dual.basis_vector(a), dual.basis_vector(b), dual.basis_vector(c));
        (bd.product(&bd.product(&x, &y), &z) != bd.product(&x, &bd.product(&y, &z))).then(|| vec![a, b, c])
    });
    report.push(Check::from_witness("braided_associativity", assoc));
    let unit = dual.unit().to_vec();
    let unit_ok = (0..d).all(|a| {
        let e = dual.basis_vector(a);
        bd.product(&unit, &e) == e && bd.product(&e, &unit) == e
    });
    report.push(Check::from_bool("braided_unit", unit_ok, "ε is not a two-sided unit"));
    let anti = par::find_first(d, |a| {
        let want = vector::scale(&f, &dual.counit()[a], &unit);
        let t = dual.coproduct(&dual.basis_vector(a));
        let mut left = vec![f.zero(); d];
        let mut right = vec![f.zero(); d];
        for (xy, c) in t.terms() {
            let (x, y) = (xy / d, xy % d);
            vector::axpy(&f, &mut left, c, &bd.product(&bd.antipode.column(x), &dual.basis_vector(y)));
            vector::axpy(&f, &mut right, c, &bd.product(&dual.basis_vector(x), &bd.antipode.column(y)));
        }
        (left != want || right != want).then(|| vec![a])
    });
    report.push(Check::from_witness("braided_antipode", anti));

    // Φ as a map from the braided dual to the transmutation of (K, R)
    let trans = transmute_inner(k, q.r());
    let mono = monodromy(q).to_matrix(&f);
    let variants: [(&'static str, Matrix); 2] = [("phi", mono.transpose()), ("phi_tau", mono.clone())];
    for (name, phi) in &variants {
        let alg = (0..d * d).all(|ac| {
            let (a, c) = (ac / d, ac % d);
            let lhs = phi.mul_vec(&bd.product(&dual.basis_vector(a), &dual.basis_vector(c)));
            lhs == k.mul(&phi.column(a), &phi.column(c))
        });
        let coalg = (0..d).all(|a| {
            let lhs = trans.coproduct(&phi.column(a));
            let rhs = dual.coproduct(&dual.basis_vector(a)).apply_matrix(0, phi).apply_matrix(1, phi);
            lhs == rhs
        });
        if alg && coalg {
            bd.phi_variant = Some(name);
            break;
        }
    }
    report.push(Check::from_bool(
        "underline_phi",
        bd.phi_variant.is_some(),
        "neither Φ nor Φ_τ intertwines the braided structures",
    ));
    bd.report = report;
    Ok(bd)
}

/// The quotient map between transmutations: coalgebra map, antipode,
/// comodule-algebra identity for `ρ = (id ⊗ π)Δ_b`, and equality of the
/// braided and ordinary coinvariants.
pub fn check_underline_pi(q: &QTStructure, pi: &HopfMorphism) -> Result<Report> {
    let mut report = Report::new();
    let pi_report = verify_morphism(pi);
    if let Some(c) = pi_report.first_failure() {
        report.push(Check::fail("pi_hopf_map", c.witness.clone(), format!("{}: {}", c.name, c.detail)));
        return Ok(report);
    }
    report.push(Check::pass("pi_hopf_map"));
    let h = q.hopf();
    let k = &pi.target;
    let f = h.field().clone();
    let d = h.dim();
    let bh = transmute(q, None)?;
    let bk = transmute(q, Some(pi))?;

    let coalg = par::find_first(d, |i| {
        let lhs = pi.apply_tensor(&bh.coproduct(&h.basis_vector(i)));
        (lhs != bk.coproduct(&pi.matrix.column(i))).then(|| vec![i])
    });
    report.push(Check::from_witness("coalgebra_map", coalg));
    let anti = (0..d).find(|&i| pi.apply(&bh.braided_antipode.column(i)) != bk.apply_antipode(&pi.matrix.column(i)));
    report.push(Check::from_witness("antipode", anti.map(|i| vec![i])));

    let terms = r_terms(h, q.r());
    // H acts on K through π
    let act_k: Vec<Matrix> = (0..d)
        .map(|i| {
            let x = pi.matrix.column(i);
            let cols: Vec<Vec<Scalar>> = (0..k.dim()).map(|j| act(k, &bk.action, &x, &k.basis_vector(j))).collect();
            Matrix::from_columns(&f, k.dim(), &cols)
        })
        .collect();
    let rho = |x: &[Scalar]| bh.coproduct(x).apply_matrix(1, &pi.matrix);
    let comod = par::find_first(d * d, |ij| {
        let (i, j) = (ij / d, ij % d);
        let lhs = rho(&h.mul(&h.basis_vector(i), &h.basis_vector(j)));
        let rhs = braided_tensor_mul(
            h,
            &terms,
            h,
            &bh.action,
            k,
            &act_k,
            &rho(&h.basis_vector(i)),
            &rho(&h.basis_vector(j)),
        );
        (lhs != rhs).then(|| vec![i, j])
    });
    report.push(Check::from_witness("comodule_algebra", comod));

    let underline = bh.coinvariants(pi);
    let ordinary = coinvariants(pi, Side::Right);
    report.push(Check::from_bool(
        "coinvariants_equal",
        underline == ordinary,
        format!("braided dim {} vs ordinary dim {}", underline.dim(), ordinary.dim()),
    ));
    Ok(report)
}
