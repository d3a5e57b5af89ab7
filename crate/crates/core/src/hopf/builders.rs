//! Named constructions and the expression language the CLI parses.

use serde::{Deserialize, Serialize};

use super::{HopfAlgebra, Tensor};
use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::kernel::{vector, Field, Matrix, Scalar, SparseTensor3};

/// A finite group, by presentation shortcut or by Cayley table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum GroupSpec {
    Cyclic { n: usize },
    /// Permutations of `{0..n}` in lexicographic order; composition `(στ)(i) = σ(τ(i))`.
    Symmetric { n: usize },
    /// `table[i][j]` is the index of `g_i g_j`.
    Table { table: Vec<Vec<usize>> },
}

/// Builder expressions. Scalars are strings parsed in the target field.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "builder", rename_all = "snake_case", deny_unknown_fields)]
pub enum BuilderExpr {
    GroupAlgebra {
        group: GroupSpec,
    },
    Sweedler {},
    Taft {
        p: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        omega: Option<String>,
    },
    Dual {
        of: Box<BuilderExpr>,
    },
    Tensor {
        left: Box<BuilderExpr>,
        right: Box<BuilderExpr>,
    },
    Double {
        of: Box<BuilderExpr>,
    },
    /// `j` lists `[a, b, "c"]` for the term `c e_a ⊗ e_b`.
    Twist {
        of: Box<BuilderExpr>,
        j: Vec<(usize, usize, String)>,
    },
    /// Quotient by the Hopf ideal generated by `L⁺` for the span `coideal`.
    Quotient {
        of: Box<BuilderExpr>,
        coideal: Vec<Vec<String>>,
    },
    Op {
        of: Box<BuilderExpr>,
    },
    Cop {
        of: Box<BuilderExpr>,
    },
    Raw(RawStructure),
}

/// Structure constants as sparse lists. `antipode` entries `[i, j, "c"]`
/// mean `S(e_i)` has coefficient `c` on `e_j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawStructure {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub dim: usize,
    pub mul: Vec<(usize, usize, usize, String)>,
    pub unit: Vec<String>,
    pub comul: Vec<(usize, usize, usize, String)>,
    pub counit: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub antipode: Option<Vec<(usize, usize, String)>>,
}

impl BuilderExpr {
    pub fn group(g: GroupSpec) -> BuilderExpr {
        BuilderExpr::GroupAlgebra { group: g }
    }

    pub fn cyclic(n: usize) -> BuilderExpr {
        BuilderExpr::group(GroupSpec::Cyclic { n })
    }

    pub fn dual(of: BuilderExpr) -> BuilderExpr {
        BuilderExpr::Dual { of: Box::new(of) }
    }

    pub fn tensor(left: BuilderExpr, right: BuilderExpr) -> BuilderExpr {
        BuilderExpr::Tensor {
            left: Box::new(left),
            right: Box::new(right),
        }
    }

    pub fn double(of: BuilderExpr) -> BuilderExpr {
        BuilderExpr::Double { of: Box::new(of) }
    }

    /// Short human-readable form, e.g. `tensor(sweedler, kZ2)`.
    pub fn label(&self) -> String {
        match self {
            BuilderExpr::GroupAlgebra { group } => match group {
                GroupSpec::Cyclic { n } => format!("kZ{n}"),
                GroupSpec::Symmetric { n } => format!("kS{n}"),
                GroupSpec::Table { table } => format!("kG[{}]", table.len()),
            },
            BuilderExpr::Sweedler {} => "sweedler".into(),
            BuilderExpr::Taft { p, omega } => match omega {
                Some(w) => format!("taft({p}, {w})"),
                None => format!("taft({p})"),
            },
            BuilderExpr::Dual { of } => format!("dual({})", of.label()),
            BuilderExpr::Tensor { left, right } => format!("tensor({}, {})", left.label(), right.label()),
            BuilderExpr::Double { of } => format!("double({})", of.label()),
            BuilderExpr::Twist { of, .. } => format!("twist({})", of.label()),
            BuilderExpr::Quotient { of, .. } => format!("quotient({})", of.label()),
            BuilderExpr::Op { of } => format!("op({})", of.label()),
            BuilderExpr::Cop { of } => format!("cop({})", of.label()),
            BuilderExpr::Raw(r) => r.name.clone().unwrap_or_else(|| format!("raw[{}]", r.dim)),
        }
    }
}

/// Evaluates a builder expression over `field`.
pub fn build_catalog(field: &Field, expr: &BuilderExpr) -> Result<HopfAlgebra> {
    let h = match expr {
        BuilderExpr::GroupAlgebra { group } => group_algebra(field, group)?,
        BuilderExpr::Sweedler {} => sweedler(field)?,
        BuilderExpr::Taft { p, omega } => {
            let w = match omega {
                Some(s) => Some(field.parse(s).map_err(|e| builder_err("taft", e.to_string()))?),
                None => None,
            };
            taft(field, *p, w)?
        }
        BuilderExpr::Dual { of } => build_catalog(field, of)?.dual(),
        BuilderExpr::Tensor { left, right } => build_catalog(field, left)?.tensor(&build_catalog(field, right)?)?,
        BuilderExpr::Double { of } => {
            let k = build_catalog(field, of)?;
            crate::qt::drinfeld_double(&k)?.hopf().as_ref().clone()
        }
        BuilderExpr::Twist { of, j } => {
            let h = build_catalog(field, of)?;
            let d = h.dim();
            let mut t = Tensor::zero(&[d, d]);
            for (a, b, c) in j {
                if *a >= d || *b >= d {
                    return Err(builder_err("twist", format!("index ({a}, {b}) out of range for dimension {d}")));
                }
                t.add_term(field, a * d + b, &field.parse(c)?);
            }
            let tw = crate::qt::verify_twist(&h, &t)?;
            if !tw.report.passed() {
                return Err(builder_err("twist", format!("not a twist: {}", tw.report.failed_names().join(", "))));
            }
            crate::qt::apply_twist(&h, &tw, None)?.0
        }
        BuilderExpr::Quotient { of, coideal } => {
            let h = build_catalog(field, of)?;
            let vecs = coideal
                .iter()
                .map(|v| {
                    if v.len() != h.dim() {
                        return Err(builder_err("quotient", format!("vector of length {} in dimension {}", v.len(), h.dim())));
                    }
                    v.iter().map(|s| field.parse(s)).collect::<Result<Vec<_>>>()
                })
                .collect::<Result<Vec<_>>>()?;
            let l = crate::kernel::Subspace::span(field, h.dim(), &vecs);
            super::quotient_by_coideal(&h.into_arc(), &l)?.quotient.as_ref().clone()
        }
        BuilderExpr::Op { of } => build_catalog(field, of)?.op(),
        BuilderExpr::Cop { of } => build_catalog(field, of)?.cop(),
        BuilderExpr::Raw(raw) => raw_structure(field, raw)?,
    };
    Ok(h.with_name(expr.label()))
}

fn builder_err(builder: &str, reason: impl Into<String>) -> Error {
    Error::Builder {
        builder: builder.into(),
        reason: reason.into(),
    }
}

/// Cayley table of a group spec, with the identity at index 0 for the
/// cyclic and symmetric shortcuts.
pub fn group_table(spec: &GroupSpec) -> Result<Vec<Vec<usize>>> {
    match spec {
        GroupSpec::Cyclic { n } => {
            if *n == 0 {
                return Err(builder_err("group_algebra", "cyclic group of order 0"));
            }
            Ok((0..*n).map(|i| (0..*n).map(|j| (i + j) % n).collect()).collect())
        }
        GroupSpec::Symmetric { n } => {
            if *n == 0 || *n > 5 {
                return Err(builder_err("group_algebra", "symmetric groups are limited to 1 ≤ n ≤ 5"));
            }
            let perms = permutations(*n);
            let index = |p: &[usize]| perms.iter().position(|q| q == p).expect("closed under composition");
            Ok(perms
                .iter()
                .map(|s| {
                    perms
                        .iter()
                        .map(|t| index(&(0..*n).map(|i| s[t[i]]).collect::<Vec<_>>()))
                        .collect()
                })
                .collect())
        }
        GroupSpec::Table { table } => Ok(table.clone()),
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in 0..n {
        for rest in permutations(n - 1) {
            let mut p = vec![first];
            p.extend(rest.into_iter().map(|x| if x >= first { x + 1 } else { x }));
            out.push(p);
        }
    }
    out
}

/// Group algebra `kG`: `Δ(g) = g ⊗ g`, `ε(g) = 1`, `S(g) = g⁻¹`.
pub fn group_algebra(field: &Field, spec: &GroupSpec) -> Result<HopfAlgebra> {
    let table = group_table(spec)?;
    let n = table.len();
    if n == 0 || table.iter().any(|row| row.len() != n || row.iter().any(|&x| x >= n)) {
        return Err(builder_err("group_algebra", "Cayley table must be square with entries < order"));
    }
    let identity = (0..n)
        .find(|&e| (0..n).all(|g| table[e][g] == g && table[g][e] == g))
        .ok_or_else(|| builder_err("group_algebra", "table has no identity element"))?;
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if table[table[a][b]][c] != table[a][table[b][c]] {
                    return Err(builder_err("group_algebra", format!("table is not associative at ({a}, {b}, {c})")));
                }
            }
        }
    }
    let inverse: Vec<usize> = (0..n)
        .map(|g| (0..n).find(|&h| table[g][h] == identity))
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| builder_err("group_algebra", "some element has no inverse"))?;

    let mut mul = SparseTensor3::cube(n);
    let mut comul = SparseTensor3::cube(n);
    for g in 0..n {
        for h in 0..n {
            mul.add(field, g, h, table[g][h], &field.one());
        }
        comul.add(field, g, g, g, &field.one());
    }
    let algebra = Algebra::new(field, mul, vector::unit(field, n, identity))?;
    let antipode = Matrix::from_fn(field, n, n, |r, c| if inverse[c] == r { field.one() } else { field.zero() });
    HopfAlgebra::from_parts("group", algebra, comul, vec![field.one(); n], Some(antipode))
}

/// Sweedler's four-dimensional algebra: basis `{1, a, x, ax}`.
pub fn sweedler(field: &Field) -> Result<HopfAlgebra> {
    if field.characteristic() == 2 {
        return Err(builder_err("sweedler", "requires characteristic != 2"));
    }
    taft(field, 2, Some(field.neg(&field.one()))).map(|h| h.with_name("sweedler"))
}

/// Taft algebra of dimension `p²` with basis `a^i x^j` at index `i + p j`.
/// Without `omega`, the first element of order `p` found is used.
pub fn taft(field: &Field, p: usize, omega: Option<Scalar>) -> Result<HopfAlgebra> {
    if p < 2 {
        return Err(builder_err("taft", "p must be at least 2"));
    }
    let omega = match omega {
        Some(w) => {
            if field.multiplicative_order(&w) != Some(p as u64) {
                return Err(builder_err("taft", "omega must have multiplicative order p"));
            }
            w
        }
        None => default_root(field, p)
            .ok_or_else(|| builder_err("taft", format!("field {} has no element of multiplicative order {p}", field.spec())))?,
    };
    let d = p * p;
    let idx = |i: usize, j: usize| i + p * j;
    let omega_pow: Vec<Scalar> = (0..p).map(|e| field.pow(&omega, e as u64)).collect();
    let mut unit = vec![field.zero(); d];
    unit[0] = field.one();
    let algebra = Algebra::from_fn(field, d, unit, |s, t| {
        let (i, j) = (s % p, s / p);
        let (k, l) = (t % p, t / p);
        let mut v = vec![field.zero(); d];
        if j + l < p {
            v[idx((i + k) % p, j + l)] = omega_pow[(j * k) % p].clone();
        }
        v
    })?;

    let a = vector::unit(field, d, idx(1, 0));
    let x = vector::unit(field, d, idx(0, 1));
    let one = algebra.unit().to_vec();
    let algs = [&algebra, &algebra];
    let delta_a = Tensor::pure(field, &[&a, &a]);
    let delta_x = Tensor::pure(field, &[&x, &a]).add(field, &Tensor::pure(field, &[&one, &x]));
    let mut comul = SparseTensor3::cube(d);
    let mut antipode_cols = Vec::with_capacity(d);
    let s_a = algebra.power(&a, p - 1);
    let s_x = vector::scale(field, &field.neg(&field.one()), &algebra.mul(&x, &s_a));
    for s in 0..d {
        let (i, j) = (s % p, s / p);
        let mut t = Tensor::pure(field, &[&one, &one]);
        for _ in 0..i {
            t = t.mul(&delta_a, &algs);
        }
        for _ in 0..j {
            t = t.mul(&delta_x, &algs);
        }
        for (jk, c) in t.terms() {
            comul.add(field, s, jk / d, jk % d, c);
        }
        // S(a^i x^j) = S(x)^j S(a)^i
        antipode_cols.push(algebra.mul(&algebra.power(&s_x, j), &algebra.power(&s_a, i)));
    }
    let counit: Vec<Scalar> = (0..d).map(|s| if s / p == 0 { field.one() } else { field.zero() }).collect();
    let antipode = Matrix::from_columns(field, d, &antipode_cols);
    HopfAlgebra::from_parts(format!("taft({p})"), algebra, comul, counit, Some(antipode))
}

fn default_root(field: &Field, p: usize) -> Option<Scalar> {
    if let Some(elements) = field.elements() {
        return elements.into_iter().find(|e| field.multiplicative_order(e) == Some(p as u64));
    }
    let z = field.generator()?;
    let mut acc = field.one();
    for _ in 0..(2 * field.degree() + 2) * p {
        acc = field.mul(&acc, &z);
        if field.multiplicative_order(&acc) == Some(p as u64) {
            return Some(acc);
        }
    }
    let minus_one = field.neg(&field.one());
    (field.multiplicative_order(&minus_one) == Some(p as u64)).then_some(minus_one)
}

/// Builds a Hopf algebra from sparse structure-constant lists, parsing scalars in `field`.
pub fn raw_structure(field: &Field, raw: &RawStructure) -> Result<HopfAlgebra> {
    let d = raw.dim;
    let bad = |what: &str| builder_err("raw", format!("{what} index out of range for dimension {d}"));
    let mut mul = SparseTensor3::cube(d);
    for (i, j, k, c) in &raw.mul {
        if *i >= d || *j >= d || *k >= d {
            return Err(bad("mul"));
        }
        mul.add(field, *i, *j, *k, &field.parse(c)?);
    }
    let mut comul = SparseTensor3::cube(d);
    for (i, j, k, c) in &raw.comul {
        if *i >= d || *j >= d || *k >= d {
            return Err(bad("comul"));
        }
        comul.add(field, *i, *j, *k, &field.parse(c)?);
    }
    let parse_vec = |v: &[String], what: &str| -> Result<Vec<Scalar>> {
        if v.len() != d {
            return Err(builder_err("raw", format!("{what} has length {} but dim is {d}", v.len())));
        }
        v.iter().map(|s| field.parse(s)).collect()
    };
    let unit = parse_vec(&raw.unit, "unit")?;
    let counit = parse_vec(&raw.counit, "counit")?;
    let antipode = match &raw.antipode {
        None => None,
        Some(entries) => {
            let mut m = Matrix::zeros(field, d, d);
            for (i, j, c) in entries {
                if *i >= d || *j >= d {
                    return Err(bad("antipode"));
                }
                let v = field.add(m.get(*j, *i), &field.parse(c)?);
                m.set(*j, *i, v);
            }
            Some(m)
        }
    };
    HopfAlgebra::from_parts(
        raw.name.clone().unwrap_or_else(|| "raw".into()),
        Algebra::new(field, mul, unit)?,
        comul,
        counit,
        antipode,
    )
}

/// The one-dimensional Hopf algebra `k`.
pub fn trivial(field: &Field) -> HopfAlgebra {
    group_algebra(field, &GroupSpec::Cyclic { n: 1 }).expect("trivial group").with_name("k")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::verify_hopf;

    #[test]
    fn symmetric_table_has_identity_first() {
        let t = group_table(&GroupSpec::Symmetric { n: 3 }).unwrap();
        assert_eq!(t.len(), 6);
        assert!((0..6).all(|g| t[0][g] == g));
    }

    #[test]
    fn sweedler_relations() {
        let f = Field::rationals();
        let h = sweedler(&f).unwrap();
        assert!(verify_hopf(&h).passed());
        let (a, x) = (h.basis_vector(1), h.basis_vector(2));
        assert_eq!(h.mul(&a, &a), h.unit());
        assert!(vector::is_zero(&f, &h.mul(&x, &x)));
        assert_eq!(h.mul(&x, &a), vector::scale(&f, &f.from_i64(-1), &h.mul(&a, &x)));
        assert_eq!(h.basis_vector(3), h.mul(&a, &x));
    }

    #[test]
    fn taft_rejects_wrong_order() {
        let f = Field::prime(7).unwrap();
        let err = taft(&f, 3, Some(f.from_i64(3))).unwrap_err();
        assert!(err.to_string().contains("omega must have multiplicative order p"));
        let g5 = Field::prime(5).unwrap();
        assert!(taft(&g5, 3, None).is_err());
        assert!(sweedler(&Field::prime(2).unwrap()).unwrap_err().to_string().contains("characteristic != 2"));
    }
}
