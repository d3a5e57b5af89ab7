//! Univariate polynomials over the supported fields, Berlekamp factorization
//! over GF(p), and root finding.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::field::{Field, FieldSpec, Scalar};
use super::matrix::Matrix;
use crate::error::{Error, Result};

/// Polynomial with coefficients listed from the constant term upward.
/// The leading coefficient is never zero; the zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    field: Field,
    coeffs: Vec<Scalar>,
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if self.field.is_zero(c) {
                continue;
            }
            let cs = c.to_string();
            let coef = if k > 0 && self.field.is_one(c) {
                String::new()
            } else if k > 0 && cs.contains(['+', '-']) {
                format!("({cs})*")
            } else if k > 0 {
                format!("{cs}*")
            } else {
                cs
            };
            parts.push(match k {
                0 => coef,
                1 => format!("{coef}x"),
                _ => format!("{coef}x^{k}"),
            });
        }
        write!(f, "{}", parts.join(" + "))
    }
}

impl Poly {
    pub fn new(field: &Field, mut coeffs: Vec<Scalar>) -> Poly {
        while coeffs.last().is_some_and(|c| field.is_zero(c)) {
            coeffs.pop();
        }
        Poly {
            field: field.clone(),
            coeffs,
        }
    }

    pub fn from_i64(field: &Field, coeffs: &[i64]) -> Poly {
        Poly::new(field, coeffs.iter().map(|&c| field.from_i64(c)).collect())
    }

    pub fn zero(field: &Field) -> Poly {
        Poly::new(field, Vec::new())
    }

    pub fn constant(field: &Field, c: Scalar) -> Poly {
        Poly::new(field, vec![c])
    }

    pub fn x(field: &Field) -> Poly {
        Poly::new(field, vec![field.zero(), field.one()])
    }

    /// `x - r`
    pub fn linear(field: &Field, root: &Scalar) -> Poly {
        Poly::new(field, vec![field.neg(root), field.one()])
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.field.is_one(&self.coeffs[0])
    }

    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => self.clone(),
            Some(lc) => {
                let inv = self.field.inv(lc).expect("leading coefficient is nonzero");
                self.scale(&inv)
            }
        }
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        Poly::new(&self.field, self.coeffs.iter().map(|a| self.field.mul(a, c)).collect())
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let get = |p: &Poly, i: usize| p.coeffs.get(i).cloned().unwrap_or_else(|| f.zero());
        Poly::new(f, (0..n).map(|i| f.add(&get(self, i), &get(other, i))).collect())
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.scale(&self.field.neg(&self.field.one())))
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let f = &self.field;
        if self.is_zero() || other.is_zero() {
            return Poly::zero(f);
        }
        let mut out = vec![f.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if f.is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(&out[i + j], &f.mul(a, b));
            }
        }
        Poly::new(f, out)
    }

    /// Quotient and remainder; errors on division by the zero polynomial.
    pub fn divrem(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        let f = &self.field;
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let inv_lc = f.inv(divisor.leading().unwrap())?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Poly::zero(f), self.clone()));
        }
        let mut quot = vec![f.zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = f.mul(&rem[k + dd], &inv_lc);
            if f.is_zero(&c) {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = f.sub(&rem[k + j], &f.mul(&c, d));
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((Poly::new(f, quot), Poly::new(f, rem)))
    }

    pub fn rem(&self, divisor: &Poly) -> Result<Poly> {
        Ok(self.divrem(divisor)?.1)
    }

    /// Exact quotient; panics if the division leaves a remainder.
    pub fn exact_div(&self, divisor: &Poly) -> Poly {
        let (q, r) = self.divrem(divisor).expect("nonzero divisor");
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Monic greatest common divisor (zero if both inputs are zero).
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> Poly {
        let f = &self.field;
        Poly::new(
            f,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| f.mul(c, &f.from_i64(k as i64)))
                .collect(),
        )
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        let f = &self.field;
        let mut acc = f.zero();
        for c in self.coeffs.iter().rev() {
            acc = f.add(&f.mul(&acc, x), c);
        }
        acc
    }

    /// `self^e mod m`
    pub fn pow_mod(&self, mut e: u64, m: &Poly) -> Poly {
        let f = &self.field;
        let mut base = self.rem(m).expect("nonzero modulus");
        let mut acc = Poly::constant(f, f.one()).rem(m).expect("nonzero modulus");
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(m).unwrap();
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).rem(m).unwrap();
            }
        }
        acc
    }

    pub fn pow(&self, e: usize) -> Poly {
        let mut acc = Poly::constant(&self.field, self.field.one());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }
}

/// Result of [`factor_primefield_poly`]: `unit * Π factor^multiplicity`
/// with monic irreducible factors sorted by degree, then coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub unit: Scalar,
    pub factors: Vec<(Poly, usize)>,
}

impl Factorization {
    pub fn expand(&self, field: &Field) -> Poly {
        let mut acc = Poly::constant(field, self.unit.clone());
        for (g, e) in &self.factors {
            acc = acc.mul(&g.pow(*e));
        }
        acc
    }
}

/// Complete factorization of a nonzero polynomial over GF(p): squarefree
/// decomposition followed by Berlekamp splitting.
pub fn factor_primefield_poly(poly: &Poly) -> Result<Factorization> {
    let field = poly.field();
    let p = match field.spec() {
        FieldSpec::PrimeField { p } => *p,
        other => {
            return Err(Error::Usage(format!(
                "factor_primefield_poly needs a prime field, got {other}"
            )))
        }
    };
    let lc = poly
        .leading()
        .cloned()
        .ok_or_else(|| Error::Usage("cannot factor the zero polynomial".into()))?;
    let mut factors = Vec::new();
    for (sqf, mult) in squarefree_decomposition(&poly.monic(), p) {
        for g in berlekamp(&sqf, p) {
            factors.push((g, mult));
        }
    }
    factors.sort_by(|(a, ea), (b, eb)| {
        a.degree()
            .cmp(&b.degree())
            .then_with(|| a.coeffs().cmp(b.coeffs()))
            .then(ea.cmp(eb))
    });
    Ok(Factorization { unit: lc, factors })
}

/// Monic squarefree parts with multiplicities.
fn squarefree_decomposition(f: &Poly, p: u64) -> Vec<(Poly, usize)> {
    let field = f.field().clone();
    let mut out = Vec::new();
    if f.degree().unwrap_or(0) == 0 {
        return out;
    }
    let df = f.derivative();
    let mut c = f.gcd(&df);
    let mut w = f.exact_div(&c);
    let mut i = 1;
    while !w.is_one() {
        let y = w.gcd(&c);
        let fac = w.exact_div(&y);
        if !fac.is_one() {
            out.push((fac, i));
        }
        w = y;
        c = c.exact_div(&w);
        i += 1;
    }
    if !c.is_one() {
        // c is a polynomial in x^p; over GF(p) its p-th root just thins the exponents
        let p = p as usize;
        let root = Poly::new(&field, c.coeffs().iter().step_by(p).cloned().collect());
        for (g, e) in squarefree_decomposition(&root, p as u64) {
            out.push((g, e * p));
        }
    }
    out
}

/// Splits a monic squarefree polynomial into its monic irreducible factors.
fn berlekamp(f: &Poly, p: u64) -> Vec<Poly> {
    let field = f.field().clone();
    let n = f.degree().unwrap_or(0);
    if n <= 1 {
        return if n == 1 { vec![f.clone()] } else { Vec::new() };
    }
    // Row i holds x^{ip} mod f; the fixed space of Q gives the Berlekamp subalgebra.
    let xp = Poly::x(&field).pow_mod(p, f);
    let mut rows = Vec::with_capacity(n);
    let mut cur = Poly::constant(&field, field.one());
    for _ in 0..n {
        let mut row = cur.coeffs().to_vec();
        row.resize(n, field.zero());
        rows.push(row);
        cur = cur.mul(&xp).rem(f).unwrap();
    }
    let q = Matrix::from_rows(&field, n, rows);
    let fixed = q.sub(&Matrix::identity(&field, n)).transpose().nullspace();
    let k = fixed.len();
    if k == 1 {
        return vec![f.clone()];
    }
    let mut parts = vec![f.clone()];
    for v in &fixed {
        let vp = Poly::new(&field, v.clone());
        if vp.degree().unwrap_or(0) == 0 {
            continue;
        }
        let mut next = Vec::new();
        for g in parts {
            if g.degree() == Some(1) {
                next.push(g);
                continue;
            }
            // g divides the product of (v - s) over s in GF(p), so the gcds partition g
            for s in 0..p {
                let shifted = vp.sub(&Poly::constant(&field, Scalar::Fp(s)));
                let h = g.gcd(&shifted);
                if h.degree().unwrap_or(0) > 0 {
                    next.push(h);
                }
            }
        }
        parts = next;
        if parts.len() == k {
            break;
        }
    }
    parts
}

/// Distinct roots found in the field, and the cofactor left after dividing
/// them out once each (degree 0 when the polynomial splits into linear factors).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSearch {
    pub roots: Vec<Scalar>,
    pub residual: Poly,
}

impl RootSearch {
    pub fn splits(&self) -> bool {
        self.residual.degree().unwrap_or(0) == 0
    }
}

/// Roots of a squarefree-reduced copy of `poly`. Over GF(p) the search is
/// complete. Over the rationals the rational root theorem is applied. Over a
/// cyclotomic field the candidates are `0`, `±z^k` and rational roots.
pub fn find_roots(poly: &Poly) -> Result<RootSearch> {
    let field = poly.field().clone();
    if poly.is_zero() {
        return Err(Error::Usage("roots of the zero polynomial".into()));
    }
    let sqfree = poly.exact_div(&poly.gcd(&poly.derivative())).monic();
    let candidates: Vec<Scalar> = match field.spec() {
        FieldSpec::PrimeField { .. } => {
            let fac = factor_primefield_poly(&sqfree)?;
            fac.factors
                .iter()
                .filter(|(g, _)| g.degree() == Some(1))
                .map(|(g, _)| field.neg(&g.coeffs()[0]))
                .collect()
        }
        FieldSpec::Rationals => rational_root_candidates(&field, &sqfree),
        FieldSpec::Cyclotomic { n } => {
            let mut c = vec![field.zero()];
            let z = field.generator().unwrap();
            let mut zk = field.one();
            for _ in 0..*n {
                c.push(zk.clone());
                c.push(field.neg(&zk));
                zk = field.mul(&zk, &z);
            }
            c.extend(rational_root_candidates(&field, &sqfree));
            c
        }
    };
    let mut roots: Vec<Scalar> = Vec::new();
    let mut residual = sqfree;
    for r in candidates {
        if roots.contains(&r) {
            continue;
        }
        if field.is_zero(&residual.eval(&r)) {
            residual = residual.exact_div(&Poly::linear(&field, &r));
            roots.push(r);
        }
    }
    roots.sort();
    Ok(RootSearch { roots, residual })
}

/// ±a/b with a | constant term and b | leading term, after clearing
/// denominators. Empty when some coefficient is not rational.
fn rational_root_candidates(field: &Field, poly: &Poly) -> Vec<Scalar> {
    let mut rats = Vec::new();
    for c in poly.coeffs() {
        match c {
            Scalar::Q(q) => rats.push(q.clone()),
            Scalar::Cyc(v) if v.iter().skip(1).all(|x| x.is_zero()) => rats.push(v[0].clone()),
            _ => return Vec::new(),
        }
    }
    let lcm = rats
        .iter()
        .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let ints: Vec<BigInt> = rats
        .iter()
        .map(|q| (q * BigRational::from_integer(lcm.clone())).to_integer())
        .collect();
    let mut out = vec![field.zero()];
    let Some(low) = ints.iter().find(|c| !c.is_zero()) else {
        return out;
    };
    let high = ints.last().unwrap();
    for a in divisors(low) {
        for b in divisors(high) {
            let q = BigRational::new(a.clone(), b.clone());
            for s in [q.clone(), -q] {
                if let Ok(v) = field.from_rational(&s) {
                    out.push(v);
                }
            }
        }
    }
    out
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let Some(m) = n.to_u64() else {
        return vec![BigInt::one(), n];
    };
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= m {
        if m % d == 0 {
            out.push(BigInt::from(d));
            if d * d != m {
                out.push(BigInt::from(m / d));
            }
        }
        d += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u64) -> Field {
        Field::prime(p).unwrap()
    }

    fn linear_roots(fac: &Factorization, field: &Field) -> Vec<Scalar> {
        let mut r: Vec<Scalar> = fac
            .factors
            .iter()
            .map(|(g, e)| {
                assert_eq!((g.degree(), *e), (Some(1), 1));
                field.neg(&g.coeffs()[0])
            })
            .collect();
        r.sort();
        r
    }

    #[test]
    fn cube_roots_of_unity_mod_7() {
        let f = gf(7);
        let poly = Poly::from_i64(&f, &[-1, 0, 0, 1]);
        let fac = factor_primefield_poly(&poly).unwrap();
        assert_eq!(linear_roots(&fac, &f), vec![Scalar::Fp(1), Scalar::Fp(2), Scalar::Fp(4)]);
        assert_eq!(fac.expand(&f), poly);
    }

    #[test]
    fn x_squared_plus_one_mod_5() {
        let f = gf(5);
        let poly = Poly::from_i64(&f, &[1, 0, 1]);
        let fac = factor_primefield_poly(&poly).unwrap();
        // x + 2 and x + 3
        assert_eq!(linear_roots(&fac, &f), vec![Scalar::Fp(2), Scalar::Fp(3)]);
    }

    #[test]
    fn x_is_irreducible() {
        let f = gf(3);
        let fac = factor_primefield_poly(&Poly::x(&f)).unwrap();
        assert_eq!(fac.factors, vec![(Poly::x(&f), 1)]);
    }

    #[test]
    fn zero_polynomial_rejected() {
        assert!(matches!(
            factor_primefield_poly(&Poly::zero(&gf(3))),
            Err(Error::Usage(_))
        ));
    }

    #[test]
    fn repeated_and_inseparable_factors() {
        let f = gf(3);
        // (x^3 + 2)^2 (x^2 + 1) = (x + 2)^6 (x^2 + 1) over GF(3)
        let a = Poly::from_i64(&f, &[2, 0, 0, 1]);
        let b = Poly::from_i64(&f, &[1, 0, 1]);
        let poly = a.mul(&a).mul(&b).scale(&Scalar::Fp(2));
        let fac = factor_primefield_poly(&poly).unwrap();
        assert_eq!(fac.expand(&f), poly);
        assert_eq!(
            fac.factors,
            vec![(Poly::from_i64(&f, &[2, 1]), 6), (Poly::from_i64(&f, &[1, 0, 1]), 1)]
        );
    }

    #[test]
    fn rational_and_cyclotomic_roots() {
        let q = Field::rationals();
        let poly = Poly::from_i64(&q, &[-1, 0, 1]).mul(&Poly::from_i64(&q, &[1, 0, 1]));
        let rs = find_roots(&poly).unwrap();
        assert_eq!(rs.roots, vec![q.from_i64(-1), q.from_i64(1)]);
        assert!(!rs.splits());
        let c = Field::cyclotomic(3).unwrap();
        let rs = find_roots(&Poly::from_i64(&c, &[-1, 0, 0, 1])).unwrap();
        assert_eq!(rs.roots.len(), 3);
        assert!(rs.splits());
    }
}
