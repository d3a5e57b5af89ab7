//! Exact ground fields: the rationals, prime fields GF(p) and cyclotomic
//! fields Q(z) = Q[x]/(Φ_n).

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Description of a ground field.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum FieldSpec {
    Rationals,
    #[serde(rename = "gfp")]
    PrimeField { p: u64 },
    Cyclotomic { n: u32 },
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "rationals"),
            FieldSpec::PrimeField { p } => write!(f, "gfp:{p}"),
            FieldSpec::Cyclotomic { n } => write!(f, "cyclotomic:{n}"),
        }
    }
}

impl std::str::FromStr for FieldSpec {
    type Err = Error;

    /// Parses the short command-line forms `rationals`, `gfp:7`, `cyclotomic:3`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "rationals" || s == "q" || s == "Q" {
            return Ok(FieldSpec::Rationals);
        }
        let (kind, arg) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("unrecognized field `{s}`")))?;
        let num: u64 = arg
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad field parameter `{arg}`")))?;
        match kind.trim() {
            "gfp" | "gf" => Ok(FieldSpec::PrimeField { p: num }),
            "cyclotomic" | "cyc" => {
                let n = u32::try_from(num)
                    .map_err(|_| Error::Parse(format!("cyclotomic order {num} too large")))?;
                Ok(FieldSpec::Cyclotomic { n })
            }
            other => Err(Error::Parse(format!("unknown field kind `{other}`"))),
        }
    }
}

/// An element of one of the supported fields, always in canonical form:
/// reduced fractions, residues in `[0, p)`, or coefficient vectors of length
/// `deg Φ_n` in the power basis of `z`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Scalar {
    Fp(u64),
    Q(BigRational),
    Cyc(Box<[BigRational]>),
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Fp(v) => write!(f, "{v}"),
            Scalar::Q(q) => write!(f, "{}", fmt_rational(q)),
            Scalar::Cyc(coeffs) => {
                let mut out = String::new();
                for (k, c) in coeffs.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    let neg = c.is_negative();
                    let abs = c.abs();
                    if out.is_empty() {
                        if neg {
                            out.push('-');
                        }
                    } else {
                        out.push(if neg { '-' } else { '+' });
                    }
                    match k {
                        0 => out.push_str(&fmt_rational(&abs)),
                        _ => {
                            if !abs.is_one() {
                                out.push_str(&fmt_rational(&abs));
                                out.push('*');
                            }
                            out.push('z');
                            if k > 1 {
                                out.push_str(&format!("^{k}"));
                            }
                        }
                    }
                }
                if out.is_empty() {
                    out.push('0');
                }
                write!(f, "{out}")
            }
        }
    }
}

fn fmt_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Binary or unary operation selector for the checked [`Field::scalar_arith`] entry point.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScalarOp {
    Add,
    Mul,
    Neg,
    Inv,
    Eq,
}

/// Result of [`Field::scalar_arith`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ScalarResult {
    Value(Scalar),
    Bool(bool),
}

#[derive(Debug)]
struct Inner {
    spec: FieldSpec,
    /// Φ_n, low to high, monic. Empty for non-cyclotomic fields.
    phi: Vec<BigRational>,
}

/// A ground field. Cheap to clone; all arithmetic is exact.
#[derive(Clone)]
pub struct Field {
    inner: Arc<Inner>,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Field({})", self.inner.spec)
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner.spec == other.inner.spec
    }
}

impl Eq for Field {}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime factors by trial division, ascending.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Integer coefficients of the n-th cyclotomic polynomial, low to high,
/// via Φ_n = (x^n - 1) / ∏_{d | n, d < n} Φ_d.
pub fn cyclotomic_polynomial(n: u32) -> Vec<BigInt> {
    assert!(n >= 1, "cyclotomic order must be positive");
    let mut num = vec![BigInt::zero(); n as usize + 1];
    num[0] = -BigInt::one();
    num[n as usize] = BigInt::one();
    for d in 1..n {
        if n.is_multiple_of(d) {
            let den = cyclotomic_polynomial(d);
            num = exact_int_poly_div(&num, &den);
        }
    }
    num
}

fn exact_int_poly_div(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let lead = &den[dd];
    debug_assert!(lead.is_one());
    let nq = rem.len() - dd;
    let mut q = vec![BigInt::zero(); nq];
    for k in (0..nq).rev() {
        let c = rem[k + dd].clone() / lead;
        if !c.is_zero() {
            for (i, di) in den.iter().enumerate() {
                rem[k + i] -= &c * di;
            }
        }
        q[k] = c;
    }
    debug_assert!(rem.iter().all(|c| c.is_zero()));
    q
}

impl Field {
    pub fn new(spec: FieldSpec) -> Result<Field> {
        let phi = match &spec {
            FieldSpec::Rationals => Vec::new(),
            FieldSpec::PrimeField { p } => {
                if !is_prime(*p) {
                    return Err(Error::InvalidField(format!("{p} is not prime")));
                }
                if *p >= 1 << 31 {
                    return Err(Error::InvalidField(format!("prime {p} exceeds 2^31")));
                }
                Vec::new()
            }
            FieldSpec::Cyclotomic { n } => {
                if *n == 0 {
                    return Err(Error::InvalidField("cyclotomic order must be >= 1".into()));
                }
                cyclotomic_polynomial(*n)
                    .into_iter()
                    .map(BigRational::from_integer)
                    .collect()
            }
        };
        Ok(Field {
            inner: Arc::new(Inner { spec, phi }),
        })
    }

    pub fn rationals() -> Field {
        Field::new(FieldSpec::Rationals).expect("rationals are always valid")
    }

    pub fn prime(p: u64) -> Result<Field> {
        Field::new(FieldSpec::PrimeField { p })
    }

    pub fn cyclotomic(n: u32) -> Result<Field> {
        Field::new(FieldSpec::Cyclotomic { n })
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.inner.spec
    }

    /// 0 for characteristic zero.
    pub fn characteristic(&self) -> u64 {
        match self.inner.spec {
            FieldSpec::PrimeField { p } => p,
            _ => 0,
        }
    }

    pub fn is_prime_field(&self) -> bool {
        matches!(self.inner.spec, FieldSpec::PrimeField { .. })
    }

    /// Degree of the field over its prime field.
    pub fn degree(&self) -> usize {
        match self.inner.spec {
            FieldSpec::Cyclotomic { .. } => self.inner.phi.len() - 1,
            _ => 1,
        }
    }

    /// Coefficients of Φ_n (low to high) for cyclotomic fields.
    pub fn modulus(&self) -> &[BigRational] {
        &self.inner.phi
    }

    fn p(&self) -> u64 {
        match self.inner.spec {
            FieldSpec::PrimeField { p } => p,
            _ => unreachable!("not a prime field"),
        }
    }

    pub fn zero(&self) -> Scalar {
        match self.inner.spec {
            FieldSpec::Rationals => Scalar::Q(BigRational::zero()),
            FieldSpec::PrimeField { .. } => Scalar::Fp(0),
            FieldSpec::Cyclotomic { .. } => {
                Scalar::Cyc(vec![BigRational::zero(); self.degree()].into_boxed_slice())
            }
        }
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        self.from_bigint(&BigInt::from(v))
    }

    pub fn from_bigint(&self, v: &BigInt) -> Scalar {
        self.from_rational(&BigRational::from_integer(v.clone()))
            .expect("integers embed in every field")
    }

    /// Image of a rational number; fails in GF(p) when p divides the denominator.
    pub fn from_rational(&self, q: &BigRational) -> Result<Scalar> {
        match self.inner.spec {
            FieldSpec::Rationals => Ok(Scalar::Q(q.clone())),
            FieldSpec::PrimeField { p } => {
                let pb = BigInt::from(p);
                let n = q.numer().mod_floor(&pb).to_u64().unwrap();
                let d = q.denom().mod_floor(&pb).to_u64().unwrap();
                if d == 0 {
                    return Err(Error::DivisionByZero);
                }
                Ok(Scalar::Fp(mul_mod(n, inv_mod(d, p), p)))
            }
            FieldSpec::Cyclotomic { .. } => {
                let mut c = vec![BigRational::zero(); self.degree()];
                c[0] = q.clone();
                Ok(Scalar::Cyc(c.into_boxed_slice()))
            }
        }
    }

    /// The chosen primitive n-th root of unity `z` of a cyclotomic field.
    pub fn generator(&self) -> Option<Scalar> {
        match self.inner.spec {
            FieldSpec::Cyclotomic { .. } => {
                let z = vec![BigRational::zero(), BigRational::one()];
                Some(Scalar::Cyc(self.reduce(z).into_boxed_slice()))
            }
            _ => None,
        }
    }

    /// True when `a` is a canonical element of this field.
    pub fn contains(&self, a: &Scalar) -> bool {
        match (&self.inner.spec, a) {
            (FieldSpec::Rationals, Scalar::Q(_)) => true,
            (FieldSpec::PrimeField { p }, Scalar::Fp(v)) => v < p,
            (FieldSpec::Cyclotomic { .. }, Scalar::Cyc(c)) => c.len() == self.degree(),
            _ => false,
        }
    }

    pub fn is_zero(&self, a: &Scalar) -> bool {
        match a {
            Scalar::Fp(v) => *v == 0,
            Scalar::Q(q) => q.is_zero(),
            Scalar::Cyc(c) => c.iter().all(|x| x.is_zero()),
        }
    }

    pub fn is_one(&self, a: &Scalar) -> bool {
        *a == self.one()
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (a, b) {
            (Scalar::Fp(x), Scalar::Fp(y)) => {
                let p = self.p();
                let s = x + y;
                Scalar::Fp(if s >= p { s - p } else { s })
            }
            (Scalar::Q(x), Scalar::Q(y)) => Scalar::Q(x + y),
            (Scalar::Cyc(x), Scalar::Cyc(y)) => {
                Scalar::Cyc(x.iter().zip(y.iter()).map(|(u, v)| u + v).collect())
            }
            _ => panic!("mixed scalar kinds in {:?}", self.inner.spec),
        }
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match a {
            Scalar::Fp(x) => Scalar::Fp(if *x == 0 { 0 } else { self.p() - x }),
            Scalar::Q(x) => Scalar::Q(-x),
            Scalar::Cyc(x) => Scalar::Cyc(x.iter().map(|u| -u).collect()),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (a, b) {
            (Scalar::Fp(x), Scalar::Fp(y)) => Scalar::Fp(mul_mod(*x, *y, self.p())),
            (Scalar::Q(x), Scalar::Q(y)) => Scalar::Q(x * y),
            (Scalar::Cyc(x), Scalar::Cyc(y)) => {
                if x.iter().all(|c| c.is_zero()) || y.iter().all(|c| c.is_zero()) {
                    return self.zero();
                }
                let mut prod = vec![BigRational::zero(); x.len() + y.len() - 1];
                for (i, u) in x.iter().enumerate() {
                    if u.is_zero() {
                        continue;
                    }
                    for (j, v) in y.iter().enumerate() {
                        if !v.is_zero() {
                            prod[i + j] += u * v;
                        }
                    }
                }
                Scalar::Cyc(self.reduce(prod).into_boxed_slice())
            }
            _ => panic!("mixed scalar kinds in {:?}", self.inner.spec),
        }
    }

    /// Reduces a polynomial modulo Φ_n, returning exactly `deg Φ_n` coefficients.
    fn reduce(&self, mut poly: Vec<BigRational>) -> Vec<BigRational> {
        let phi = &self.inner.phi;
        let m = phi.len() - 1;
        while poly.len() > m {
            let top = poly.pop().unwrap();
            if !top.is_zero() {
                let k = poly.len() - m;
                for i in 0..m {
                    poly[k + i] -= &top * &phi[i];
                }
            }
        }
        poly.resize(m, BigRational::zero());
        poly
    }

    pub fn inv(&self, a: &Scalar) -> Result<Scalar> {
        if self.is_zero(a) {
            return Err(Error::DivisionByZero);
        }
        Ok(match a {
            Scalar::Fp(x) => Scalar::Fp(inv_mod(*x, self.p())),
            Scalar::Q(x) => Scalar::Q(x.recip()),
            Scalar::Cyc(x) => Scalar::Cyc(self.cyc_inverse(x).into_boxed_slice()),
        })
    }

    /// Solves (a * y) = 1 as an m x m rational linear system in the power basis.
    fn cyc_inverse(&self, a: &[BigRational]) -> Vec<BigRational> {
        let m = a.len();
        // column j = a * z^j reduced
        let mut cols: Vec<Vec<BigRational>> = Vec::with_capacity(m);
        for j in 0..m {
            let mut shifted = vec![BigRational::zero(); j];
            shifted.extend(a.iter().cloned());
            cols.push(self.reduce(shifted));
        }
        // augmented rows
        let mut rows: Vec<Vec<BigRational>> = (0..m)
            .map(|i| {
                let mut r: Vec<BigRational> = (0..m).map(|j| cols[j][i].clone()).collect();
                r.push(if i == 0 { BigRational::one() } else { BigRational::zero() });
                r
            })
            .collect();
        for c in 0..m {
            let piv = (c..m)
                .find(|&r| !rows[r][c].is_zero())
                .expect("nonzero cyclotomic element is invertible");
            rows.swap(c, piv);
            let inv = rows[c][c].recip();
            for x in rows[c].iter_mut() {
                *x *= &inv;
            }
            for r in 0..m {
                if r != c && !rows[r][c].is_zero() {
                    let f = rows[r][c].clone();
                    for k in c..=m {
                        let t = &f * &rows[c][k];
                        rows[r][k] -= t;
                    }
                }
            }
        }
        rows.into_iter().map(|mut r| r.pop().unwrap()).collect()
    }

    pub fn div(&self, a: &Scalar, b: &Scalar) -> Result<Scalar> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    pub fn pow(&self, a: &Scalar, mut e: u64) -> Scalar {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// Multiplicative order of `a`, searched up to the largest order a root of
    /// unity can have in this field. `None` for zero or elements of infinite order.
    pub fn multiplicative_order(&self, a: &Scalar) -> Option<u64> {
        if self.is_zero(a) {
            return None;
        }
        let bound = match self.inner.spec {
            FieldSpec::Rationals => 2,
            FieldSpec::PrimeField { p } => p - 1,
            FieldSpec::Cyclotomic { n } => 2 * n as u64,
        };
        let one = self.one();
        let mut x = a.clone();
        for k in 1..=bound {
            if x == one {
                return Some(k);
            }
            x = self.mul(&x, a);
        }
        None
    }

    /// All elements of a prime field in residue order.
    pub fn elements(&self) -> Option<Vec<Scalar>> {
        match self.inner.spec {
            FieldSpec::PrimeField { p } => Some((0..p).map(Scalar::Fp).collect()),
            _ => None,
        }
    }

    /// Checked arithmetic with field-membership validation.
    pub fn scalar_arith(&self, a: &Scalar, b: Option<&Scalar>, op: ScalarOp) -> Result<ScalarResult> {
        if !self.contains(a) || b.is_some_and(|b| !self.contains(b)) {
            return Err(Error::FieldMismatch(format!(
                "operand is not an element of {}",
                self.inner.spec
            )));
        }
        let need_b = || b.ok_or_else(|| Error::Usage("binary operation needs two operands".into()));
        Ok(match op {
            ScalarOp::Add => ScalarResult::Value(self.add(a, need_b()?)),
            ScalarOp::Mul => ScalarResult::Value(self.mul(a, need_b()?)),
            ScalarOp::Neg => ScalarResult::Value(self.neg(a)),
            ScalarOp::Inv => ScalarResult::Value(self.inv(a)?),
            ScalarOp::Eq => ScalarResult::Bool(a == need_b()?),
        })
    }

    /// Parses `3/2`, `-4`, and for cyclotomic fields sums such as `1+z`, `-1/2*z^2`.
    pub fn parse(&self, text: &str) -> Result<Scalar> {
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::Parse("empty scalar".into()));
        }
        let bad = || Error::Parse(format!("malformed scalar `{text}` for {}", self.inner.spec));
        let mut acc = self.zero();
        let bytes = s.as_bytes();
        let mut pos = 0;
        while pos < bytes.len() {
            let mut sign = 1i64;
            if bytes[pos] == b'+' || bytes[pos] == b'-' {
                if bytes[pos] == b'-' {
                    sign = -1;
                }
                pos += 1;
            } else if pos != 0 {
                return Err(bad());
            }
            let start = pos;
            while pos < bytes.len() && bytes[pos] != b'+' && bytes[pos] != b'-' {
                // allow a sign right after '^' is not supported; exponents are non-negative
                pos += 1;
            }
            let term = &s[start..pos];
            if term.is_empty() {
                return Err(bad());
            }
            let (coef_txt, power) = match term.find('z') {
                None => (term, 0u32),
                Some(zi) => {
                    if self.generator().is_none() {
                        return Err(bad());
                    }
                    let coef = term[..zi].trim_end_matches('*');
                    let rest = &term[zi + 1..];
                    let power = if rest.is_empty() {
                        1
                    } else if let Some(e) = rest.strip_prefix('^') {
                        e.parse::<u32>().map_err(|_| bad())?
                    } else {
                        return Err(bad());
                    };
                    (if coef.is_empty() { "1" } else { coef }, power)
                }
            };
            let q = parse_rational(coef_txt).ok_or_else(bad)?;
            let mut t = self.from_rational(&(q * BigRational::from_integer(BigInt::from(sign))))?;
            if power > 0 {
                let z = self.generator().ok_or_else(bad)?;
                t = self.mul(&t, &self.pow(&z, power as u64));
            }
            acc = self.add(&acc, &t);
        }
        Ok(acc)
    }
}

fn parse_rational(s: &str) -> Option<BigRational> {
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    if n.is_empty() || d.is_empty() || !n.bytes().all(|b| b.is_ascii_digit()) || !d.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let n: BigInt = n.parse().ok()?;
    let d: BigInt = d.parse().ok()?;
    if d.is_zero() {
        return None;
    }
    Some(BigRational::new(n, d))
}

pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    let (mut t, mut new_t) = (0i128, 1i128);
    let (mut r, mut new_r) = (p as i128, a as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    debug_assert_eq!(r, 1, "{a} not invertible mod {p}");
    t.rem_euclid(p as i128) as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_in_gf7() {
        let f = Field::prime(7).unwrap();
        assert_eq!(f.inv(&Scalar::Fp(3)).unwrap(), Scalar::Fp(5));
        // scan oracle
        let scanned = (1..7).find(|x| (3 * x) % 7 == 1).unwrap();
        assert_eq!(scanned, 5);
    }

    #[test]
    fn rational_addition() {
        let q = Field::rationals();
        let a = q.parse("1/2").unwrap();
        let b = q.parse("1/3").unwrap();
        assert_eq!(q.add(&a, &b), q.parse("5/6").unwrap());
    }

    #[test]
    fn cyclotomic_three_square_of_generator() {
        let f = Field::cyclotomic(3).unwrap();
        let z = f.generator().unwrap();
        assert_eq!(f.mul(&z, &z), f.parse("-1-z").unwrap());
        assert_eq!(f.mul(&z, &z).to_string(), "-1-z");
        assert_eq!(f.multiplicative_order(&z), Some(3));
    }

    #[test]
    fn cyclotomic_polynomials() {
        let show = |n| {
            cyclotomic_polynomial(n)
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        assert_eq!(show(1), "-1,1");
        assert_eq!(show(3), "1,1,1");
        assert_eq!(show(4), "1,0,1");
        assert_eq!(show(6), "1,-1,1");
        assert_eq!(show(12), "1,0,-1,0,1");
    }

    #[test]
    fn division_by_zero_is_an_error() {
        for f in [Field::rationals(), Field::prime(5).unwrap(), Field::cyclotomic(5).unwrap()] {
            assert!(matches!(f.inv(&f.zero()), Err(Error::DivisionByZero)));
        }
    }

    #[test]
    fn mixed_fields_rejected() {
        let f = Field::prime(7).unwrap();
        let q = Field::rationals();
        let r = f.scalar_arith(&Scalar::Fp(3), Some(&q.one()), ScalarOp::Add);
        assert!(matches!(r, Err(Error::FieldMismatch(_))));
        let r = f.scalar_arith(&Scalar::Fp(9), None, ScalarOp::Neg);
        assert!(matches!(r, Err(Error::FieldMismatch(_))));
    }

    #[test]
    fn parse_and_format_round_trip() {
        let f = Field::cyclotomic(5).unwrap();
        for s in ["0", "1", "-1-z", "3/2*z^2", "z+z^3", "-z^3"] {
            let x = f.parse(s).unwrap();
            assert_eq!(f.parse(&x.to_string()).unwrap(), x);
        }
        let g = Field::prime(7).unwrap();
        assert_eq!(g.parse("-1").unwrap(), Scalar::Fp(6));
        assert_eq!(g.parse("1/2").unwrap(), Scalar::Fp(4));
        assert!(g.parse("z").is_err());
        assert!(g.parse("1/7").is_err());
    }

    #[test]
    fn non_prime_rejected() {
        assert!(Field::prime(9).is_err());
        assert!(Field::cyclotomic(0).is_err());
    }
}
