//! Dense reimplementation of the R-matrix axioms and a brute-force R solver.
//! Only the structure constants are taken from the library; all arithmetic
//! and all identity checks here are independent of it.

#![allow(dead_code)]

use num_rational::Rational64;

use hopfkit_core::hopf::HopfAlgebra;
use hopfkit_core::serial::hopf_to_raw;

pub trait Coef: Clone + PartialEq + std::fmt::Debug {
    fn zero(&self) -> Self;
    fn one(&self) -> Self;
    fn add(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn inv(&self) -> Self;
    /// Parses the library's string form of a scalar.
    fn parse_like(&self, s: &str) -> Self;
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Gf {
    pub v: u64,
    pub p: u64,
}

impl Gf {
    pub fn new(v: i64, p: u64) -> Gf {
        Gf {
            v: v.rem_euclid(p as i64) as u64,
            p,
        }
    }
}

impl std::fmt::Display for Gf {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.v)
    }
}

impl Coef for Gf {
    fn zero(&self) -> Self {
        Gf::new(0, self.p)
    }
    fn one(&self) -> Self {
        Gf::new(1, self.p)
    }
    fn add(&self, o: &Self) -> Self {
        Gf { v: (self.v + o.v) % self.p, p: self.p }
    }
    fn mul(&self, o: &Self) -> Self {
        Gf { v: (self.v * o.v) % self.p, p: self.p }
    }
    fn neg(&self) -> Self {
        Gf { v: (self.p - self.v) % self.p, p: self.p }
    }
    fn is_zero(&self) -> bool {
        self.v == 0
    }
    fn inv(&self) -> Self {
        // Fermat.
        let mut r = 1u64;
        let (mut b, mut e) = (self.v, self.p - 2);
        while e > 0 {
            if e & 1 == 1 {
                r = r * b % self.p;
            }
            b = b * b % self.p;
            e >>= 1;
        }
        Gf { v: r, p: self.p }
    }
    fn parse_like(&self, s: &str) -> Self {
        Gf::new(s.trim().parse::<i64>().expect("prime field scalar"), self.p)
    }
}

impl Coef for Rational64 {
    fn zero(&self) -> Self {
        Rational64::from_integer(0)
    }
    fn one(&self) -> Self {
        Rational64::from_integer(1)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn is_zero(&self) -> bool {
        *self.numer() == 0
    }
    fn inv(&self) -> Self {
        self.recip()
    }
    fn parse_like(&self, s: &str) -> Self {
        let s = s.trim();
        match s.split_once('/') {
            Some((a, b)) => Rational64::new(a.trim().parse().unwrap(), b.trim().parse().unwrap()),
            None => Rational64::from_integer(s.parse().unwrap()),
        }
    }
}

/// Dense structure constants: `mul[i][j][k]` is the coefficient of `e_k` in `e_i e_j`,
/// `comul[i][j][k]` the coefficient of `e_j ⊗ e_k` in `Δ(e_i)`.
pub struct Dense<C: Coef> {
    pub d: usize,
    pub zero: C,
    pub mul: Vec<C>,
    pub unit: Vec<C>,
    pub comul: Vec<C>,
    pub counit: Vec<C>,
    /// `s[i * d + j]`: coefficient of `e_j` in `S(e_i)`.
    pub s: Vec<C>,
}

impl<C: Coef> Dense<C> {
    pub fn from_hopf(h: &HopfAlgebra, zero: C) -> Dense<C> {
        let raw = hopf_to_raw(h);
        let d = raw.dim;
        let mut mul = vec![zero.zero(); d * d * d];
        for (i, j, k, c) in &raw.mul {
            mul[(i * d + j) * d + k] = zero.parse_like(c);
        }
        let mut comul = vec![zero.zero(); d * d * d];
        for (i, j, k, c) in &raw.comul {
            comul[(i * d + j) * d + k] = zero.parse_like(c);
        }
        let mut s = vec![zero.zero(); d * d];
        for (i, j, c) in raw.antipode.as_ref().expect("antipode present") {
            s[i * d + j] = zero.parse_like(c);
        }
        Dense {
            d,
            unit: raw.unit.iter().map(|c| zero.parse_like(c)).collect(),
            counit: raw.counit.iter().map(|c| zero.parse_like(c)).collect(),
            zero,
            mul,
            comul,
            s,
        }
    }

    fn z(&self) -> C {
        self.zero.zero()
    }

    /// Product in `H^{⊗n}`; tensors are flat with leg 0 most significant.
    pub fn tmul(&self, n: usize, a: &[C], b: &[C]) -> Vec<C> {
        let d = self.d;
        let size = d.pow(n as u32);
        let mut out = vec![self.z(); size];
        for (ia, ca) in a.iter().enumerate() {
            if ca.is_zero() {
                continue;
            }
            for (ib, cb) in b.iter().enumerate() {
                if cb.is_zero() {
                    continue;
                }
                let c = ca.mul(cb);
                // Expand leg by leg.
                let mut partial: Vec<(usize, C)> = vec![(0, c)];
                for leg in 0..n {
                    let shift = d.pow((n - 1 - leg) as u32);
                    let (x, y) = ((ia / shift) % d, (ib / shift) % d);
                    let mut next = Vec::new();
                    for (idx, coef) in &partial {
                        for k in 0..d {
                            let m = &self.mul[(x * d + y) * d + k];
                            if !m.is_zero() {
                                next.push((idx * d + k, coef.mul(m)));
                            }
                        }
                    }
                    partial = next;
                }
                for (idx, coef) in partial {
                    out[idx] = out[idx].add(&coef);
                }
            }
        }
        out
    }

    /// Applies Δ to leg `leg` of an `n`-leg tensor.
    pub fn delta_leg(&self, n: usize, t: &[C], leg: usize) -> Vec<C> {
        let d = self.d;
        let mut out = vec![self.z(); d.pow(n as u32 + 1)];
        for (idx, c) in t.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mut digits: Vec<usize> = (0..n).map(|l| (idx / d.pow((n - 1 - l) as u32)) % d).collect();
            let x = digits[leg];
            for j in 0..d {
                for k in 0..d {
                    let m = &self.comul[(x * d + j) * d + k];
                    if m.is_zero() {
                        continue;
                    }
                    let mut dg = digits.clone();
                    dg[leg] = j;
                    dg.insert(leg + 1, k);
                    let flat = dg.iter().fold(0, |acc, &v| acc * d + v);
                    out[flat] = out[flat].add(&c.mul(m));
                }
            }
            digits.clear();
        }
        out
    }

    /// Embeds a 2-leg tensor into 3 legs at positions `(p, q)`, unit elsewhere.
    pub fn embed3(&self, r: &[C], p: usize, q: usize) -> Vec<C> {
        let d = self.d;
        let other = 3 - p - q;
        let mut out = vec![self.z(); d * d * d];
        for (idx, c) in r.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for u in 0..d {
                if self.unit[u].is_zero() {
                    continue;
                }
                let mut dg = [0usize; 3];
                dg[p] = idx / d;
                dg[q] = idx % d;
                dg[other] = u;
                let flat = (dg[0] * d + dg[1]) * d + dg[2];
                out[flat] = out[flat].add(&c.mul(&self.unit[u]));
            }
        }
        out
    }

    pub fn one2(&self) -> Vec<C> {
        let d = self.d;
        let mut out = vec![self.z(); d * d];
        for i in 0..d {
            for j in 0..d {
                out[i * d + j] = self.unit[i].mul(&self.unit[j]);
            }
        }
        out
    }

    fn antipode_leg0(&self, r: &[C]) -> Vec<C> {
        let d = self.d;
        let mut out = vec![self.z(); d * d];
        for (idx, c) in r.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (a, b) = (idx / d, idx % d);
            for j in 0..d {
                let s = &self.s[a * d + j];
                if !s.is_zero() {
                    out[j * d + b] = out[j * d + b].add(&c.mul(s));
                }
            }
        }
        out
    }

    pub fn flip(&self, t: &[C]) -> Vec<C> {
        let d = self.d;
        let mut out = vec![self.z(); d * d];
        for (idx, c) in t.iter().enumerate() {
            out[(idx % d) * d + idx / d] = c.clone();
        }
        out
    }

    pub fn delta_basis(&self, i: usize) -> Vec<C> {
        let d = self.d;
        self.comul[i * d * d..(i + 1) * d * d].to_vec()
    }

    /// The linear condition `R Δ(h) = Δ^op(h) R` on all basis elements.
    pub fn quasi_cocommutative(&self, r: &[C]) -> bool {
        (0..self.d).all(|i| {
            let dh = self.delta_basis(i);
            self.tmul(2, r, &dh) == self.tmul(2, &self.flip(&dh), r)
        })
    }

    /// All R-matrix axioms, invertibility checked through `(S ⊗ id)R · R = 1 ⊗ 1`.
    pub fn is_rmatrix(&self, r: &[C]) -> bool {
        let one = self.one2();
        let r_inv = self.antipode_leg0(r);
        if self.tmul(2, &r_inv, r) != one || self.tmul(2, r, &r_inv) != one {
            return false;
        }
        let r13 = self.embed3(r, 0, 2);
        let r23 = self.embed3(r, 1, 2);
        let r12 = self.embed3(r, 0, 1);
        self.delta_leg(2, r, 0) == self.tmul(3, &r13, &r23)
            && self.delta_leg(2, r, 1) == self.tmul(3, &r13, &r12)
            && self.quasi_cocommutative(r)
    }
}

/// Reduced row echelon form of `rows` (each of length `n`); returns the pivot columns.
pub fn rref<C: Coef>(rows: &mut Vec<Vec<C>>, n: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inv();
        rows[r] = rows[r].iter().map(|x| x.mul(&inv)).collect();
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].neg();
                let pivot_row = rows[r].clone();
                for (x, y) in rows[i].iter_mut().zip(&pivot_row) {
                    *x = x.add(&y.mul(&f));
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

/// Affine solution set `particular + span(basis)` of the linear conditions
/// `R Δ(h) = Δ^op(h) R` (all basis h) and `(ε ⊗ id)R = (id ⊗ ε)R = 1`.
/// `None` when the system is inconsistent.
pub fn linear_candidates<C: Coef>(h: &Dense<C>) -> Option<(Vec<C>, Vec<Vec<C>>)> {
    linear_candidates_for(h, &(0..h.d).collect::<Vec<_>>())
}

/// As [`linear_candidates`], imposing quasi-cocommutativity only for the listed basis elements.
pub fn linear_candidates_for<C: Coef>(h: &Dense<C>, qc_basis: &[usize]) -> Option<(Vec<C>, Vec<Vec<C>>)> {
    let d = h.d;
    let n = d * d;
    let z = h.z();
    // Rows are equations in the n unknowns plus a constant column.
    let mut rows: Vec<Vec<C>> = Vec::new();
    for &hb in qc_basis {
        let dh = h.delta_basis(hb);
        let flip = h.flip(&dh);
        let mut cols: Vec<Vec<C>> = Vec::with_capacity(n);
        for u in 0..n {
            let mut e = vec![z.zero(); n];
            e[u] = z.one();
            let lhs = h.tmul(2, &e, &dh);
            let rhs = h.tmul(2, &flip, &e);
            cols.push(lhs.iter().zip(&rhs).map(|(a, b)| a.add(&b.neg())).collect());
        }
        for eq in 0..n {
            let mut row: Vec<C> = cols.iter().map(|c| c[eq].clone()).collect();
            row.push(z.zero());
            rows.push(row);
        }
    }
    for leg in 0..2 {
        for k in 0..d {
            let mut row = vec![z.zero(); n + 1];
            for u in 0..n {
                let (a, b) = (u / d, u % d);
                let (contract, keep) = if leg == 0 { (a, b) } else { (b, a) };
                if keep == k {
                    row[u] = h.counit[contract].clone();
                }
            }
            row[n] = h.unit[k].clone();
            rows.push(row);
        }
    }
    let pivots = rref(&mut rows, n + 1);
    if pivots.contains(&n) {
        return None;
    }
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let mut particular = vec![z.zero(); n];
    for (row, &p) in rows.iter().zip(&pivots) {
        particular[p] = row[n].clone();
    }
    let basis = free
        .iter()
        .map(|&f| {
            let mut v = vec![z.zero(); n];
            v[f] = z.one();
            for (row, &p) in rows.iter().zip(&pivots) {
                v[p] = row[f].neg();
            }
            v
        })
        .collect();
    Some((particular, basis))
}

/// Every point of `particular + span(basis)` with coefficients from `values`
/// that satisfies all R-matrix axioms.
pub fn search<C: Coef>(h: &Dense<C>, particular: &[C], basis: &[Vec<C>], values: &[C]) -> (Vec<Vec<C>>, usize) {
    let mut found = Vec::new();
    let mut idx = vec![0usize; basis.len()];
    let mut visited = 0usize;
    loop {
        let mut r = particular.to_vec();
        for (b, &i) in basis.iter().zip(&idx) {
            let c = &values[i];
            if c.is_zero() {
                continue;
            }
            for (x, y) in r.iter_mut().zip(b) {
                *x = x.add(&y.mul(c));
            }
        }
        visited += 1;
        if h.is_rmatrix(&r) {
            found.push(r);
        }
        let mut k = 0;
        loop {
            if k == idx.len() {
                return (found, visited);
            }
            idx[k] += 1;
            if idx[k] < values.len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

/// Grid search directly over chosen coordinates of R, the rest held at zero.
pub fn grid<C: Coef>(h: &Dense<C>, coords: &[usize], values: &[C]) -> Vec<Vec<C>> {
    let n = h.d * h.d;
    let z = h.z();
    let basis: Vec<Vec<C>> = coords
        .iter()
        .map(|&c| {
            let mut v = vec![z.zero(); n];
            v[c] = z.one();
            v
        })
        .collect();
    search(h, &vec![z.zero(); n], &basis, values).0
}
