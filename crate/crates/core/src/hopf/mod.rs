//! Hopf algebras given by structure constants.

pub mod builders;
pub mod coideal;
pub mod grouplikes;
pub mod iso;
pub mod morphism;
pub mod tensor;
mod verify;

use std::sync::Arc;

pub use builders::{build_catalog, BuilderExpr, GroupSpec};
pub use coideal::{
    adjoint_action, coinvariants, is_normal_left_coideal_subalgebra, quotient_by_coideal, verify_extension, QuotientData, Side,
};
pub use grouplikes::{grouplikes, is_grouplike, GroupLikes};
pub use iso::{find_isomorphism, signature, IsoOutcome, Signature};
pub use morphism::{verify_morphism, HopfMorphism};
pub use tensor::Tensor;
pub use verify::{mutate_constant, verify_hopf, StructureSlot};
pub(crate) use verify::{antipode_violation, AntipodeSide};

/// Both convolution identities for the stored antipode.
pub fn antipode_holds(h: &HopfAlgebra) -> bool {
    h.has_antipode()
        && antipode_violation(h, AntipodeSide::Left).is_none()
        && antipode_violation(h, AntipodeSide::Right).is_none()
}

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::kernel::{vector, Field, Matrix, Scalar, SparseTensor3};
use crate::par;

/// `(m, η, Δ, ε, S)` in a fixed ordered basis. `Δ e_i = Σ comul[i, j, k] e_j ⊗ e_k`.
/// The antipode is a matrix whose column `i` is `S(e_i)`.
#[derive(Clone, Debug)]
pub struct HopfAlgebra {
    name: String,
    algebra: Algebra,
    comul: SparseTensor3,
    counit: Vec<Scalar>,
    antipode: Option<Matrix>,
    // Δ e_i as (flat index j * dim + k, coefficient)
    cotable: Vec<Vec<(usize, Scalar)>>,
}

impl PartialEq for HopfAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.algebra == other.algebra
            && self.comul == other.comul
            && self.counit == other.counit
            && self.antipode == other.antipode
    }
}

impl HopfAlgebra {
    /// Assembles the structure maps without checking any axiom. A missing
    /// antipode stays missing; see [`HopfAlgebra::with_computed_antipode`].
    pub fn from_parts(
        name: impl Into<String>,
        algebra: Algebra,
        comul: SparseTensor3,
        counit: Vec<Scalar>,
        antipode: Option<Matrix>,
    ) -> Result<HopfAlgebra> {
        let d = algebra.dim();
        if comul.dims() != (d, d, d) || counit.len() != d {
            return Err(Error::Dimension(format!(
                "coproduct {:?} / counit {} for an algebra of dimension {d}",
                comul.dims(),
                counit.len()
            )));
        }
        if let Some(s) = &antipode {
            if s.rows() != d || s.cols() != d {
                return Err(Error::Dimension(format!("antipode is {}x{}", s.rows(), s.cols())));
            }
        }
        let mut cotable = vec![Vec::new(); d];
        for (i, j, k, c) in comul.iter() {
            cotable[i].push((j * d + k, c.clone()));
        }
        Ok(HopfAlgebra {
            name: name.into(),
            algebra,
            comul,
            counit,
            antipode,
            cotable,
        })
    }

    /// Like [`HopfAlgebra::from_parts`] but fills in the antipode as the
    /// convolution inverse of the identity when it is absent.
    pub fn new(
        name: impl Into<String>,
        algebra: Algebra,
        comul: SparseTensor3,
        counit: Vec<Scalar>,
        antipode: Option<Matrix>,
    ) -> Result<HopfAlgebra> {
        HopfAlgebra::from_parts(name, algebra, comul, counit, antipode)?.with_computed_antipode()
    }

    pub fn with_computed_antipode(mut self) -> Result<HopfAlgebra> {
        if self.antipode.is_none() {
            self.antipode = Some(self.solve_antipode()?);
        }
        Ok(self)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> HopfAlgebra {
        self.name = name.into();
        self
    }

    pub fn into_arc(self) -> Arc<HopfAlgebra> {
        Arc::new(self)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn field(&self) -> &Field {
        self.algebra.field()
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn comul_tensor(&self) -> &SparseTensor3 {
        &self.comul
    }

    pub fn counit(&self) -> &[Scalar] {
        &self.counit
    }

    pub fn unit(&self) -> &[Scalar] {
        self.algebra.unit()
    }

    pub fn has_antipode(&self) -> bool {
        self.antipode.is_some()
    }

    pub fn antipode_opt(&self) -> Option<&Matrix> {
        self.antipode.as_ref()
    }

    /// The antipode matrix. Panics for a bialgebra assembled without one.
    pub fn antipode(&self) -> &Matrix {
        self.antipode.as_ref().expect("antipode has not been computed")
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        self.algebra.basis_vector(i)
    }

    pub fn zero_vector(&self) -> Vec<Scalar> {
        self.algebra.zero_vector()
    }

    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        self.algebra.mul(x, y)
    }

    pub fn basis_coproduct(&self, i: usize) -> &[(usize, Scalar)] {
        &self.cotable[i]
    }

    pub fn coproduct(&self, x: &[Scalar]) -> Tensor {
        let f = self.field();
        let d = self.dim();
        let mut t = Tensor::zero(&[d, d]);
        for (i, a) in x.iter().enumerate() {
            if f.is_zero(a) {
                continue;
            }
            for (jk, c) in &self.cotable[i] {
                t.add_term(f, *jk, &f.mul(a, c));
            }
        }
        t
    }

    pub fn eps(&self, x: &[Scalar]) -> Scalar {
        vector::dot(self.field(), &self.counit, x)
    }

    pub fn apply_antipode(&self, x: &[Scalar]) -> Vec<Scalar> {
        self.antipode().mul_vec(x)
    }

    /// The antipode's inverse, if it exists.
    pub fn antipode_inverse(&self) -> Result<Matrix> {
        self.antipode().inverse().map_err(|_| Error::NonInvertibleAntipode)
    }

    // --- tensor helpers on H^{⊗n} ---

    pub fn legs(&self, n: usize) -> Vec<&Algebra> {
        vec![&self.algebra; n]
    }

    pub fn leg_dims(&self, n: usize) -> Vec<usize> {
        vec![self.dim(); n]
    }

    /// `1 ⊗ ... ⊗ 1` with `n` legs.
    pub fn one_tensor(&self, n: usize) -> Tensor {
        let u = self.unit();
        let legs: Vec<&[Scalar]> = (0..n).map(|_| u).collect();
        Tensor::pure(self.field(), &legs)
    }

    /// Product in `H^{⊗n}`.
    pub fn tmul(&self, a: &Tensor, b: &Tensor) -> Tensor {
        a.mul(b, &self.legs(a.legs()))
    }

    /// Applies Δ to one leg, which becomes two adjacent legs.
    pub fn delta_leg(&self, t: &Tensor, leg: usize) -> Tensor {
        let d = self.dim();
        t.map_leg(self.field(), leg, &[d, d], |k| self.cotable[k].clone())
    }

    pub fn eps_leg(&self, t: &Tensor, leg: usize) -> Tensor {
        t.apply_functional(self.field(), leg, &self.counit)
    }

    pub fn antipode_leg(&self, t: &Tensor, leg: usize) -> Tensor {
        t.apply_matrix(leg, self.antipode())
    }

    /// Multiplies legs `leg` and `leg + 1` together.
    pub fn mul_legs(&self, t: &Tensor, leg: usize) -> Tensor {
        let f = self.field();
        let mut dims = t.dims().to_vec();
        dims.remove(leg + 1);
        t.contract(f, &dims, |parts| {
            let prod = self.algebra.basis_product(parts[leg], parts[leg + 1]);
            prod.iter()
                .map(|(k, c)| {
                    let mut np = parts.to_vec();
                    np[leg] = *k;
                    np.remove(leg + 1);
                    (Tensor::join_index(&dims, &np), c.clone())
                })
                .collect()
        })
    }

    /// The convolution inverse of the identity: solves `m (S ⊗ id) Δ = η ε`.
    pub fn solve_antipode(&self) -> Result<Matrix> {
        let f = self.field().clone();
        let d = self.dim();
        // unknown s[k][j] at position k * d + j; equation (i, t):
        // Σ_{(j,l) ∈ Δe_i} c Σ_k s[k][j] (e_k e_l)_t = ε_i δ_{t,1}
        let rows: Vec<Vec<Scalar>> = par::map_range(d * d, |it| {
            let (i, t) = (it / d, it % d);
            let mut row = vec![f.zero(); d * d];
            for (jl, c) in &self.cotable[i] {
                let (j, l) = (jl / d, jl % d);
                for k in 0..d {
                    for (m, cm) in self.algebra.basis_product(k, l) {
                        if *m == t {
                            let idx = k * d + j;
                            row[idx] = f.add(&row[idx], &f.mul(c, cm));
                        }
                    }
                }
            }
            row
        });
        let rhs: Vec<Scalar> = (0..d * d)
            .map(|it| f.mul(&self.counit[it / d], &self.unit()[it % d]))
            .collect();
        let system = Matrix::from_rows(&f, d * d, rows);
        let rr = system.rref();
        if rr.rank() < d * d {
            return Err(Error::NoAntipode);
        }
        let sol = system.solve(&rhs).ok_or(Error::NoAntipode)?;
        let s = Matrix::from_fn(&f, d, d, |k, j| sol[k * d + j].clone());
        // the right-hand convolution identity must hold as well
        let candidate = HopfAlgebra::from_parts("", self.algebra.clone(), self.comul.clone(), self.counit.clone(), Some(s.clone()))?;
        if verify::antipode_violation(&candidate, verify::AntipodeSide::Right).is_some() {
            return Err(Error::NoAntipode);
        }
        Ok(s)
    }

    /// Dual Hopf algebra on the dual basis `e^i`.
    pub fn dual(&self) -> HopfAlgebra {
        let f = self.field();
        let d = self.dim();
        let mut mul = SparseTensor3::cube(d);
        for (i, j, k, c) in self.comul.iter() {
            mul.add(f, j, k, i, c);
        }
        let mut comul = SparseTensor3::cube(d);
        for (i, j, k, c) in self.algebra.mul_tensor().iter() {
            comul.add(f, k, i, j, c);
        }
        let algebra = Algebra::new(f, mul, self.counit.clone()).expect("dual shape");
        HopfAlgebra::from_parts(
            format!("dual({})", self.name),
            algebra,
            comul,
            self.unit().to_vec(),
            self.antipode.as_ref().map(|s| s.transpose()),
        )
        .expect("dual shape")
    }

    /// Componentwise structure on `self ⊗ other`, basis `e_i ⊗ e_j` at `i * dim(other) + j`.
    pub fn tensor(&self, other: &HopfAlgebra) -> Result<HopfAlgebra> {
        if self.field() != other.field() {
            return Err(Error::FieldMismatch(format!(
                "{} over {} and {} over {}",
                self.name,
                self.field().spec(),
                other.name,
                other.field().spec()
            )));
        }
        let f = self.field();
        let (d1, d2) = (self.dim(), other.dim());
        let d = d1 * d2;
        let mut mul = SparseTensor3::cube(d);
        for (i, k, m, a) in self.algebra.mul_tensor().iter() {
            for (j, l, n, b) in other.algebra.mul_tensor().iter() {
                mul.add(f, i * d2 + j, k * d2 + l, m * d2 + n, &f.mul(a, b));
            }
        }
        let mut comul = SparseTensor3::cube(d);
        for (i, a1, b1, a) in self.comul.iter() {
            for (j, a2, b2, b) in other.comul.iter() {
                comul.add(f, i * d2 + j, a1 * d2 + a2, b1 * d2 + b2, &f.mul(a, b));
            }
        }
        let unit: Vec<Scalar> = (0..d).map(|ij| f.mul(&self.unit()[ij / d2], &other.unit()[ij % d2])).collect();
        let counit: Vec<Scalar> = (0..d)
            .map(|ij| f.mul(&self.counit[ij / d2], &other.counit[ij % d2]))
            .collect();
        let antipode = match (&self.antipode, &other.antipode) {
            (Some(s1), Some(s2)) => Some(s1.kron(s2)),
            _ => None,
        };
        HopfAlgebra::from_parts(
            format!("tensor({}, {})", self.name, other.name),
            Algebra::new(f, mul, unit)?,
            comul,
            counit,
            antipode,
        )
    }

    /// Same algebra, flipped coproduct, antipode kept as given.
    pub fn cop(&self) -> HopfAlgebra {
        let f = self.field();
        let mut comul = SparseTensor3::cube(self.dim());
        for (i, j, k, c) in self.comul.iter() {
            comul.add(f, i, k, j, c);
        }
        HopfAlgebra::from_parts(
            format!("cop({})", self.name),
            self.algebra.clone(),
            comul,
            self.counit.clone(),
            self.antipode.clone(),
        )
        .expect("same shape")
    }

    /// Opposite multiplication, antipode kept as given.
    pub fn op(&self) -> HopfAlgebra {
        HopfAlgebra::from_parts(
            format!("op({})", self.name),
            self.algebra.opposite(),
            self.comul.clone(),
            self.counit.clone(),
            self.antipode.clone(),
        )
        .expect("same shape")
    }

    /// Copy with a different antipode matrix.
    pub fn with_antipode(&self, s: Matrix) -> HopfAlgebra {
        HopfAlgebra::from_parts(
            self.name.clone(),
            self.algebra.clone(),
            self.comul.clone(),
            self.counit.clone(),
            Some(s),
        )
        .expect("same shape")
    }
}

/// Which flip [`op_cop`] applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Flip {
    Op,
    Cop,
}

/// Result of flipping the multiplication or comultiplication while keeping S.
#[derive(Clone, Debug)]
pub struct OpCop {
    /// The flipped structure with the original S.
    pub flipped: HopfAlgebra,
    /// Whether S is an antipode of the flipped structure.
    pub antipode_holds: bool,
    /// The flipped structure with S⁻¹, when S is invertible.
    pub repaired: Option<HopfAlgebra>,
    pub repaired_holds: bool,
}

pub fn op_cop(h: &HopfAlgebra, flip: Flip) -> OpCop {
    let flipped = match flip {
        Flip::Op => h.op(),
        Flip::Cop => h.cop(),
    };
    let antipode_holds = verify::antipode_violation(&flipped, verify::AntipodeSide::Left).is_none()
        && verify::antipode_violation(&flipped, verify::AntipodeSide::Right).is_none();
    let repaired = h.antipode_inverse().ok().map(|sinv| flipped.with_antipode(sinv));
    let repaired_holds = repaired.as_ref().is_some_and(|r| verify_hopf(r).passed());
    OpCop {
        flipped,
        antipode_holds,
        repaired,
        repaired_holds,
    }
}
