//! Isomorphism search between small Hopf algebras.
//!
//! Group-likes are matched by table-preserving bijections, then one
//! skew-primitive generator at a time is sent to a scaled (and shifted)
//! representative of the matching skew-primitive space. Candidate maps are
//! defined on a basis of words in the generators and checked with
//! [`verify_morphism`]. Above dimension 16 only signatures are compared.

use std::sync::Arc;

use super::{grouplikes, verify_morphism, GroupLikes, HopfAlgebra, HopfMorphism, Tensor};
use crate::error::Result;
use crate::kernel::{vector, Field, Matrix, Scalar, Subspace};

pub const SEARCH_LIMIT: usize = 16;

/// Cheap isomorphism invariants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Signature {
    pub dim: usize,
    pub grouplike_orders: Vec<usize>,
    pub dual_grouplike_orders: Vec<usize>,
    pub center_dim: usize,
    pub dual_center_dim: usize,
    pub central_grouplikes: usize,
    pub commutative: bool,
    pub cocommutative: bool,
}

pub fn signature(h: &HopfAlgebra) -> Result<Signature> {
    let g = grouplikes(h)?;
    let dual = h.dual();
    let gd = grouplikes(&dual)?;
    let mut orders = g.orders.clone();
    orders.sort();
    let mut dual_orders = gd.orders.clone();
    dual_orders.sort();
    Ok(Signature {
        dim: h.dim(),
        grouplike_orders: orders,
        dual_grouplike_orders: dual_orders,
        center_dim: h.algebra().center().dim(),
        dual_center_dim: dual.algebra().center().dim(),
        central_grouplikes: g.central.iter().filter(|&&c| c).count(),
        commutative: h.algebra().is_commutative(),
        cocommutative: dual.algebra().is_commutative(),
    })
}

#[derive(Clone, Debug)]
pub enum IsoOutcome {
    Isomorphic(HopfMorphism),
    NotIsomorphic(String),
    /// Above the search limit: invariants agree, no map was constructed.
    SignaturesAgree(Signature),
    /// The search could not decide (generators do not span, or no candidate fit).
    Undecided(String),
}

impl IsoOutcome {
    pub fn morphism(&self) -> Option<&HopfMorphism> {
        match self {
            IsoOutcome::Isomorphic(m) => Some(m),
            _ => None,
        }
    }

    pub fn is_isomorphic(&self) -> bool {
        matches!(self, IsoOutcome::Isomorphic(_))
    }
}

pub fn find_isomorphism(source: &Arc<HopfAlgebra>, target: &Arc<HopfAlgebra>) -> Result<IsoOutcome> {
    if source.field() != target.field() {
        return Ok(IsoOutcome::NotIsomorphic("different fields".into()));
    }
    let (s1, s2) = (signature(source)?, signature(target)?);
    if s1 != s2 {
        return Ok(IsoOutcome::NotIsomorphic(format!("signatures differ: {s1:?} vs {s2:?}")));
    }
    if source.dim() > SEARCH_LIMIT {
        return Ok(IsoOutcome::SignaturesAgree(s1));
    }
    let f = source.field().clone();
    let (g1, g2) = (grouplikes(source)?, grouplikes(target)?);
    let skew1 = skew_primitives(source, &g1);
    let skew2 = skew_primitives(target, &g2);

    // generators: group-likes, then skew representatives that enlarge the span
    let mut gens: Vec<Generator> = (0..g1.order()).map(Generator::Group).collect();
    let mut vecs: Vec<Vec<Scalar>> = g1.elements.clone();
    let mut words = word_basis(source, &vecs);
    for (pair, reps) in &skew1 {
        for r in reps.iter() {
            if words.0.dim() == source.dim() {
                break;
            }
            let mut trial = vecs.clone();
            trial.push(r.clone());
            let w = word_basis(source, &trial);
            if w.0.dim() > words.0.dim() {
                gens.push(Generator::Skew(*pair));
                vecs = trial;
                words = w;
            }
        }
    }
    if words.0.dim() < source.dim() {
        return Ok(IsoOutcome::Undecided("group-likes and skew-primitives do not generate".into()));
    }
    let (_, word_list, word_vecs) = words;
    let w_inv = match Matrix::from_columns(&f, source.dim(), &word_vecs).inverse() {
        Ok(m) => m,
        Err(_) => return Ok(IsoOutcome::Undecided("word basis is singular".into())),
    };
    let scalars = scale_candidates(&f);
    let shifts = shift_candidates(&f);

    for sigma in group_bijections(&g1, &g2) {
        // candidate images per generator
        let mut options: Vec<Vec<Vec<Scalar>>> = Vec::new();
        let mut feasible = true;
        for g in &gens {
            match g {
                Generator::Group(a) => options.push(vec![g2.elements[sigma[*a]].clone()]),
                Generator::Skew((a, b)) => {
                    let key = (sigma[*a], sigma[*b]);
                    let reps2 = skew2.iter().find(|(p, _)| *p == key).map(|(_, r)| r);
                    let reps1 = &skew1.iter().find(|(p, _)| *p == (*a, *b)).expect("present").1;
                    let Some(reps2) = reps2.filter(|r| r.len() == reps1.len()) else {
                        feasible = false;
                        break;
                    };
                    let diff = vector::sub(&f, &g2.elements[key.0], &g2.elements[key.1]);
                    let mut opts = Vec::new();
                    for y in reps2 {
                        for c in &scalars {
                            for t in &shifts {
                                if key.0 == key.1 && !f.is_zero(t) {
                                    continue;
                                }
                                let mut v = vector::scale(&f, c, y);
                                vector::axpy(&f, &mut v, t, &diff);
                                opts.push(v);
                            }
                        }
                    }
                    options.push(opts);
                }
            }
        }
        if !feasible {
            continue;
        }
        let mut choice = vec![0usize; options.len()];
        loop {
            let images: Vec<&Vec<Scalar>> = choice.iter().zip(&options).map(|(&c, o)| &o[c]).collect();
            let word_images: Vec<Vec<Scalar>> = word_list
                .iter()
                .map(|w| w.iter().fold(target.unit().to_vec(), |acc, &g| target.mul(&acc, images[g])))
                .collect();
            let m = Matrix::from_columns(&f, target.dim(), &word_images).mul(&w_inv);
            if m.rank() == source.dim() {
                let phi = HopfMorphism::new(source.clone(), target.clone(), m);
                if verify_morphism(&phi).passed() {
                    let mut phi = phi;
                    phi.verified = true;
                    return Ok(IsoOutcome::Isomorphic(phi));
                }
            }
            // odometer over the option lists
            let mut pos = 0;
            loop {
                if pos == choice.len() {
                    break;
                }
                choice[pos] += 1;
                if choice[pos] < options[pos].len() {
                    break;
                }
                choice[pos] = 0;
                pos += 1;
            }
            if pos == choice.len() {
                break;
            }
        }
    }
    Ok(IsoOutcome::Undecided("no candidate map verified".into()))
}

#[derive(Clone, Copy, Debug)]
enum Generator {
    Group(usize),
    Skew((usize, usize)),
}

/// Nontrivial skew-primitive representatives per ordered pair `(g, h)`:
/// solutions of `Δx = x ⊗ g + h ⊗ x` modulo `k(g − h)`.
fn skew_primitives(h: &HopfAlgebra, g: &GroupLikes) -> Vec<((usize, usize), Vec<Vec<Scalar>>)> {
    let f = h.field();
    let d = h.dim();
    let mut out = Vec::new();
    for a in 0..g.order() {
        for b in 0..g.order() {
            let (ga, gb) = (&g.elements[a], &g.elements[b]);
            let cols: Vec<Vec<Scalar>> = (0..d)
                .map(|i| {
                    let e = h.basis_vector(i);
                    h.coproduct(&e)
                        .sub(f, &Tensor::pure(f, &[&e, ga]))
                        .sub(f, &Tensor::pure(f, &[gb, &e]))
                        .to_vector(f)
                })
                .collect();
            let space = Subspace::kernel(&Matrix::from_columns(f, d * d, &cols));
            let trivial = vector::sub(f, ga, gb);
            let mut span = Subspace::span(f, d, &[trivial]);
            let mut reps = Vec::new();
            for v in space.basis_vectors() {
                if !span.contains(&v) {
                    span = span.sum(&Subspace::span(f, d, std::slice::from_ref(&v)));
                    reps.push(v);
                }
            }
            if !reps.is_empty() {
                out.push(((a, b), reps));
            }
        }
    }
    out
}

/// Words in the generators whose products form a basis of the generated
/// subalgebra, found breadth first.
fn word_basis(h: &HopfAlgebra, gens: &[Vec<Scalar>]) -> (Subspace, Vec<Vec<usize>>, Vec<Vec<Scalar>>) {
    let f = h.field();
    let mut words: Vec<Vec<usize>> = vec![vec![]];
    let mut vecs = vec![h.unit().to_vec()];
    let mut span = Subspace::span(f, h.dim(), &vecs);
    let mut frontier = 0;
    while frontier < words.len() {
        for (gi, g) in gens.iter().enumerate() {
            let v = h.mul(&vecs[frontier], g);
            if !span.contains(&v) {
                span = span.sum(&Subspace::span(f, h.dim(), std::slice::from_ref(&v)));
                let mut w = words[frontier].clone();
                w.push(gi);
                words.push(w);
                vecs.push(v);
            }
        }
        frontier += 1;
    }
    (span, words, vecs)
}

/// Table-preserving bijections `G1 → G2`, as index maps.
fn group_bijections(g1: &GroupLikes, g2: &GroupLikes) -> Vec<Vec<usize>> {
    let n = g1.order();
    if n != g2.order() {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut current = vec![usize::MAX; n];
    let mut used = vec![false; n];
    extend(g1, g2, 0, &mut current, &mut used, &mut out);
    out
}

fn extend(g1: &GroupLikes, g2: &GroupLikes, a: usize, cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
    let n = g1.order();
    if a == n {
        out.push(cur.clone());
        return;
    }
    for b in 0..n {
        if used[b] || g1.orders[a] != g2.orders[b] || (a == g1.identity) != (b == g2.identity) {
            continue;
        }
        cur[a] = b;
        // consistency with every already-assigned pair
        let ok = (0..=a).all(|x| {
            (0..=a).all(|y| {
                let xy = g1.table[x][y];
                cur[xy] == usize::MAX || cur[xy] == g2.table[cur[x]][cur[y]]
            })
        });
        if ok {
            used[b] = true;
            extend(g1, g2, a + 1, cur, used, out);
            used[b] = false;
        }
        cur[a] = usize::MAX;
    }
}

fn scale_candidates(f: &Field) -> Vec<Scalar> {
    if let Some(all) = f.elements() {
        if all.len() <= 13 {
            return all.into_iter().filter(|c| !f.is_zero(c)).collect();
        }
    }
    let two = f.from_i64(2);
    let half = f.inv(&two).expect("characteristic 0 or large");
    let mut out = vec![f.one(), f.from_i64(-1), two.clone(), f.neg(&two), half.clone(), f.neg(&half)];
    out.dedup();
    out
}

fn shift_candidates(f: &Field) -> Vec<Scalar> {
    let mut out = vec![f.zero(), f.one(), f.from_i64(-1)];
    out.dedup();
    out
}
