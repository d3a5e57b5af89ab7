//! Group-like elements, found as characters of the dual.

use super::HopfAlgebra;
use crate::algebra::characters;
use crate::error::{Error, Result};
use crate::kernel::Scalar;

/// `G(H)` with its multiplication table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupLikes {
    /// Coordinates of each group-like, sorted; the unit is among them.
    pub elements: Vec<Vec<Scalar>>,
    /// `table[a][b]` is the index of `g_a g_b`.
    pub table: Vec<Vec<usize>>,
    pub orders: Vec<usize>,
    pub central: Vec<bool>,
    pub identity: usize,
    /// False when the character search over a non-prime field was partial.
    pub complete: bool,
    pub offending: Option<String>,
}

impl GroupLikes {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn inverse(&self, a: usize) -> usize {
        (0..self.order())
            .find(|&b| self.table[a][b] == self.identity)
            .expect("group-likes form a group")
    }

    /// Indices of non-identity central group-likes.
    pub fn nontrivial_central(&self) -> Vec<usize> {
        (0..self.order()).filter(|&i| i != self.identity && self.central[i]).collect()
    }

    pub fn index_of(&self, v: &[Scalar]) -> Option<usize> {
        self.elements.iter().position(|g| g.as_slice() == v)
    }
}

/// Group-likes of `h`: algebra maps `H* → k` are exactly the vectors `g`
/// with `Δ(g) = g ⊗ g`, `ε(g) = 1`. Each is re-verified on `h` directly.
pub fn grouplikes(h: &HopfAlgebra) -> Result<GroupLikes> {
    let dual = h.dual();
    let chars = characters(dual.algebra())?;
    let elements = chars.values;
    for (n, g) in elements.iter().enumerate() {
        if !is_grouplike(h, g) {
            return Err(Error::Structural(format!("character {n} of the dual is not group-like")));
        }
    }
    let index = |v: &[Scalar]| elements.iter().position(|g| g.as_slice() == v);
    let n = elements.len();
    let mut table = vec![vec![0; n]; n];
    for a in 0..n {
        for b in 0..n {
            table[a][b] = index(&h.mul(&elements[a], &elements[b]))
                .ok_or_else(|| Error::Structural("group-likes not closed under products".into()))?;
        }
    }
    let identity = index(h.unit()).ok_or_else(|| Error::Structural("1 missing from group-likes".into()))?;
    let orders = (0..n)
        .map(|a| {
            let mut cur = a;
            let mut k = 1;
            while cur != identity {
                cur = table[cur][a];
                k += 1;
            }
            k
        })
        .collect();
    let center = h.algebra().center();
    let central = elements.iter().map(|g| center.contains(g)).collect();
    Ok(GroupLikes {
        elements,
        table,
        orders,
        central,
        identity,
        complete: chars.complete,
        offending: chars.offending,
    })
}

pub fn is_grouplike(h: &HopfAlgebra, g: &[Scalar]) -> bool {
    let f = h.field();
    f.is_one(&h.eps(g)) && h.coproduct(g) == super::Tensor::pure(f, &[g, g])
}
