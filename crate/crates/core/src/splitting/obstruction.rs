use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::hopf::{grouplikes, is_grouplike, GroupLikes, HopfAlgebra};
use crate::kernel::{prime_factors, vector, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Clause {
    I,
    Ii,
    Iii,
    IvPossible,
    NoQt,
    Inconclusive,
}

impl Clause {
    pub fn as_str(self) -> &'static str {
        match self {
            Clause::I => "i",
            Clause::Ii => "ii",
            Clause::Iii => "iii",
            Clause::IvPossible => "iv_possible",
            Clause::NoQt => "no_qt",
            Clause::Inconclusive => "inconclusive",
        }
    }
}

/// `α(g)` for a group-like `g` and a character `α`, both of order `prime`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pairing {
    pub prime: u64,
    /// Index into [`ObstructionReport::grouplikes`].
    pub g: usize,
    /// Index into [`ObstructionReport::characters`].
    pub alpha: usize,
    pub value: Scalar,
}

#[derive(Clone, Debug)]
pub struct ObstructionReport {
    pub clause: Clause,
    pub detail: String,
    /// `G(H)` in sorted order.
    pub grouplikes: Vec<Vec<Scalar>>,
    /// `G(H*)` as coordinate vectors in the dual basis, sorted.
    pub characters: Vec<Vec<Scalar>>,
    pub central_grouplikes: Vec<usize>,
    pub central_characters: Vec<usize>,
    pub pairings: Vec<Pairing>,
    /// `(p, p² | dim H)` for each odd prime `p` dividing `|G(H*)|`, filled when clause (iv) is live.
    pub p_squared: Vec<(u64, bool)>,
}

impl ObstructionReport {
    /// Re-checks group-likes, characters and pairing values against `h`.
    pub fn recheck(&self, h: &HopfAlgebra) -> bool {
        let f = h.field();
        let dual = h.dual();
        self.grouplikes.iter().all(|g| is_grouplike(h, g))
            && self.characters.iter().all(|a| is_grouplike(&dual, a))
            && self
                .pairings
                .iter()
                .all(|p| vector::dot(f, &self.characters[p.alpha], &self.grouplikes[p.g]) == p.value)
    }
}

fn inconclusive(detail: String) -> ObstructionReport {
    ObstructionReport {
        clause: Clause::Inconclusive,
        detail,
        grouplikes: Vec::new(),
        characters: Vec::new(),
        central_grouplikes: Vec::new(),
        central_characters: Vec::new(),
        pairings: Vec::new(),
        p_squared: Vec::new(),
    }
}

/// Clauses (i)-(iii) in order, then the odd-prime pairing test.
pub fn obstruction_check(h: &HopfAlgebra) -> Result<ObstructionReport> {
    let gh: GroupLikes = grouplikes(h)?;
    let gd: GroupLikes = grouplikes(&h.dual())?;
    for (what, g) in [("G(H)", &gh), ("G(H*)", &gd)] {
        if !g.complete {
            return Ok(inconclusive(format!(
                "incomplete group data for {what}: {}",
                g.offending.clone().unwrap_or_default()
            )));
        }
    }
    let mut report = ObstructionReport {
        clause: Clause::IvPossible,
        detail: String::new(),
        grouplikes: gh.elements.clone(),
        characters: gd.elements.clone(),
        central_grouplikes: gh.nontrivial_central(),
        central_characters: gd.nontrivial_central(),
        pairings: Vec::new(),
        p_squared: Vec::new(),
    };
    if gd.order() == 1 {
        report.clause = Clause::I;
        report.detail = "|G(H*)| = 1".into();
        return Ok(report);
    }
    if !report.central_characters.is_empty() {
        report.clause = Clause::Ii;
        report.detail = format!("{} non-trivial central characters", report.central_characters.len());
        return Ok(report);
    }
    if !report.central_grouplikes.is_empty() {
        report.clause = Clause::Iii;
        report.detail = format!("{} non-trivial central group-likes", report.central_grouplikes.len());
        return Ok(report);
    }
    let f = h.field();
    let mut primes = prime_factors(gd.order() as u64);
    primes.dedup();
    let mut obstructing = None;
    for &p in primes.iter().filter(|&&p| p != 2) {
        let mut all_nontrivial = true;
        for (gi, _) in gh.orders.iter().enumerate().filter(|(_, &o)| o as u64 == p) {
            for (ai, _) in gd.orders.iter().enumerate().filter(|(_, &o)| o as u64 == p) {
                let value = vector::dot(f, &gd.elements[ai], &gh.elements[gi]);
                all_nontrivial &= !f.is_one(&value);
                report.pairings.push(Pairing {
                    prime: p,
                    g: gi,
                    alpha: ai,
                    value,
                });
            }
        }
        if all_nontrivial && obstructing.is_none() {
            obstructing = Some(p);
        }
        report.p_squared.push((p, (h.dim() as u64).is_multiple_of(p * p)));
    }
    match obstructing {
        Some(p) => {
            report.clause = Clause::NoQt;
            report.p_squared.clear();
            report.detail = format!("every order-{p} pairing α(g) differs from 1");
        }
        None => {
            report.detail = "clauses (i)-(iii) fail; every odd prime admits a pairing equal to 1".into();
        }
    }
    Ok(report)
}
