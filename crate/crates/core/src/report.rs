//! Pass/fail records shared by all verifiers.

use std::fmt;

use serde::{Deserialize, Serialize};

/// Outcome of one named identity check. On failure `witness` holds the
/// basis indices at which the identity first breaks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub witness: Option<Vec<usize>>,
    pub detail: String,
}

impl Check {
    pub fn pass(name: impl Into<String>) -> Check {
        Check {
            name: name.into(),
            pass: true,
            witness: None,
            detail: String::new(),
        }
    }

    pub fn fail(name: impl Into<String>, witness: Option<Vec<usize>>, detail: impl Into<String>) -> Check {
        Check {
            name: name.into(),
            pass: false,
            witness,
            detail: detail.into(),
        }
    }

    /// Pass when `first_failure` is `None`, otherwise fail at that witness.
    pub fn from_witness(name: impl Into<String>, first_failure: Option<Vec<usize>>) -> Check {
        match first_failure {
            None => Check::pass(name),
            Some(w) => Check::fail(name, Some(w), ""),
        }
    }

    pub fn from_bool(name: impl Into<String>, ok: bool, detail: impl Into<String>) -> Check {
        if ok {
            Check::pass(name)
        } else {
            Check::fail(name, None, detail)
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.name, if self.pass { "pass" } else { "FAIL" })?;
        if let Some(w) = &self.witness {
            write!(f, " at {w:?}")?;
        }
        if !self.detail.is_empty() {
            write!(f, " ({})", self.detail)?;
        }
        Ok(())
    }
}

/// Ordered list of checks.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new() -> Report {
        Report::default()
    }

    pub fn push(&mut self, c: Check) {
        self.checks.push(c);
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.pass)
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failed_names(&self) -> Vec<&str> {
        self.checks.iter().filter(|c| !c.pass).map(|c| c.name.as_str()).collect()
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        Ok(())
    }
}
