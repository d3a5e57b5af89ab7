//! Job files: parsing, validation and resolution of the analyzed object.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use hopfkit_core::hopf::builders::RawStructure;
use hopfkit_core::hopf::{build_catalog, BuilderExpr, HopfAlgebra, HopfMorphism, Tensor};
use hopfkit_core::kernel::{Field, FieldSpec, Matrix};
use hopfkit_core::qt::{drinfeld_double, trivial_r};
use hopfkit_core::serial::CertificateData;
use hopfkit_core::splitting::{componentwise_r, PathChoice};
use hopfkit_core::Error;

pub const SCHEMA_VERSION: u32 = 1;

fn default_schema() -> u32 {
    SCHEMA_VERSION
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobSpec {
    #[serde(default = "default_schema")]
    pub schema_version: u32,
    pub field: FieldSpec,
    pub object: BuilderExpr,
    /// R-matrix on `object`, needed by `qt`, `split` and `double`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<RSpec>,
    pub tasks: Vec<TaskEntry>,
}

/// How the R-matrix is given.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum RSpec {
    /// `1 ⊗ 1`.
    Trivial {},
    /// The canonical R-matrix of a `double` object.
    Canonical {},
    /// `[a, b, "c"]` for the term `c e_a ⊗ e_b`.
    Terms { terms: Vec<(usize, usize, String)> },
    /// Componentwise R on a `tensor` object.
    Componentwise { left: Box<RSpec>, right: Box<RSpec> },
}

/// The quotient map `π` for `split`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum PiSpec {
    /// On a `tensor` object: `a ⊗ b ↦ a ε(b)` (left) or `ε(a) b` (right).
    TensorFactor { side: Side },
    /// Explicit matrix onto `target`, `[row, col, "c"]` entries.
    Matrix {
        target: BuilderExpr,
        entries: Vec<(usize, usize, String)>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Left,
    Right,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PathArg {
    Factorizable,
    #[serde(alias = "full_rank")]
    Fullrank,
    #[default]
    Auto,
}

impl PathArg {
    pub fn choice(self) -> PathChoice {
        match self {
            PathArg::Factorizable => PathChoice::Factorizable,
            PathArg::Fullrank => PathChoice::FullRank,
            PathArg::Auto => PathChoice::Auto,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            PathArg::Factorizable => "factorizable",
            PathArg::Fullrank => "fullrank",
            PathArg::Auto => "auto",
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QtTask {
    /// Ribbon candidate, coordinates as strings.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub theta: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SplitTask {
    pub pi: PiSpec,
    #[serde(default)]
    pub path: PathArg,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CheckCertTask {
    pub certificate: CertificateData,
}

/// Extra destinations for the finished report.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReportSink {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub json: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub text: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum Task {
    Verify {},
    Analyze {},
    Qt(QtTask),
    Split(SplitTask),
    Obstruct {},
    Double {},
    CheckCert(Box<CheckCertTask>),
    Report(ReportSink),
}

impl Task {
    pub fn name(&self) -> &'static str {
        match self {
            Task::Verify {} => "verify",
            Task::Analyze {} => "analyze",
            Task::Qt(_) => "qt",
            Task::Split(_) => "split",
            Task::Obstruct {} => "obstruct",
            Task::Double {} => "double",
            Task::CheckCert(_) => "check_cert",
            Task::Report(_) => "report",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TaskName {
    Verify,
    Analyze,
    Qt,
    Obstruct,
    Double,
}

/// A task written either as a bare name (`"verify"`) or as `{"split": {...}}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum TaskEntry {
    Bare(TaskName),
    Full(Task),
}

impl TaskEntry {
    pub fn task(&self) -> Task {
        match self {
            TaskEntry::Full(t) => t.clone(),
            TaskEntry::Bare(n) => match n {
                TaskName::Verify => Task::Verify {},
                TaskName::Analyze => Task::Analyze {},
                TaskName::Qt => Task::Qt(QtTask::default()),
                TaskName::Obstruct => Task::Obstruct {},
                TaskName::Double => Task::Double {},
            },
        }
    }
}

/// A parse or validation error, located in the job text.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagnostic {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.line == 0 {
            return write!(f, "{}", self.message);
        }
        write!(f, "line {}, column {}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for Diagnostic {}

/// Position of the first `"key"` in `text`, or the start of the document.
fn locate(text: &str, key: &str) -> (usize, usize) {
    let needle = format!("\"{key}\"");
    match text.find(&needle) {
        None => (1, 1),
        Some(off) => {
            let before = &text[..off];
            let line = before.matches('\n').count() + 1;
            let column = before.rfind('\n').map_or(off, |nl| off - nl - 1) + 1;
            (line, column)
        }
    }
}

fn diag_at(text: &str, key: &str, message: impl Into<String>) -> Diagnostic {
    let (line, column) = locate(text, key);
    Diagnostic {
        line,
        column,
        message: message.into(),
    }
}

/// serde_json's message without its trailing ` at line L column C`.
pub(crate) fn serde_message(e: &serde_json::Error) -> String {
    let msg = e.to_string();
    match msg.rfind(" at line ") {
        Some(cut) if e.line() > 0 => msg[..cut].to_string(),
        _ => msg,
    }
}

fn untagged_hint(msg: String) -> String {
    if msg.contains("untagged enum TaskEntry") {
        "invalid task: expected one of \"verify\", \"analyze\", \"qt\", \"obstruct\", \"double\" or an object \
         {\"qt\"|\"split\"|\"check_cert\"|\"report\": {...}}"
            .into()
    } else {
        msg
    }
}

/// Parses and schema-checks a job. Builder and field problems are caught
/// later by [`Prepared::new`], still before any task runs.
pub fn parse_jobspec(text: &str) -> Result<JobSpec, Diagnostic> {
    let job: JobSpec = serde_json::from_str(text).map_err(|e| Diagnostic {
        line: e.line(),
        column: e.column(),
        message: untagged_hint(serde_message(&e)),
    })?;
    if job.schema_version != SCHEMA_VERSION {
        return Err(diag_at(
            text,
            "schema_version",
            format!("unsupported schema_version {} (expected {SCHEMA_VERSION})", job.schema_version),
        ));
    }
    if job.tasks.is_empty() {
        return Err(diag_at(text, "tasks", "tasks must not be empty"));
    }
    let tasks: Vec<Task> = job.tasks.iter().map(TaskEntry::task).collect();
    for t in &tasks {
        if matches!(t, Task::Qt(_) | Task::Split(_) | Task::Double {}) && job.r.is_none() {
            return Err(diag_at(text, "tasks", format!("task `{}` needs an \"r\" entry", t.name())));
        }
    }
    Ok(job)
}

/// The job with its field and object built.
pub struct Prepared {
    pub job: JobSpec,
    pub field: Field,
    pub object: Arc<HopfAlgebra>,
}

impl Prepared {
    /// Builds the field and the object; a failure here is an input error.
    pub fn new(job: JobSpec, text: Option<&str>) -> Result<Prepared, Diagnostic> {
        let at = |key: &str, msg: String| match text {
            Some(t) => diag_at(t, key, msg),
            None => Diagnostic {
                line: 0,
                column: 0,
                message: msg,
            },
        };
        let field = Field::new(job.field.clone()).map_err(|e| at("field", e.to_string()))?;
        let object = build_catalog(&field, &job.object).map_err(|e| at("object", e.to_string()))?;
        Ok(Prepared {
            job,
            field,
            object: Arc::new(object),
        })
    }

    pub fn tasks(&self) -> Vec<Task> {
        self.job.tasks.iter().map(TaskEntry::task).collect()
    }

    pub fn r_tensor(&self) -> hopfkit_core::Result<Tensor> {
        let spec = self
            .job
            .r
            .as_ref()
            .ok_or_else(|| Error::Usage("the job has no \"r\" entry".into()))?;
        let r = resolve_r(&self.field, &self.job.object, spec)?;
        let d = self.object.dim();
        if r.dims() != [d, d] {
            return Err(Error::Dimension(format!("R has shape {:?} on an object of dimension {d}", r.dims())));
        }
        Ok(r)
    }

    pub fn projection(&self, pi: &PiSpec) -> hopfkit_core::Result<HopfMorphism> {
        resolve_pi(&self.field, &self.job.object, &self.object, pi)
    }
}

/// Evaluates an [`RSpec`] against the builder expression of the object.
pub fn resolve_r(field: &Field, expr: &BuilderExpr, spec: &RSpec) -> hopfkit_core::Result<Tensor> {
    match spec {
        RSpec::Trivial {} => Ok(trivial_r(&build_catalog(field, expr)?)),
        RSpec::Terms { terms } => {
            let d = build_catalog(field, expr)?.dim();
            let mut t = Tensor::zero(&[d, d]);
            for (a, b, c) in terms {
                if *a >= d || *b >= d {
                    return Err(Error::Usage(format!("R term ({a}, {b}) out of range for dimension {d}")));
                }
                t.add_term(field, a * d + b, &field.parse(c)?);
            }
            Ok(t)
        }
        RSpec::Canonical {} => match expr {
            BuilderExpr::Double { of } => {
                let k = build_catalog(field, of)?;
                Ok(drinfeld_double(&k)?.r().clone())
            }
            _ => Err(Error::Usage("\"canonical\" R needs a double object".into())),
        },
        RSpec::Componentwise { left, right } => match expr {
            BuilderExpr::Tensor { left: le, right: re } => {
                let r1 = resolve_r(field, le, left)?;
                let r2 = resolve_r(field, re, right)?;
                Ok(componentwise_r(field, &r1, &r2))
            }
            _ => Err(Error::Usage("\"componentwise\" R needs a tensor object".into())),
        },
    }
}

pub fn resolve_pi(
    field: &Field,
    expr: &BuilderExpr,
    host: &Arc<HopfAlgebra>,
    pi: &PiSpec,
) -> hopfkit_core::Result<HopfMorphism> {
    match pi {
        PiSpec::TensorFactor { side } => {
            let BuilderExpr::Tensor { left, right } = expr else {
                return Err(Error::Usage("\"tensor_factor\" projection needs a tensor object".into()));
            };
            let a = build_catalog(field, left)?;
            let b = build_catalog(field, right)?;
            let (da, db) = (a.dim(), b.dim());
            let (target, mut m) = match side {
                Side::Left => (a.clone(), Matrix::zeros(field, da, host.dim())),
                Side::Right => (b.clone(), Matrix::zeros(field, db, host.dim())),
            };
            for i in 0..da {
                for j in 0..db {
                    let col = i * db + j;
                    match side {
                        Side::Left => m.set(i, col, b.counit()[j].clone()),
                        Side::Right => m.set(j, col, a.counit()[i].clone()),
                    }
                }
            }
            Ok(HopfMorphism::new(host.clone(), Arc::new(target), m))
        }
        PiSpec::Matrix { target, entries } => {
            let k = build_catalog(field, target)?;
            let mut m = Matrix::zeros(field, k.dim(), host.dim());
            for (r, c, v) in entries {
                if *r >= k.dim() || *c >= host.dim() {
                    return Err(Error::Usage(format!("projection entry ({r}, {c}) out of range")));
                }
                m.set(*r, *c, field.parse(v)?);
            }
            Ok(HopfMorphism::new(host.clone(), Arc::new(k), m))
        }
    }
}

/// Canonical structure data used for hashing: the raw form without a name.
pub fn canonical_raw(h: &HopfAlgebra) -> RawStructure {
    let mut raw = hopfkit_core::serial::hopf_to_raw(h);
    raw.name = None;
    raw
}
