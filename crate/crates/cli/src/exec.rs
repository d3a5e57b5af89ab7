//! Task dispatch and report assembly.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

use hopfkit_core::algebra::characters;
use hopfkit_core::hopf::{grouplikes, signature, verify_hopf, HopfAlgebra};
use hopfkit_core::kernel::Scalar;
use hopfkit_core::qt::{
    check_underline_pi, lr_maps, phi_maps, ribbon_check, transmute, verify_rmatrix, yang_baxter_holds, QTStructure,
};
use hopfkit_core::report::{Check, Report};
use hopfkit_core::serial::CertificateData;
use hopfkit_core::splitting::{double_splitting, obstruction_check, split, verify_certificate, Clause, SplitCertificate};
use hopfkit_core::Error;

use crate::job::{canonical_raw, CheckCertTask, Prepared, QtTask, ReportSink, SplitTask, Task};

#[derive(Clone, Debug, Default)]
pub struct ExecOptions {
    /// Enables seeded spot checks on random elements in `verify`.
    pub seed: Option<u64>,
    /// Records wall-clock time per task. Off by default so reports stay byte-identical.
    pub timings: bool,
}

/// Process exit status, ordered by severity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum ExitStatus {
    Ok = 0,
    CheckFailure = 1,
    InputError = 2,
    InternalError = 3,
}

impl ExitStatus {
    pub fn code(self) -> i32 {
        self as i32
    }

    pub fn as_str(self) -> &'static str {
        match self {
            ExitStatus::Ok => "ok",
            ExitStatus::CheckFailure => "check_failure",
            ExitStatus::InputError => "input_error",
            ExitStatus::InternalError => "internal_error",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Status {
    Pass,
    /// A definite answer that is not a pass/fail, e.g. an obstruction clause.
    Verdict,
    Fail,
    Skipped,
    Inconclusive,
    Input,
    Internal,
}

impl Status {
    fn exit(self) -> ExitStatus {
        match self {
            Status::Pass | Status::Verdict => ExitStatus::Ok,
            Status::Fail | Status::Skipped | Status::Inconclusive => ExitStatus::CheckFailure,
            Status::Input => ExitStatus::InputError,
            Status::Internal => ExitStatus::InternalError,
        }
    }
}

struct TaskResult {
    status: Status,
    verdict: String,
    body: Map<String, Value>,
    summary: Vec<(String, String)>,
}

impl TaskResult {
    fn new(status: Status, verdict: impl Into<String>) -> TaskResult {
        TaskResult {
            status,
            verdict: verdict.into(),
            body: Map::new(),
            summary: Vec::new(),
        }
    }

    fn from_report(report: &Report) -> TaskResult {
        let mut t = if report.passed() {
            TaskResult::new(Status::Pass, "pass")
        } else {
            TaskResult::new(Status::Fail, "fail")
        };
        t.body.insert("checks".into(), checks_json(report));
        if let Some(c) = report.first_failure() {
            t.summary.push(("first_failure".into(), c.to_string()));
        }
        t
    }

    fn skipped(reason: impl Into<String>) -> TaskResult {
        let mut t = TaskResult::new(Status::Skipped, "skipped");
        t.body.insert("reason".into(), Value::String(reason.into()));
        t
    }

    fn with(mut self, key: &str, value: Value) -> TaskResult {
        self.body.insert(key.into(), value);
        self
    }

    fn note(mut self, key: &str, value: impl ToString) -> TaskResult {
        self.summary.push((key.into(), value.to_string()));
        self
    }
}

/// Maps a library error to a task result. Unmet hypotheses and singular
/// inputs are verdicts about the object; malformed input is an input error.
fn error_result(op: &'static str, e: Error) -> TaskResult {
    let status = match e.root() {
        Error::Hypothesis(_) | Error::NotInvertible(_) | Error::NoAntipode | Error::NonInvertibleAntipode => Status::Fail,
        Error::Parse(_) | Error::Usage(_) | Error::Dimension(_) | Error::Builder { .. } | Error::InvalidField(_) => {
            Status::Input
        }
        _ => Status::Internal,
    };
    let verdict = match status {
        Status::Fail => "fail",
        Status::Input => "input_error",
        _ => "internal_error",
    };
    let message = e.context(op).to_string();
    TaskResult::new(status, verdict)
        .with("error", Value::String(message.clone()))
        .note("error", message)
}

fn checks_json(report: &Report) -> Value {
    serde_json::to_value(report).expect("reports serialize")
}

fn scalars(v: &[Scalar]) -> Value {
    Value::Array(v.iter().map(|c| Value::String(c.to_string())).collect())
}

fn scalar_rows(rows: &[Vec<Scalar>]) -> Value {
    Value::Array(rows.iter().map(|r| scalars(r)).collect())
}

/// SHA-256 of the compact JSON of the unnamed raw structure constants.
pub fn structure_hash(h: &HopfAlgebra) -> String {
    let text = serde_json::to_string(&canonical_raw(h)).expect("raw structures serialize");
    hex::encode(Sha256::digest(text.as_bytes()))
}

/// The finished run.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub report: Value,
    pub summary: Vec<(String, String)>,
    pub exit: ExitStatus,
    pub sinks: Vec<ReportSink>,
}

impl Outcome {
    /// Pretty JSON with a trailing newline; keys are sorted.
    pub fn report_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.report).expect("reports serialize");
        s.push('\n');
        s
    }

    pub fn summary_text(&self) -> String {
        self.summary.iter().map(|(k, v)| format!("{k}: {v}\n")).collect()
    }
}

struct State<'a> {
    prep: &'a Prepared,
    opts: &'a ExecOptions,
    hopf_failed: bool,
    qt: Option<std::result::Result<QTStructure, String>>,
}

impl State<'_> {
    fn qt(&mut self) -> std::result::Result<&QTStructure, TaskResult> {
        if self.qt.is_none() {
            let built = self
                .prep
                .r_tensor()
                .and_then(|r| verify_rmatrix(&self.prep.object, &r))
                .map_err(|e| e.context("qt::verify_rmatrix").to_string());
            self.qt = Some(built);
        }
        match self.qt.as_ref().expect("just set") {
            Ok(q) => Ok(q),
            Err(msg) => Err(TaskResult::skipped(format!("R-matrix unavailable: {msg}"))),
        }
    }

    fn verified_qt(&mut self) -> std::result::Result<&QTStructure, TaskResult> {
        let q = self.qt()?;
        if !q.verified {
            return Err(TaskResult::skipped(format!(
                "R-matrix failed: {}",
                q.report.failed_names().join(", ")
            )));
        }
        Ok(q)
    }

    fn run(&mut self, task: &Task) -> TaskResult {
        let needs_hopf = !matches!(task, Task::CheckCert(_) | Task::Report(_) | Task::Verify {});
        if needs_hopf && self.hopf_failed {
            return TaskResult::skipped("the object failed verification");
        }
        match task {
            Task::Verify {} => self.verify(),
            Task::Analyze {} => analyze(&self.prep.object).unwrap_or_else(|e| error_result("hopf::signature", e)),
            Task::Qt(t) => self.qt_task(t),
            Task::Split(t) => self.split_task(t),
            Task::Obstruct {} => obstruct(&self.prep.object),
            Task::Double {} => match self.verified_qt() {
                Err(t) => t,
                Ok(q) => match double_splitting(q) {
                    Ok(cert) => certificate_result(&cert),
                    Err(e) => error_result("splitting::double_splitting", e),
                },
            },
            Task::CheckCert(t) => check_cert(t),
            Task::Report(sink) => {
                let mut t = TaskResult::new(Status::Pass, "pass");
                if let Some(p) = &sink.json {
                    t = t.with("json", Value::String(p.clone()));
                }
                if let Some(p) = &sink.text {
                    t = t.with("text", Value::String(p.clone()));
                }
                t
            }
        }
    }

    fn verify(&mut self) -> TaskResult {
        let h = &self.prep.object;
        let mut report = verify_hopf(h);
        if let Some(seed) = self.opts.seed {
            report.extend(spot_checks(h, seed, SPOT_SAMPLES));
        }
        if !report.passed() {
            self.hopf_failed = true;
        }
        let mut t = TaskResult::from_report(&report).note("checks", report.checks.len());
        if let Some(seed) = self.opts.seed {
            t = t.with("spot_check_seed", json!(seed)).with("spot_check_samples", json!(SPOT_SAMPLES));
        }
        t
    }

    fn qt_task(&mut self, task: &QtTask) -> TaskResult {
        let q = match self.qt() {
            Ok(q) => q.clone(),
            Err(t) => {
                let mut t = t;
                t.status = Status::Fail;
                t.verdict = "fail".into();
                return t;
            }
        };
        let mut report = q.report.clone();
        if !q.verified {
            return TaskResult::from_report(&report)
                .with("verified", json!(false))
                .note("verified", false);
        }
        report.push(Check::from_bool("yang_baxter", yang_baxter_holds(&q), "R12 R13 R23 ≠ R23 R13 R12"));
        let extra = (|| -> hopfkit_core::Result<(Value, Report)> {
            let mut more = Report::new();
            let phi = phi_maps(&q, None)?;
            more.push(Check::from_bool(
                "phi_rank_symmetric",
                phi.rank == phi.rank_tau,
                format!("rank Φ = {}, rank Φ_τ = {}", phi.rank, phi.rank_tau),
            ));
            for c in &phi.coideal.checks {
                more.push(Check {
                    name: format!("phi_image_{}", c.name),
                    ..c.clone()
                });
            }
            let lr = lr_maps(&q, None)?;
            more.push(Check::from_witness("lr_commutation", lr.lem_comm.clone()));
            more.push(Check::from_bool("l_algebra_map", lr.algebra_map, "l is not an algebra map"));
            more.push(Check::from_bool(
                "l_anti_coalgebra_map",
                lr.anti_coalgebra_map,
                "l is not an anti-coalgebra map",
            ));
            let braided = transmute(&q, None)?;
            more.extend(braided.report.clone());
            if let Some(theta) = &task.theta {
                let f = q.hopf().field();
                if theta.len() != q.hopf().dim() {
                    return Err(Error::Usage(format!(
                        "theta has {} coordinates for dimension {}",
                        theta.len(),
                        q.hopf().dim()
                    )));
                }
                let v = theta.iter().map(|s| f.parse(s)).collect::<hopfkit_core::Result<Vec<_>>>()?;
                for c in ribbon_check(&q, &v).checks {
                    more.push(Check {
                        name: format!("ribbon_{}", c.name),
                        ..c
                    });
                }
            }
            let props = json!({
                "triangular": q.triangular,
                "factorizable": q.factorizable,
                "full_rank": q.full_rank,
                "phi_rank": phi.rank,
                "phi_tau_rank": phi.rank_tau,
                "l_image_dim": lr.l_image.dim(),
                "r_image_dim": lr.r_image.dim(),
            });
            Ok((props, more))
        })();
        let (props, more) = match extra {
            Ok(x) => x,
            Err(e) => return error_result("qt::analysis", e),
        };
        report.extend(more);
        TaskResult::from_report(&report)
            .with("verified", json!(true))
            .with("properties", props.clone())
            .note("verified", true)
            .note("triangular", q.triangular)
            .note("factorizable", q.factorizable)
            .note("full_rank", q.full_rank)
    }

    fn split_task(&mut self, task: &SplitTask) -> TaskResult {
        let pi = match self.prep.projection(&task.pi) {
            Ok(p) => p,
            Err(e) => return error_result("cli::projection", e),
        };
        let q = match self.verified_qt() {
            Ok(q) => q,
            Err(t) => return t,
        };
        let cert = match split(q, &pi, task.path.choice()) {
            Ok(c) => c,
            Err(e) => return error_result("splitting::split", e).with("path_requested", json!(task.path.as_str())),
        };
        let underline = match check_underline_pi(q, &pi) {
            Ok(r) => r,
            Err(e) => return error_result("qt::check_underline_pi", e),
        };
        let mut t = certificate_result(&cert);
        if !underline.passed() {
            t.status = Status::Fail;
            t.verdict = "fail".into();
        }
        t.with("path_requested", json!(task.path.as_str()))
            .with("underline_pi", checks_json(&underline))
            .note("underline_pi", if underline.passed() { "pass" } else { "fail" })
    }
}

const SPOT_SAMPLES: usize = 8;

fn random_element(h: &HopfAlgebra, rng: &mut ChaCha8Rng) -> Vec<Scalar> {
    let f = h.field();
    (0..h.dim()).map(|_| f.from_i64(rng.random_range(-3i64..=3))).collect()
}

/// Axioms evaluated on seeded random elements instead of basis vectors.
pub fn spot_checks(h: &HopfAlgebra, seed: u64, samples: usize) -> Report {
    let f = h.field();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut first: [Option<usize>; 5] = [None; 5];
    for k in 0..samples {
        let x = random_element(h, &mut rng);
        let y = random_element(h, &mut rng);
        let z = random_element(h, &mut rng);
        let dx = h.coproduct(&x);
        let fails = [
            h.mul(&h.mul(&x, &y), &z) != h.mul(&x, &h.mul(&y, &z)),
            h.delta_leg(&dx, 0) != h.delta_leg(&dx, 1),
            h.coproduct(&h.mul(&x, &y)) != h.tmul(&dx, &h.coproduct(&y)),
            h.eps_leg(&dx, 0).to_vector(f) != x || h.eps_leg(&dx, 1).to_vector(f) != x,
            h.has_antipode() && {
                let ex = h.eps(&x);
                let want: Vec<Scalar> = h.unit().iter().map(|u| f.mul(u, &ex)).collect();
                h.mul_legs(&h.antipode_leg(&dx, 0), 0).to_vector(f) != want
                    || h.mul_legs(&h.antipode_leg(&dx, 1), 0).to_vector(f) != want
            },
        ];
        for (slot, bad) in first.iter_mut().zip(fails) {
            if bad && slot.is_none() {
                *slot = Some(k);
            }
        }
    }
    let names = ["spot_associativity", "spot_coassociativity", "spot_multiplicativity", "spot_counit", "spot_antipode"];
    let mut report = Report::new();
    for (name, hit) in names.iter().zip(first) {
        report.push(match hit {
            None => Check::pass(*name),
            Some(k) => Check::fail(*name, Some(vec![k]), format!("random sample {k} (seed {seed})")),
        });
    }
    report
}

fn analyze(h: &HopfAlgebra) -> hopfkit_core::Result<TaskResult> {
    let sig = signature(h)?;
    let g = grouplikes(h)?;
    let chars = characters(h.algebra())?;
    let body = json!({
        "dim": sig.dim,
        "commutative": sig.commutative,
        "cocommutative": sig.cocommutative,
        "center_dim": sig.center_dim,
        "dual_center_dim": sig.dual_center_dim,
        "grouplike_orders": sig.grouplike_orders,
        "dual_grouplike_orders": sig.dual_grouplike_orders,
        "central_grouplikes": sig.central_grouplikes,
        "grouplikes": scalar_rows(&g.elements),
        "grouplike_table": g.table,
        "grouplikes_complete": g.complete,
        "characters_complete": chars.complete,
        "has_antipode": h.has_antipode(),
    });
    let complete = g.complete && chars.complete;
    let mut t = if complete {
        TaskResult::new(Status::Pass, "pass")
    } else {
        TaskResult::new(Status::Inconclusive, "inconclusive")
    };
    t = t.with("signature", body);
    if let Some(o) = g.offending.or(chars.offending) {
        t = t.with("unsplit_factor", Value::String(o));
    }
    Ok(t.note("grouplikes", g.elements.len())
        .note("dual_grouplikes", sig.dual_grouplike_orders.len())
        .note("center_dim", sig.center_dim)
        .note("commutative", sig.commutative)
        .note("cocommutative", sig.cocommutative))
}

fn obstruct(h: &HopfAlgebra) -> TaskResult {
    let rep = match obstruction_check(h) {
        Ok(r) => r,
        Err(e) => return error_result("splitting::obstruction_check", e),
    };
    let recheck = rep.recheck(h);
    let (status, verdict) = match rep.clause {
        Clause::Inconclusive => (Status::Inconclusive, rep.clause.as_str()),
        _ if !recheck => (Status::Fail, "fail"),
        _ => (Status::Verdict, rep.clause.as_str()),
    };
    let pairings: Vec<Value> = rep
        .pairings
        .iter()
        .map(|p| json!({"prime": p.prime, "grouplike": p.g, "character": p.alpha, "value": p.value.to_string()}))
        .collect();
    let p_squared: Vec<Value> = rep
        .p_squared
        .iter()
        .map(|(p, d)| json!({"prime": p, "divides_dim": d}))
        .collect();
    let mut values: Vec<String> = rep.pairings.iter().map(|p| p.value.to_string()).collect();
    values.sort();
    TaskResult::new(status, verdict)
        .with("clause", json!(rep.clause.as_str()))
        .with("detail", json!(rep.detail))
        .with("grouplikes", scalar_rows(&rep.grouplikes))
        .with("characters", scalar_rows(&rep.characters))
        .with("central_grouplikes", json!(rep.central_grouplikes))
        .with("central_characters", json!(rep.central_characters))
        .with("pairings", Value::Array(pairings))
        .with("p_squared", Value::Array(p_squared))
        .with("recheck", json!(recheck))
        .note("clause", rep.clause.as_str())
        .note("pairing_values", format!("[{}]", values.join(", ")))
        .note("recheck", recheck)
}

fn certificate_result(cert: &SplitCertificate) -> TaskResult {
    let data = CertificateData::from_certificate(cert);
    TaskResult::from_report(&cert.checks)
        .with("path", json!(cert.path.as_str()))
        .with("k1_dim", json!(cert.k1.dim()))
        .with("k2_dim", json!(cert.k2.dim()))
        .with("twist_variant", json!(cert.twist_variant))
        .with("certificate", serde_json::to_value(&data).expect("certificates serialize"))
        .note("path", cert.path.as_str())
        .note("k1_dim", cert.k1.dim())
        .note("k2_dim", cert.k2.dim())
        .note("certificate_checks", cert.checks.checks.len())
}

fn check_cert(task: &CheckCertTask) -> TaskResult {
    let cert = match task.certificate.to_certificate() {
        Ok(c) => c,
        Err(e) => return error_result("serial::to_certificate", e),
    };
    let fresh = verify_certificate(&cert);
    let recorded = task.certificate.checks.passed();
    TaskResult::from_report(&fresh)
        .with("path", json!(cert.path.as_str()))
        .with("recorded_verdict", json!(if recorded { "pass" } else { "fail" }))
        .with("matches_recorded", json!(recorded == fresh.passed()))
        .note("path", cert.path.as_str())
        .note("matches_recorded", recorded == fresh.passed())
}

/// Runs every task in order and assembles the report.
pub fn execute(prep: &Prepared, opts: &ExecOptions) -> Outcome {
    let mut state = State {
        prep,
        opts,
        hopf_failed: false,
        qt: None,
    };
    let field = prep.field.spec().clone();
    let hash = structure_hash(&prep.object);
    let mut summary = vec![
        ("field".to_string(), field.to_string()),
        ("object".to_string(), prep.object.name().to_string()),
        ("dim".to_string(), prep.object.dim().to_string()),
        ("structure_hash".to_string(), hash.clone()),
    ];
    let mut exit = ExitStatus::Ok;
    let mut entries = Vec::new();
    let mut sinks = Vec::new();
    for (n, task) in prep.tasks().iter().enumerate() {
        let start = Instant::now();
        let res = state.run(task);
        let elapsed = start.elapsed();
        if let Task::Report(s) = task {
            sinks.push(s.clone());
        }
        exit = exit.max(res.status.exit());
        let key = format!("task.{n}.{}", task.name());
        summary.push((key.clone(), res.verdict.clone()));
        for (k, v) in &res.summary {
            summary.push((format!("{key}.{k}"), v.clone()));
        }
        let mut body = res.body;
        body.insert("task".into(), json!(task.name()));
        body.insert("verdict".into(), json!(res.verdict));
        if opts.timings {
            body.insert("timing_ms".into(), json!(elapsed.as_millis() as u64));
        }
        entries.push(Value::Object(body));
    }
    summary.push(("status".to_string(), exit.as_str().to_string()));
    summary.push(("exit_code".to_string(), exit.code().to_string()));
    let report = json!({
        "schema_version": crate::job::SCHEMA_VERSION,
        "tool": "hopfkit",
        "tool_version": env!("CARGO_PKG_VERSION"),
        "field": serde_json::to_value(&field).expect("field specs serialize"),
        "object": {
            "label": prep.object.name(),
            "dim": prep.object.dim(),
            "structure_hash": hash,
        },
        "seed": opts.seed,
        "tasks": entries,
        "status": exit.as_str(),
        "exit_code": exit.code(),
    });
    Outcome {
        report,
        summary,
        exit,
        sinks,
    }
}
