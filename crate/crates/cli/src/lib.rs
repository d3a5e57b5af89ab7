//! Batch front end for hopfkit-core: job files in, reports and certificates out.

pub mod exec;
pub mod job;

use serde_json::Value;

use hopfkit_core::hopf::BuilderExpr;
use hopfkit_core::serial::CertificateData;

pub use exec::{execute, spot_checks, structure_hash, ExecOptions, ExitStatus, Outcome};
pub use job::{
    parse_jobspec, resolve_pi, resolve_r, CheckCertTask, Diagnostic, JobSpec, PathArg, PiSpec, Prepared, QtTask,
    RSpec, ReportSink, Side, SplitTask, Task, TaskEntry, SCHEMA_VERSION,
};

fn collect_certificates(v: &Value, out: &mut Vec<Value>) {
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                if k == "certificate" {
                    out.push(x.clone());
                } else {
                    collect_certificates(x, out);
                }
            }
        }
        Value::Array(xs) => xs.iter().for_each(|x| collect_certificates(x, out)),
        _ => {}
    }
}

/// Builds a `check_cert` job from a bare certificate or from a report that
/// embeds certificates under `"certificate"` keys. The job's object is the
/// host of the first certificate.
pub fn certificate_job(text: &str) -> Result<JobSpec, Diagnostic> {
    let value: Value = serde_json::from_str(text).map_err(|e| Diagnostic {
        line: e.line(),
        column: e.column(),
        message: job::serde_message(&e),
    })?;
    let is_bare = value.get("host").is_some() && value.get("path").is_some();
    let raw = if is_bare {
        vec![value]
    } else {
        let mut found = Vec::new();
        collect_certificates(&value, &mut found);
        found
    };
    if raw.is_empty() {
        return Err(Diagnostic {
            line: 1,
            column: 1,
            message: "no certificate found (expected a certificate or a report with \"certificate\" keys)".into(),
        });
    }
    let certs = raw
        .into_iter()
        .map(|v| {
            serde_json::from_value::<CertificateData>(v).map_err(|e| Diagnostic {
                line: 0,
                column: 0,
                message: format!("malformed certificate: {e}"),
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(JobSpec {
        schema_version: SCHEMA_VERSION,
        field: certs[0].field.clone(),
        object: BuilderExpr::Raw(certs[0].host.clone()),
        r: None,
        tasks: certs
            .into_iter()
            .map(|c| TaskEntry::Full(Task::CheckCert(Box::new(CheckCertTask { certificate: c }))))
            .collect(),
    })
}
