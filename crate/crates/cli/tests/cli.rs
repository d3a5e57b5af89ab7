use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use sha2::{Digest, Sha256};

use hopfkit_core::hopf::{build_catalog, BuilderExpr};
use hopfkit_core::kernel::{Field, FieldSpec};
use hopfkit_core::serial::hopf_to_raw;

fn jobs_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../jobs")
}

fn hopfkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hopfkit"))
        .args(args)
        .output()
        .expect("binary runs")
}

/// Runs a verb and returns (exit code, stdout, parsed report).
fn run_job(verb: &[&str], job: &Path, dir: &Path, extra: &[&str]) -> (i32, String, Value, String) {
    let out = dir.join("report.json");
    let mut args: Vec<&str> = verb.to_vec();
    let job = job.to_str().unwrap();
    let out_s = out.to_str().unwrap();
    args.extend(["--in", job, "--out", out_s]);
    args.extend(extra);
    let o = hopfkit(&args);
    let text = std::fs::read_to_string(&out).unwrap_or_default();
    let report = serde_json::from_str(&text).unwrap_or(Value::Null);
    (o.status.code().unwrap(), String::from_utf8(o.stdout).unwrap(), report, text)
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn stderr_of(args: &[&str]) -> (i32, String) {
    let o = hopfkit(args);
    (o.status.code().unwrap(), String::from_utf8(o.stderr).unwrap())
}

#[test]
fn taft_obstruct_end_to_end() {
    let dir = tempfile::tempdir().unwrap();
    let (code, stdout, report, _) = run_job(&["run"], &jobs_dir().join("taft3_obstruct.json"), dir.path(), &[]);
    assert_eq!(code, 0, "{stdout}");
    assert!(stdout.contains("task.2.obstruct: no_qt\n"));
    assert_eq!(report["field"], serde_json::json!({"kind": "gfp", "p": 7}));
    let ob = &report["tasks"][2];
    assert_eq!(ob["clause"], "no_qt");
    let mut values: Vec<String> = ob["pairings"]
        .as_array()
        .unwrap()
        .iter()
        .map(|p| {
            assert_eq!(p["prime"], 3);
            p["value"].as_str().unwrap().to_string()
        })
        .collect();
    values.sort();
    // Group-likes a, a² against characters a ↦ 2, a ↦ 4 of order 3 in GF(7).
    assert_eq!(values, ["2", "2", "4", "4"]);
    assert_eq!(ob["recheck"], true);
}

#[test]
fn report_embeds_structure_hash() {
    let dir = tempfile::tempdir().unwrap();
    let (_, _, report, _) = run_job(&["verify"], &jobs_dir().join("taft3_obstruct.json"), dir.path(), &[]);
    let field = Field::new(FieldSpec::PrimeField { p: 7 }).unwrap();
    let expr: BuilderExpr = serde_json::from_str(r#"{"builder":"taft","p":3,"omega":"2"}"#).unwrap();
    let mut raw = hopf_to_raw(&build_catalog(&field, &expr).unwrap());
    raw.name = None;
    let want = hex::encode(Sha256::digest(serde_json::to_string(&raw).unwrap().as_bytes()));
    assert_eq!(report["object"]["structure_hash"], want.as_str());
    assert_eq!(report["object"]["dim"], 9);
}

#[test]
fn sweedler_split_certificate_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let (code, stdout, report, _) = run_job(&["run"], &jobs_dir().join("sweedler_z2_split.json"), dir.path(), &[]);
    assert_eq!(code, 0, "{stdout}");
    let split = &report["tasks"][2];
    assert_eq!(split["verdict"], "pass");
    assert_eq!(split["path"], "full_rank");
    assert_eq!(split["k1_dim"], 4);
    assert_eq!(split["k2_dim"], 2);
    let cert = &split["certificate"];
    let checks = cert["checks"].as_array().unwrap();
    for name in ["monodromy_trivial", "dimension", "f_bijective", "r_transport", "twist_cocycle"] {
        let c = checks.iter().find(|c| c["name"] == name).unwrap_or_else(|| panic!("{name}"));
        assert_eq!(c["pass"], true, "{name}");
    }

    let saved = dir.path().join("report.json");
    let o = hopfkit(&["check-cert", "--in", saved.to_str().unwrap()]);
    let stdout = String::from_utf8(o.stdout).unwrap();
    assert_eq!(o.status.code(), Some(0), "{stdout}");
    assert!(stdout.contains("task.0.check_cert: pass\n"));
    assert!(stdout.contains("task.0.check_cert.matches_recorded: true\n"));
}

#[test]
fn corrupted_certificate_fails_check() {
    let dir = tempfile::tempdir().unwrap();
    let (_, _, report, _) = run_job(&["run"], &jobs_dir().join("sweedler_z2_split.json"), dir.path(), &[]);
    let mut cert = report["tasks"][2]["certificate"].clone();
    // Change the first coefficient of J.
    let slot = &mut cert["j"]["terms"][0][1];
    let replacement = if slot == "5" { "7" } else { "5" };
    *slot = Value::String(replacement.into());
    let p = write(dir.path(), "bad.json", &cert.to_string());
    let o = hopfkit(&["check-cert", "--in", p.to_str().unwrap()]);
    let stdout = String::from_utf8(o.stdout).unwrap();
    assert_eq!(o.status.code(), Some(1), "{stdout} {}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout.contains("task.0.check_cert: fail\n"));
}

#[test]
fn double_job_embeds_certificate() {
    let dir = tempfile::tempdir().unwrap();
    let (code, stdout, report, _) = run_job(&["run"], &jobs_dir().join("double_kz2.json"), dir.path(), &[]);
    assert_eq!(code, 0, "{stdout}");
    let d = &report["tasks"][2];
    assert_eq!(d["path"], "double");
    assert_eq!(d["k1_dim"], 4);
    assert_eq!(d["k2_dim"], 4);
    assert_eq!(d["certificate"]["host"]["dim"], 16);
    let checks = d["checks"].as_array().unwrap();
    let c = checks.iter().find(|c| c["name"] == "double_twist").unwrap();
    assert_eq!(c["pass"], true);
}

#[test]
fn reports_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let job = jobs_dir().join("sweedler_z2_split.json");
    let (_, out_a, _, a) = run_job(&["run"], &job, dir.path(), &["--jobs", "1"]);
    let (_, out_b, _, b) = run_job(&["run"], &job, dir.path(), &["--jobs", "4"]);
    let (_, out_c, _, c) = run_job(&["run"], &job, dir.path(), &[]);
    assert!(!a.is_empty());
    assert_eq!(a, b);
    assert_eq!(a, c);
    assert_eq!(out_a, out_b);
    assert_eq!(out_a, out_c);
}

#[test]
fn seeded_spot_checks_are_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let job = jobs_dir().join("taft3_obstruct.json");
    let (code, _, r1, t1) = run_job(&["verify"], &job, dir.path(), &["--seed", "7"]);
    let (_, _, _, t2) = run_job(&["verify"], &job, dir.path(), &["--seed", "7"]);
    assert_eq!(code, 0);
    assert_eq!(t1, t2);
    assert_eq!(r1["seed"], 7);
    let names: Vec<&str> = r1["tasks"][0]["checks"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["name"].as_str().unwrap())
        .collect();
    assert!(names.contains(&"spot_antipode"));
}

#[test]
fn input_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let missing = write(
        dir.path(),
        "missing.json",
        r#"{"field":{"kind":"gfp","p":7},"object":{"builder":"taft","p":3,"omega":"2"}}"#,
    );
    let (code, err) = stderr_of(&["run", "--in", missing.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("missing field `tasks`"), "{err}");
    assert!(err.contains("line 1, column"), "{err}");

    let omega = write(
        dir.path(),
        "omega.json",
        "{\"field\":{\"kind\":\"gfp\",\"p\":7},\n\"object\":{\"builder\":\"taft\",\"p\":3,\"omega\":\"3\"},\n\"tasks\":[\"obstruct\"]}",
    );
    let (code, err) = stderr_of(&["run", "--in", omega.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("omega must have multiplicative order p"), "{err}");
    assert!(err.contains("line 2"), "{err}");

    let unknown = write(
        dir.path(),
        "unknown.json",
        r#"{"field":{"kind":"rationals"},"object":{"builder":"sweedler"},"tasks":["verify"],"colour":1}"#,
    );
    let (code, err) = stderr_of(&["run", "--in", unknown.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("unknown field `colour`"), "{err}");
}

#[test]
fn unmet_hypothesis_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let (code, stdout, report, _) = run_job(
        &["split", "--path", "factorizable"],
        &jobs_dir().join("sweedler_z2_split.json"),
        dir.path(),
        &[],
    );
    assert_eq!(code, 1, "{stdout}");
    assert_eq!(report["tasks"][0]["verdict"], "fail");
    assert!(report["tasks"][0]["error"].as_str().unwrap().contains("not factorizable"));
}

#[test]
fn broken_structure_skips_dependent_tasks() {
    let dir = tempfile::tempdir().unwrap();
    // kZ2 with Δ(g) = g ⊗ 1: not multiplicative.
    let job = write(
        dir.path(),
        "bad.json",
        r#"{"field":{"kind":"rationals"},
            "object":{"builder":"raw","dim":2,
              "mul":[[0,0,0,"1"],[0,1,1,"1"],[1,0,1,"1"],[1,1,0,"1"]],
              "unit":["1","0"],
              "comul":[[0,0,0,"1"],[1,1,0,"1"]],
              "counit":["1","1"]},
            "tasks":["verify","obstruct"]}"#,
    );
    let (code, stdout, report, _) = run_job(&["run"], &job, dir.path(), &[]);
    assert_eq!(code, 1, "{stdout}");
    assert_eq!(report["tasks"][0]["verdict"], "fail");
    assert_eq!(report["tasks"][1]["verdict"], "skipped");
}

#[test]
fn inline_object_and_field() {
    let o = hopfkit(&[
        "obstruct",
        "--field",
        "cyclotomic:3",
        "--object",
        r#"{"builder":"taft","p":3}"#,
    ]);
    let stdout = String::from_utf8(o.stdout).unwrap();
    assert_eq!(o.status.code(), Some(0), "{stdout}");
    assert!(stdout.contains("task.0.obstruct: no_qt\n"), "{stdout}");
}
