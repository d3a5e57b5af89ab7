use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use hopfkit_cli::{
    certificate_job, execute, parse_jobspec, Diagnostic, ExecOptions, ExitStatus, JobSpec, Outcome, PathArg, Prepared,
    QtTask, Task, TaskEntry, SCHEMA_VERSION,
};
use hopfkit_core::kernel::FieldSpec;

#[derive(Parser)]
#[command(name = "hopfkit", version, about = "Exact checks and splittings for quasitriangular Hopf algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Field override: rationals, gfp:P or cyclotomic:N
    #[arg(long, global = true)]
    field: Option<String>,

    /// Job file (or certificate/report for check-cert); `-` reads stdin
    #[arg(long = "in", global = true, value_name = "FILE")]
    input: Option<PathBuf>,

    /// Write the JSON report here
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,

    /// Seed for spot checks on random elements during verify
    #[arg(long, global = true)]
    seed: Option<u64>,

    /// Worker threads; 1 runs sequentially. Results do not depend on it.
    #[arg(long, global = true)]
    jobs: Option<usize>,

    /// Inline builder expression (JSON) used instead of a job file
    #[arg(long, global = true, value_name = "JSON")]
    object: Option<String>,

    /// Inline R-matrix spec (JSON), overriding the job's "r"
    #[arg(long, global = true, value_name = "JSON")]
    r: Option<String>,

    /// Record per-task wall-clock time (makes reports run-dependent)
    #[arg(long, global = true)]
    timings: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Run every task listed in the job file
    Run,
    /// Check the Hopf algebra axioms
    Verify,
    /// Group-likes, characters, center and other invariants
    Analyze,
    /// Verify the R-matrix and derived identities
    Qt {
        /// Ribbon candidate as a JSON array of scalar strings
        #[arg(long, value_name = "JSON")]
        theta: Option<String>,
    },
    /// Split along a quotient map
    Split {
        #[arg(long, value_enum, default_value = "auto")]
        path: CliPath,
        /// Projection spec (JSON), overriding the job's split task
        #[arg(long, value_name = "JSON")]
        pi: Option<String>,
    },
    /// Evaluate the group-like obstruction to quasitriangularity
    Obstruct,
    /// Split the double of the object along its canonical projection
    Double,
    /// Re-verify certificates from a certificate or report file
    CheckCert,
}

#[derive(Clone, Copy, ValueEnum)]
enum CliPath {
    Factorizable,
    Fullrank,
    Auto,
}

impl From<CliPath> for PathArg {
    fn from(p: CliPath) -> PathArg {
        match p {
            CliPath::Factorizable => PathArg::Factorizable,
            CliPath::Fullrank => PathArg::Fullrank,
            CliPath::Auto => PathArg::Auto,
        }
    }
}

enum Failure {
    Input(String),
    Internal(String),
}

fn input_diag(what: &str, d: Diagnostic) -> Failure {
    Failure::Input(format!("{what}: {d}"))
}

fn read_input(path: &Path) -> Result<String, Failure> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::Input(format!("stdin: {e}")))?;
        return Ok(s);
    }
    std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn parse_json<T: serde::de::DeserializeOwned>(flag: &str, text: &str) -> Result<T, Failure> {
    serde_json::from_str(text).map_err(|e| Failure::Input(format!("--{flag}: {e}")))
}

fn verb_tasks(cli: &Cli, job: Option<&JobSpec>) -> Result<Option<Vec<TaskEntry>>, Failure> {
    let one = |t: Task| Ok(Some(vec![TaskEntry::Full(t)]));
    match &cli.command {
        Command::Run => Ok(None),
        Command::Verify => one(Task::Verify {}),
        Command::Analyze => one(Task::Analyze {}),
        Command::Obstruct => one(Task::Obstruct {}),
        Command::Double => one(Task::Double {}),
        Command::CheckCert => unreachable!("handled separately"),
        Command::Qt { theta } => {
            let from_job = job.and_then(|j| {
                j.tasks.iter().find_map(|t| match t.task() {
                    Task::Qt(q) => Some(q),
                    _ => None,
                })
            });
            let mut q = from_job.unwrap_or_default();
            if let Some(t) = theta {
                q = QtTask {
                    theta: Some(parse_json("theta", t)?),
                };
            }
            one(Task::Qt(q))
        }
        Command::Split { path, pi } => {
            let from_job = job.and_then(|j| {
                j.tasks.iter().find_map(|t| match t.task() {
                    Task::Split(s) => Some(s),
                    _ => None,
                })
            });
            let mut s = match (pi, from_job) {
                (Some(p), _) => hopfkit_cli::SplitTask {
                    pi: parse_json("pi", p)?,
                    path: PathArg::Auto,
                },
                (None, Some(s)) => s,
                (None, None) => {
                    return Err(Failure::Input(
                        "split needs a projection: give --pi or a split task in the job".into(),
                    ))
                }
            };
            s.path = (*path).into();
            one(Task::Split(s))
        }
    }
}

fn load_job(cli: &Cli) -> Result<(JobSpec, Option<String>), Failure> {
    if let Command::CheckCert = cli.command {
        let path = cli
            .input
            .as_ref()
            .ok_or_else(|| Failure::Input("check-cert needs --in".into()))?;
        let text = read_input(path)?;
        let job = certificate_job(&text).map_err(|d| input_diag(&path.display().to_string(), d))?;
        return Ok((job, None));
    }
    let (mut job, text, origin) = match (&cli.input, &cli.object) {
        (Some(path), _) => {
            let text = read_input(path)?;
            let job = parse_jobspec(&text).map_err(|d| input_diag(&path.display().to_string(), d))?;
            (job, Some(text), path.display().to_string())
        }
        (None, Some(obj)) => {
            let field = cli
                .field
                .as_ref()
                .ok_or_else(|| Failure::Input("--object needs --field".into()))?;
            let field: FieldSpec = field.parse().map_err(|e| Failure::Input(format!("--field: {e}")))?;
            let job = JobSpec {
                schema_version: SCHEMA_VERSION,
                field,
                object: parse_json("object", obj)?,
                r: None,
                tasks: Vec::new(),
            };
            (job, None, "command line".to_string())
        }
        (None, None) => return Err(Failure::Input("give a job file with --in or an object with --object".into())),
    };
    let mut changed = text.is_none();
    if let Some(f) = &cli.field {
        job.field = f.parse().map_err(|e| Failure::Input(format!("--field: {e}")))?;
        changed = true;
    }
    if let Some(r) = &cli.r {
        job.r = Some(parse_json("r", r)?);
        changed = true;
    }
    if let Some(tasks) = verb_tasks(cli, Some(&job))? {
        job.tasks = tasks;
        changed = true;
    }
    if changed {
        // Re-validate the edited job through the same schema checks.
        let edited = serde_json::to_string_pretty(&job).map_err(|e| Failure::Internal(e.to_string()))?;
        job = parse_jobspec(&edited).map_err(|d| Failure::Input(format!("{origin} (after overrides): {}", d.message)))?;
    }
    Ok((job, text))
}

fn run_with_jobs(jobs: Option<usize>, f: impl FnOnce() -> Outcome + Send) -> Result<Outcome, Failure> {
    match jobs {
        Some(1) => Ok(hopfkit_core::par::sequential(f)),
        Some(n) if n > 1 => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .map_err(|e| Failure::Internal(format!("thread pool: {e}")))?;
            Ok(pool.install(f))
        }
        _ => Ok(f()),
    }
}

fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    std::fs::write(path, text).map_err(|e| Failure::Internal(format!("writing {}: {e}", path.display())))
}

fn run(cli: &Cli) -> Result<ExitStatus, Failure> {
    let (job, text) = load_job(cli)?;
    let prep = Prepared::new(job, text.as_deref()).map_err(|d| input_diag("object", d))?;
    let opts = ExecOptions {
        seed: cli.seed,
        timings: cli.timings,
    };
    let outcome = std::panic::catch_unwind(std::panic::AssertUnwindSafe(|| {
        run_with_jobs(cli.jobs, || execute(&prep, &opts))
    }))
    .map_err(|p| {
        let msg = p
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_else(|| "panic".into());
        Failure::Internal(format!("cli::execute: {msg}"))
    })??;
    print!("{}", outcome.summary_text());
    let json = outcome.report_json();
    if let Some(out) = &cli.out {
        write_file(out, &json)?;
    }
    for sink in &outcome.sinks {
        if let Some(p) = &sink.json {
            write_file(Path::new(p), &json)?;
        }
        if let Some(p) = &sink.text {
            write_file(Path::new(p), &outcome.summary_text())?;
        }
    }
    Ok(outcome.exit)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let status = match run(&cli) {
        Ok(s) => s,
        Err(Failure::Input(m)) => {
            eprintln!("error: {m}");
            ExitStatus::InputError
        }
        Err(Failure::Internal(m)) => {
            eprintln!("internal error: {m}");
            ExitStatus::InternalError
        }
    };
    ExitCode::from(status.code() as u8)
}
