//! The `covsum` command line: argument parsing, JSON reports and exit codes.
//!
//! [`run`] does all the work and returns the exit code with the text to
//! print, so the binary stays a two-liner and tests can drive commands
//! in-process.

pub mod generate;
pub mod instances;
pub mod report;
pub mod suite;

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::Value;

use crate::arith::FieldSpec;
use crate::error::{Error, Result};
use crate::residue::{CoverSystem, SystemFile};
use crate::subsetsum::Strategy;

pub use instances::{check_instance, Checked, Theorem};
pub use report::{digest, RunReport, Status};

#[derive(Debug, Parser)]
#[command(name = "covsum", version, about = "Exact verification of subset-sum and zero-sum statements over covering systems")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Covering function, multiplicity, essential classes and dual of a system.
    System {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Check one instance file.
    Verify {
        theorem: Theorem,
        file: PathBuf,
        /// Also run the naive recomputation and require agreement.
        #[arg(long)]
        oracle: bool,
        #[arg(long)]
        json: bool,
    },
    /// Emit a seeded random instance.
    Generate {
        kind: Kind,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Covering multiplicity for `m-cover`.
        #[arg(long, default_value_t = 2)]
        m: u64,
        #[arg(long, default_value_t = 10)]
        max_classes: usize,
        /// Every modulus of an `m-cover` divides this.
        #[arg(long, default_value_t = 24)]
        budget: u64,
        /// Prime for `zero-sum`; field characteristic for `t21-instance` (0 means the rationals).
        #[arg(long)]
        p: Option<u64>,
        /// Exponents `h_t` for `zero-sum`, comma separated.
        #[arg(long, value_delimiter = ',')]
        h: Option<Vec<u32>>,
        /// Number of columns for `zero-sum` when `--h` is absent (all `h_t = 1`).
        #[arg(long, default_value_t = 1)]
        l: usize,
        /// Rows beyond the threshold for `zero-sum`.
        #[arg(long, default_value_t = 0)]
        extra: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Verify every instance of a corpus directory.
    Suite {
        dir: PathBuf,
        #[arg(long)]
        oracle: bool,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    MCover,
    ZeroSum,
    T21Instance,
}

/// Exit code and standard output of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

fn read_json(path: &Path) -> Result<Value> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::parse(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Error::parse(format!("{}: {e}", path.display())))
}

/// A saved report is accepted in place of an instance: its
/// `payload.instance` is replayed.
pub fn unwrap_replay(v: &Value) -> &Value {
    v.get("payload").and_then(|p| p.get("instance")).unwrap_or(v)
}

/// Verifies `input` against `theorem`, optionally cross-checking with the
/// naive path.
pub fn verify_value(theorem: Theorem, input: &Value, oracle: bool) -> RunReport {
    let command = format!("verify {}", theorem.name());
    let instance = unwrap_replay(input);
    let optimized = match check_instance(theorem, instance, Strategy::Optimized) {
        Ok(c) => c,
        Err(e) => return RunReport::failure(&command, Some(instance), &e),
    };
    let mut payload = serde_json::json!({ "instance": instance, "result": optimized.result });
    let mut agrees = true;
    if oracle {
        match check_instance(theorem, instance, Strategy::Naive) {
            Ok(naive) => {
                agrees = naive == optimized;
                if !agrees {
                    payload["naive_result"] = naive.result;
                }
            }
            Err(e) => {
                agrees = false;
                payload["naive_error"] = Value::from(e.to_string());
            }
        }
        payload["oracle_agrees"] = Value::from(agrees);
    }
    let status = if optimized.holds && agrees { Status::Verified } else { Status::Counterexample };
    RunReport { command, digest: digest(instance), status, payload }
}

/// `w_A` over one period, `m(A)`, the essential classes (1-based), the
/// dual system and its multiplicity.
pub fn analyze_system(sys: &CoverSystem) -> Result<Value> {
    let m = sys.covering_multiplicity();
    let essential: Vec<usize> = if m == 0 { vec![] } else { sys.essential_classes(m)?.into_iter().map(|t| t + 1).collect() };
    let dual = sys.dual_system();
    let mut out = serde_json::json!({
        "classes": sys.classes(),
        "period": sys.period(),
        "multiplicity": m,
        "max_coverage": sys.max_coverage(),
        "essential": essential,
        "dual": dual.classes(),
        "dual_multiplicity": dual.covering_multiplicity(),
    });
    if sys.period() <= 10_000 {
        out["coverage"] = Value::from(sys.coverage_table());
    }
    Ok(out)
}

pub fn system_report(input: &Value) -> RunReport {
    let run = || -> Result<Value> {
        let file: SystemFile = serde_json::from_value(input.clone()).map_err(|e| Error::parse(format!("system file: {e}")))?;
        analyze_system(&file.system()?)
    };
    match run() {
        Ok(payload) => RunReport { command: "system".into(), digest: digest(input), status: Status::Verified, payload },
        Err(e) => RunReport::failure("system", Some(input), &e),
    }
}

fn render_report(report: &RunReport, json: bool) -> String {
    if json {
        let mut s = serde_json::to_string_pretty(report).expect("reports serialize");
        s.push('\n');
        return s;
    }
    let status = serde_json::to_value(report.status).expect("status serializes");
    let mut s = format!("{}: {}\n", report.command, status.as_str().unwrap_or_default());
    if !report.digest.is_empty() {
        s.push_str(&format!("digest: {}\n", report.digest));
    }
    let body = report.payload.get("result").unwrap_or(&report.payload);
    s.push_str(&serde_json::to_string_pretty(body).expect("JSON values serialize"));
    s.push('\n');
    s
}

fn report_outcome(report: RunReport, json: bool) -> Outcome {
    Outcome { code: report.exit_code(), stdout: render_report(&report, json), stderr: String::new() }
}

fn error_outcome(command: &str, err: &Error, json: bool) -> Outcome {
    report_outcome(RunReport::failure(command, None, err), json)
}

#[allow(clippy::too_many_arguments)]
fn generate(
    kind: Kind,
    seed: u64,
    m: u64,
    max_classes: usize,
    budget: u64,
    p: Option<u64>,
    h: Option<Vec<u32>>,
    l: usize,
    extra: usize,
) -> Result<Value> {
    let value = match kind {
        Kind::MCover => {
            let sys = generate::m_cover(seed, m, max_classes, budget)?;
            if !sys.is_m_cover(m) {
                return Err(Error::invalid("generated system failed validation"));
            }
            serde_json::to_value(SystemFile { a0: None, classes: sys.classes().to_vec() })
        }
        Kind::ZeroSum => {
            let h = h.unwrap_or_else(|| vec![1; l.max(1)]);
            let inst = generate::zero_sum(seed, p.unwrap_or(3), &h, extra);
            inst.validate()?;
            serde_json::to_value(inst)
        }
        Kind::T21Instance => {
            let spec = match p.unwrap_or(0) {
                0 => FieldSpec::Rational,
                p => FieldSpec::Prime { p },
            };
            serde_json::to_value(generate::t21_instance(seed, spec)?)
        }
    };
    value.map_err(|e| Error::invalid(e.to_string()))
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    match cli.command {
        Command::System { file, json } => match read_json(&file) {
            Ok(v) => report_outcome(system_report(&v), json),
            Err(e) => error_outcome("system", &e, json),
        },
        Command::Verify { theorem, file, oracle, json } => match read_json(&file) {
            Ok(v) => report_outcome(verify_value(theorem, &v, oracle), json),
            Err(e) => error_outcome(&format!("verify {}", theorem.name()), &e, json),
        },
        Command::Generate { kind, seed, m, max_classes, budget, p, h, l, extra, out } => {
            match generate(kind, seed, m, max_classes, budget, p, h, l, extra) {
                Ok(v) => {
                    let text = generate::render(&v);
                    match out {
                        Some(path) => match std::fs::write(&path, &text) {
                            Ok(()) => Outcome { code: 0, stdout: String::new(), stderr: String::new() },
                            Err(e) => Outcome { code: 2, stdout: String::new(), stderr: format!("{}: {e}\n", path.display()) },
                        },
                        None => Outcome { code: 0, stdout: text, stderr: String::new() },
                    }
                }
                Err(e) => Outcome { code: 2, stdout: String::new(), stderr: format!("error: {e}\n") },
            }
        }
        Command::Suite { dir, oracle, json } => match suite::run_suite(&dir, oracle) {
            Ok(report) => {
                let text = if json {
                    render_report(&report, true)
                } else {
                    let mut s = format!("suite: {}\n", serde_json::to_value(report.status).unwrap().as_str().unwrap_or_default());
                    for c in report.payload["criteria"].as_array().into_iter().flatten() {
                        s.push_str(&format!(
                            "{:>2} {:<7} {} ({})\n",
                            c["id"],
                            c["status"].as_str().unwrap_or_default().to_uppercase(),
                            c["name"].as_str().unwrap_or_default(),
                            c["detail"].as_str().unwrap_or_default()
                        ));
                    }
                    s
                };
                Outcome { code: report.exit_code(), stdout: text, stderr: String::new() }
            }
            Err(e) => error_outcome("suite", &e, json),
        },
    }
}
