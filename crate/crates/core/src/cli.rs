//! Command-line front end.
//!
//! Exit codes: `0` success, `1` inconsistent or invalid instance or oracle failure, `2` unreadable or
//! unparseable input.

use std::fmt;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::engine::{self, Engine, SeshadriResult, Status, Submaximality};
use crate::model::{validate, AVSpec, Diagnostic};
use crate::oracle;
use crate::radical::Radical;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INCONSISTENT: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

pub const DEFAULT_SEED: u64 = 2_718_281_828;

#[derive(Debug, Parser)]
#[command(name = "seshadri", version, about = "Certified Seshadri constants of polarized abelian varieties")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check an instance file against the structural invariants.
    Validate { file: PathBuf },
    /// Evaluate an instance.
    Compute {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Evaluate every `*.json` file in a directory.
    Batch {
        dir: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Evaluate an instance and print the full proof tree.
    Explain { file: PathBuf },
    /// Run the oracle suite on synthetic instances.
    Selfcheck {
        #[arg(long, default_value_t = 1000)]
        iters: u64,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

/// Why an instance file could not be loaded.
#[derive(Debug)]
pub enum InputError {
    Io { path: PathBuf, source: io::Error },
    Parse { path: PathBuf, line: usize, column: usize, message: String },
}

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InputError::Io { path, source } => write!(f, "{}: cannot read: {source}", path.display()),
            InputError::Parse { path, line, column, message } => {
                write!(f, "{}:{line}:{column}: parse error: {message}", path.display())
            }
        }
    }
}

impl std::error::Error for InputError {}

/// Reads and parses one instance file. Validation is separate.
pub fn load_instance(path: &Path) -> Result<AVSpec, InputError> {
    let text = fs::read_to_string(path).map_err(|source| InputError::Io { path: path.to_path_buf(), source })?;
    parse_instance(&text).map_err(|e| InputError::Parse {
        path: path.to_path_buf(),
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })
}

pub fn parse_instance(text: &str) -> Result<AVSpec, serde_json::Error> {
    serde_json::from_str(text)
}

/// Canonical JSON for an instance.
pub fn instance_to_json(spec: &AVSpec) -> String {
    serde_json::to_string_pretty(spec).expect("serializable")
}

const DECIMAL_DIGITS: u32 = 12;

fn radical_json(r: &Radical) -> Value {
    let mut v = serde_json::to_value(r).expect("serializable");
    let d = r.to_decimal(DECIMAL_DIGITS);
    v["text"] = json!(r.to_string());
    v["decimal"] = json!({ "value": d.text, "approximate": true });
    v
}

/// Machine-readable result. Exact fields are authoritative; decimals are always labelled approximate.
pub fn result_json(r: &SeshadriResult) -> Value {
    let mut doc = json!({
        "id": r.id,
        "dim": r.dim,
        "degree": r.degree,
        "status": r.status.kind(),
        "candidate_set": r.candidate_set.as_ref().map(|c| c.iter().map(|x| x.to_string()).collect::<Vec<_>>()),
        "submaximality": r.submaximality.map(|s| match s {
            Submaximality::Below => "below",
            Submaximality::Equal => "equal",
            Submaximality::Above => "above",
        }),
        "blocked": r.blocked,
        "facts": r.facts,
        "proof": r.proof,
    });
    match &r.status {
        Status::Exact(v) => {
            doc["value"] = json!(v.to_string());
            doc["exact"] = radical_json(&Radical::from_rational(v.clone()).expect("positive"));
        }
        Status::Bounds { lo, hi } => {
            doc["bounds"] = json!({ "lo": radical_json(lo), "hi": radical_json(hi) });
        }
        Status::Inconsistent(reasons) => {
            doc["reasons"] = json!(reasons);
        }
    }
    doc
}

fn diagnostics_json(d: &[Diagnostic]) -> Value {
    json!(d)
}

fn status_line(r: &SeshadriResult) -> String {
    match &r.status {
        Status::Exact(v) => format!("exact {v}"),
        Status::Bounds { lo, hi } => {
            let mut s = format!("bounds [{lo}, {hi}]");
            if let Some(c) = &r.candidate_set {
                let list = c.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ");
                s.push_str(&format!(" candidates {{{list}}}"));
            }
            s
        }
        Status::Inconsistent(reasons) => format!("inconsistent: {}", reasons.join("; ")),
    }
}

fn exit_for(r: &SeshadriResult) -> i32 {
    if r.status.is_inconsistent() {
        EXIT_INCONSISTENT
    } else {
        EXIT_OK
    }
}

/// Loads and validates; on failure writes the report to `err` and returns the exit code.
fn load_valid(path: &Path, err: &mut dyn Write) -> Result<AVSpec, i32> {
    let spec = match load_instance(path) {
        Ok(s) => s,
        Err(e) => {
            let _ = writeln!(err, "{e}");
            return Err(EXIT_INPUT);
        }
    };
    let diags = validate(&spec);
    if !diags.is_empty() {
        for d in &diags {
            let _ = writeln!(err, "{d}");
        }
        let _ = writeln!(err, "{}: invalid ({} diagnostic(s))", path.display(), diags.len());
        return Err(EXIT_INCONSISTENT);
    }
    Ok(spec)
}

pub fn cmd_validate(path: &Path, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match load_valid(path, err) {
        Ok(spec) => {
            let _ = writeln!(out, "{}: valid (dimension {}, L^{} = {})", spec.id, spec.dim, spec.dim, spec.degree);
            EXIT_OK
        }
        Err(code) => code,
    }
}

pub fn cmd_compute(path: &Path, format: Format, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let spec = match load_valid(path, err) {
        Ok(s) => s,
        Err(code) => return code,
    };
    let r = Engine::default().evaluate(&spec).expect("validated");
    let _ = match format {
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&result_json(&r)).expect("serializable")),
        Format::Text => write!(out, "{}", engine::summary(&r)),
    };
    exit_for(&r)
}

pub fn cmd_explain(path: &Path, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let spec = match load_valid(path, err) {
        Ok(s) => s,
        Err(code) => return code,
    };
    let r = Engine::default().evaluate(&spec).expect("validated");
    let _ = write!(out, "{}", engine::explain(&r));
    exit_for(&r)
}

/// Outcome of one file in a batch.
#[derive(Debug)]
pub enum BatchOutcome {
    Evaluated(Box<SeshadriResult>),
    Invalid(Vec<Diagnostic>),
    Unreadable(String),
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct BatchSummary {
    pub exact: usize,
    pub bounds: usize,
    pub inconsistent: usize,
    pub invalid: usize,
    pub unreadable: usize,
}

impl BatchSummary {
    pub fn exit_code(&self) -> i32 {
        if self.inconsistent + self.invalid > 0 {
            EXIT_INCONSISTENT
        } else if self.unreadable > 0 {
            EXIT_INPUT
        } else {
            EXIT_OK
        }
    }
}

/// Evaluates every `*.json` file in `dir` concurrently; results are ordered by file name.
pub fn run_batch(dir: &Path) -> io::Result<(Vec<(String, BatchOutcome)>, BatchSummary)> {
    let mut files: Vec<PathBuf> = fs::read_dir(dir)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.is_file() && p.extension().is_some_and(|x| x == "json"))
        .collect();
    files.sort();
    let outcomes: Vec<(String, BatchOutcome)> = files
        .par_iter()
        .map(|p| {
            let name = p.file_name().map(|n| n.to_string_lossy().into_owned()).unwrap_or_default();
            let outcome = match load_instance(p) {
                Err(e) => BatchOutcome::Unreadable(e.to_string()),
                Ok(spec) => match Engine::default().evaluate(&spec) {
                    Ok(r) => BatchOutcome::Evaluated(Box::new(r)),
                    Err(crate::error::EvalError::Invalid(d)) => BatchOutcome::Invalid(d),
                },
            };
            (name, outcome)
        })
        .collect();
    let mut s = BatchSummary::default();
    for (_, o) in &outcomes {
        match o {
            BatchOutcome::Evaluated(r) => match r.status {
                Status::Exact(_) => s.exact += 1,
                Status::Bounds { .. } => s.bounds += 1,
                Status::Inconsistent(_) => s.inconsistent += 1,
            },
            BatchOutcome::Invalid(_) => s.invalid += 1,
            BatchOutcome::Unreadable(_) => s.unreadable += 1,
        }
    }
    Ok((outcomes, s))
}

pub fn cmd_batch(dir: &Path, format: Format, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let (outcomes, summary) = match run_batch(dir) {
        Ok(x) => x,
        Err(e) => {
            let _ = writeln!(err, "{}: cannot read directory: {e}", dir.display());
            return EXIT_INPUT;
        }
    };
    match format {
        Format::Json => {
            let results: Vec<Value> = outcomes
                .iter()
                .map(|(name, o)| match o {
                    BatchOutcome::Evaluated(r) => json!({ "file": name, "result": result_json(r) }),
                    BatchOutcome::Invalid(d) => json!({ "file": name, "invalid": diagnostics_json(d) }),
                    BatchOutcome::Unreadable(e) => json!({ "file": name, "error": e }),
                })
                .collect();
            let doc = json!({
                "results": results,
                "summary": {
                    "exact": summary.exact,
                    "bounds": summary.bounds,
                    "inconsistent": summary.inconsistent,
                    "invalid": summary.invalid,
                    "unreadable": summary.unreadable,
                },
            });
            let _ = writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("serializable"));
        }
        Format::Text => {
            let width = outcomes.iter().map(|(n, _)| n.len()).max().unwrap_or(0);
            for (name, o) in &outcomes {
                let line = match o {
                    BatchOutcome::Evaluated(r) => status_line(r),
                    BatchOutcome::Invalid(d) => {
                        format!("INVALID: {}", d.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("; "))
                    }
                    BatchOutcome::Unreadable(e) => format!("ERROR: {e}"),
                };
                let _ = writeln!(out, "{name:width$}  {line}");
            }
            let _ = writeln!(out, "---");
            let _ = writeln!(
                out,
                "exact {}  bounds {}  inconsistent {}  invalid {}  unreadable {}",
                summary.exact, summary.bounds, summary.inconsistent, summary.invalid, summary.unreadable
            );
        }
    }
    summary.exit_code()
}

pub fn cmd_selfcheck(iters: u64, seed: u64, out: &mut dyn Write) -> i32 {
    let report = oracle::selfcheck(iters, seed);
    let _ = writeln!(out, "selfcheck: {iters} iteration(s) from seed {seed}");
    let _ = writeln!(out, "{report}");
    if report.passed() {
        EXIT_OK
    } else {
        EXIT_INCONSISTENT
    }
}

/// Runs a parsed command line and returns the process exit code.
pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match cli.command {
        Command::Validate { file } => cmd_validate(&file, out, err),
        Command::Compute { file, format } => cmd_compute(&file, format, out, err),
        Command::Batch { dir, format } => cmd_batch(&dir, format, out, err),
        Command::Explain { file } => cmd_explain(&file, out, err),
        Command::Selfcheck { iters, seed } => cmd_selfcheck(iters, seed, out),
    }
}

/// Entry point for the binary: argument errors exit with code 2.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
        }
    };
    let stdout = io::stdout();
    let stderr = io::stderr();
    run(cli, &mut stdout.lock(), &mut stderr.lock())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::PpavType;

    fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
        let p = dir.join(name);
        fs::write(&p, text).unwrap();
        p
    }

    fn ppav3() -> AVSpec {
        AVSpec::new("A", 3, 18).with_subvariety(AVSpec::new("J", 2, 2).with_ppav_type(PpavType::JacobianGenus2))
    }

    fn run_cmd(f: impl FnOnce(&mut Vec<u8>, &mut Vec<u8>) -> i32) -> (i32, String, String) {
        let (mut o, mut e) = (Vec::new(), Vec::new());
        let code = f(&mut o, &mut e);
        (code, String::from_utf8(o).unwrap(), String::from_utf8(e).unwrap())
    }

    #[test]
    fn parse_error_has_position() {
        let dir = tempfile::tempdir().unwrap();
        let p = write(dir.path(), "bad.json", "{\n  \"id\": \"A\",\n  \"dim\": x\n}");
        let (code, _, err) = run_cmd(|o, e| cmd_validate(&p, o, e));
        assert_eq!(code, EXIT_INPUT);
        assert!(err.contains("bad.json:3:"), "{err}");
    }

    #[test]
    fn validate_and_compute() {
        let dir = tempfile::tempdir().unwrap();
        let p = write(dir.path(), "a.json", &instance_to_json(&ppav3()));
        let (code, out, _) = run_cmd(|o, e| cmd_validate(&p, o, e));
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("valid"));
        let (code, out, _) = run_cmd(|o, e| cmd_compute(&p, Format::Json, o, e));
        assert_eq!(code, EXIT_OK);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["status"], "exact");
        assert_eq!(v["value"], "4/3");
        assert_eq!(v["exact"]["decimal"]["value"], "1.333333333333");
        assert_eq!(v["exact"]["decimal"]["approximate"], true);
    }

    #[test]
    fn invalid_divisibility() {
        let dir = tempfile::tempdir().unwrap();
        let p = write(dir.path(), "a.json", r#"{"id":"A","dim":3,"degree":20}"#);
        let (code, _, err) = run_cmd(|o, e| cmd_validate(&p, o, e));
        assert_eq!(code, EXIT_INCONSISTENT);
        assert!(err.contains("3! does not divide 20"));
    }

    #[test]
    fn batch_summary() {
        let dir = tempfile::tempdir().unwrap();
        write(dir.path(), "b.json", &instance_to_json(&ppav3()));
        write(dir.path(), "a.json", r#"{"id":"A","dim":3,"degree":20}"#);
        write(dir.path(), "c.json", "not json");
        let (outcomes, s) = run_batch(dir.path()).unwrap();
        let names: Vec<&str> = outcomes.iter().map(|(n, _)| n.as_str()).collect();
        assert_eq!(names, ["a.json", "b.json", "c.json"]);
        assert_eq!(s, BatchSummary { exact: 1, invalid: 1, unreadable: 1, ..Default::default() });
        assert_eq!(s.exit_code(), EXIT_INCONSISTENT);
    }

    #[test]
    fn selfcheck_zero_iterations() {
        let (code, out, _) = run_cmd(|o, _| cmd_selfcheck(0, 1, o));
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("PASS"));
    }
}
