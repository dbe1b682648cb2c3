//! Command-line front end for the `flatfold` library.

pub mod parse;
pub mod svg;

use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use flatfold::oracle::{
    oracle_is_valid_with, oracle_valid_assignments, OracleConfig, DEFAULT_MAX_SECTORS,
};
use flatfold::pattern::{check_pattern, MaekawaOutcome};
use flatfold::vertex::{
    alternating_sum, bounds, count_mv, crimp_validity, find_runs, kawasaki, maekawa_check,
};
use flatfold::{AngleSequence, MvAssignment};
use serde_json::{json, Value};

pub use parse::{parse_angles, parse_pattern};
pub use svg::{emit_svg, render_svg};

use parse::rational_text;

/// Largest degree `enumerate --fast` will sweep.
const FAST_ENUMERATE_LIMIT: usize = 24;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),
    #[error("invariant violated: {0}")]
    Invariant(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Invariant(_) => 2,
            _ => 1,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Parser, Debug)]
#[command(
    name = "flatfold",
    version,
    about = "Flat-foldability of origami crease patterns"
)]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Include wall-clock timing in reports.
    #[arg(long, global = true)]
    pub timing: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Kawasaki, degree parity, bounds and the counting trace.
    Analyze { angles: String },
    /// Number of valid mountain-valley assignments.
    Count { angles: String },
    /// Validity of one assignment, e.g. --mv MMVM.
    Check {
        angles: String,
        #[arg(long)]
        mv: String,
        /// Run the exhaustive search even above its default capacity.
        #[arg(long)]
        oracle: bool,
    },
    /// List every valid assignment.
    Enumerate {
        angles: String,
        /// Filter all assignments through the crimp test instead of the
        /// exhaustive layer search.
        #[arg(long)]
        fast: bool,
    },
    /// Crease pattern commands.
    Pattern {
        #[command(subcommand)]
        command: PatternCommand,
    },
    /// Compare the counting recursion and crimp test with the exhaustive
    /// search over a random corpus.
    Selftest {
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        size: usize,
    },
}

#[derive(Subcommand, Debug)]
pub enum PatternCommand {
    /// Local Kawasaki, reflection traces and generalized Maekawa.
    Check { file: PathBuf },
    /// Draw the pattern as SVG.
    Svg {
        file: PathBuf,
        #[arg(short, long)]
        out: PathBuf,
    },
}

/// A finished report: JSON document plus its text rendering.
pub struct Report {
    pub json: Value,
    pub text: String,
}

/// Parses `args` (including the program name), runs the command and writes
/// the report to `out`, errors to `err`. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = if code == 0 {
                write!(out, "{e}")
            } else {
                write!(err, "{e}")
            };
            return code;
        }
    };
    let started = Instant::now();
    match execute(&cli.command) {
        Ok(mut report) => {
            if cli.timing {
                let ms = started.elapsed().as_secs_f64() * 1000.0;
                report.json["timing_ms"] = json!(ms);
                report.text.push_str(&format!("time: {ms:.3} ms\n"));
            }
            let invariant = report
                .json
                .get("invariant_violation")
                .and_then(Value::as_str)
                .map(str::to_owned);
            let _ = match cli.format {
                Format::Json => writeln!(out, "{}", to_json(&report.json)),
                Format::Text => write!(out, "{}", report.text),
            };
            match invariant {
                Some(msg) => {
                    let _ = writeln!(err, "{}", CliError::Invariant(msg));
                    2
                }
                None => 0,
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

/// Pretty JSON with sorted keys; parsing and re-emitting gives the same
/// bytes.
pub fn to_json(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("values always serialize")
}

pub fn execute(command: &Command) -> Result<Report, CliError> {
    match command {
        Command::Analyze { angles } => analyze(&parse_angles(angles)?),
        Command::Count { angles } => count(&parse_angles(angles)?),
        Command::Check { angles, mv, oracle } => {
            let v = parse_angles(angles)?;
            let mv: MvAssignment = mv
                .parse()
                .map_err(|e: flatfold::Error| CliError::Parse(e.to_string()))?;
            if mv.len() != v.len() {
                return Err(CliError::Parse(format!(
                    "--mv has {} labels for {} creases",
                    mv.len(),
                    v.len()
                )));
            }
            check(&v, &mv, *oracle)
        }
        Command::Enumerate { angles, fast } => enumerate(&parse_angles(angles)?, *fast),
        Command::Pattern { command } => match command {
            PatternCommand::Check { file } => pattern_check(&read(file)?),
            PatternCommand::Svg { file, out } => {
                let p = parse_pattern(&read(file)?)?;
                emit_svg(&p, out)?;
                Ok(Report {
                    json: json!({ "output": out.display().to_string(), "creases": p.creases().len() }),
                    text: format!("wrote {} ({} creases)\n", out.display(), p.creases().len()),
                })
            }
        },
        Command::Selftest { seed, size } => Ok(selftest(*seed, *size)),
    }
}

fn read(path: &PathBuf) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))
}

fn angle_texts(v: &AngleSequence) -> Vec<String> {
    v.angles()
        .iter()
        .map(|a| rational_text(a.degrees()))
        .collect()
}

pub fn analyze(v: &AngleSequence) -> Result<Report, CliError> {
    let even = v.len().is_multiple_of(2);
    let kawasaki_holds = kawasaki(v);
    let mut json = json!({
        "input": angle_texts(v),
        "degree": v.len(),
        "even_degree": even,
        "total": rational_text(&v.total()),
        "kind": format!("{:?}", v.kind()).to_lowercase(),
        "kawasaki": kawasaki_holds,
        "alternating_sum": alternating_sum(v).ok().map(|s| rational_text(&s)),
        "bounds": Value::Null,
        "count": Value::Null,
        "trace": [],
        "base": Value::Null,
        "runs": find_runs(v),
    });
    let mut text = format!(
        "angles: {v}\ndegree: {} ({})\ntotal: {} ({})\nkawasaki: {}\n",
        v.len(),
        if even { "even" } else { "odd" },
        json["total"].as_str().unwrap(),
        json["kind"].as_str().unwrap(),
        if kawasaki_holds { "holds" } else { "fails" },
    );
    if let Ok((lo, hi)) = bounds(v) {
        json["bounds"] = json!([lo.to_string(), hi.to_string()]);
        text.push_str(&format!("bounds: {lo} <= count <= {hi}\n"));
    }
    match count_mv(v) {
        Ok(result) => {
            json["count"] = json!(result.count.to_string());
            json["base"] = json!(result.base.to_string());
            json["trace"] = result
                .trace
                .iter()
                .map(|s| {
                    json!({
                        "start": s.start,
                        "run_length": s.run_length,
                        "factor": s.factor.to_string(),
                        "residual": angle_texts(&s.residual),
                    })
                })
                .collect();
            for s in &result.trace {
                text.push_str(&format!(
                    "reduce run of {} at sector {}: factor {} -> {}\n",
                    s.run_length, s.start, s.factor, s.residual
                ));
            }
            let factors: Vec<String> = result.trace.iter().map(|s| s.factor.to_string()).collect();
            let mut expr = factors.join("·");
            if !expr.is_empty() {
                expr.push('·');
            }
            text.push_str(&format!(
                "base: {}\ncount: {}{} = {}\n",
                result.base, expr, result.base, result.count
            ));
        }
        Err(e) => {
            json["count_error"] = json!(e.to_string());
            text.push_str(&format!("count: none ({e})\n"));
        }
    }
    Ok(Report { json, text })
}

pub fn count(v: &AngleSequence) -> Result<Report, CliError> {
    let (json, text) = match count_mv(v) {
        Ok(r) => (
            json!({ "input": angle_texts(v), "count": r.count.to_string() }),
            format!("{}\n", r.count),
        ),
        Err(e) => (
            json!({ "input": angle_texts(v), "count": Value::Null, "count_error": e.to_string() }),
            format!("none ({e})\n"),
        ),
    };
    Ok(Report { json, text })
}

pub fn check(v: &AngleSequence, mv: &MvAssignment, force_oracle: bool) -> Result<Report, CliError> {
    let crimp = crimp_validity(v, mv);
    let use_oracle = force_oracle || v.len() <= DEFAULT_MAX_SECTORS;
    let oracle = use_oracle.then(|| {
        let config = OracleConfig {
            max_sectors: v.len().max(DEFAULT_MAX_SECTORS),
            ..OracleConfig::default()
        };
        oracle_is_valid_with(v, mv, &config).expect("capacity raised and length checked")
    });
    let verdict = match (&crimp, oracle) {
        (Ok(c), _) => *c,
        // Without Kawasaki there is no flat folding at all.
        (Err(_), o) => o.unwrap_or(false),
    };
    let mut json = json!({
        "input": angle_texts(v),
        "mv": mv.to_string(),
        "kawasaki": kawasaki(v),
        "maekawa": maekawa_check(mv),
        "crimp": crimp.as_ref().ok(),
        "oracle": oracle,
        "valid": verdict,
    });
    let mut text = format!(
        "angles: {v}\nassignment: {mv}\nmaekawa: {}\n",
        if maekawa_check(mv) { "holds" } else { "fails" }
    );
    match &crimp {
        Ok(c) => text.push_str(&format!(
            "crimp: {}\n",
            if *c { "valid" } else { "invalid" }
        )),
        Err(e) => {
            json["crimp_error"] = json!(e.to_string());
            text.push_str(&format!("crimp: not applicable ({e})\n"));
        }
    }
    match oracle {
        Some(o) => text.push_str(&format!(
            "oracle: {}\n",
            if o { "valid" } else { "invalid" }
        )),
        None => text.push_str("oracle: skipped (above capacity; pass --oracle to force)\n"),
    }
    text.push_str(&format!("valid: {verdict}\n"));
    if let (Ok(c), Some(o)) = (&crimp, oracle) {
        if *c != o {
            json["invariant_violation"] =
                json!(format!("crimp says {c}, exhaustive search says {o}"));
        }
    }
    Ok(Report { json, text })
}

pub fn enumerate(v: &AngleSequence, fast: bool) -> Result<Report, CliError> {
    let assignments: Vec<MvAssignment> = if fast {
        if v.len() > FAST_ENUMERATE_LIMIT {
            return Err(CliError::Usage(format!(
                "{} creases exceed the enumeration limit of {FAST_ENUMERATE_LIMIT}",
                v.len()
            )));
        }
        if kawasaki(v) {
            (0..1u64 << v.len())
                .map(|mask| MvAssignment::from_mask(mask, v.len()))
                .filter(|mv| crimp_validity(v, mv).expect("Kawasaki holds"))
                .collect()
        } else {
            Vec::new()
        }
    } else {
        oracle_valid_assignments(v).map_err(|e| CliError::Usage(format!("{e}; use --fast")))?
    };
    let labels: Vec<String> = assignments.iter().map(|a| a.to_string()).collect();
    let json = json!({
        "input": angle_texts(v),
        "method": if fast { "crimp" } else { "oracle" },
        "count": labels.len().to_string(),
        "assignments": labels,
    });
    let mut text = labels.join("\n");
    if !text.is_empty() {
        text.push('\n');
    }
    text.push_str(&format!("{} valid assignments\n", labels.len()));
    Ok(Report { json, text })
}

pub fn pattern_check(document: &str) -> Result<Report, CliError> {
    let p = parse_pattern(document)?;
    let report = check_pattern(&p);
    let mut json = serde_json::to_value(&report).expect("report serializes");
    json["vertices"] = json!(p.vertices().len());
    json["creases"] = json!(p.creases().len());
    let mut text = format!(
        "pattern: {} vertices, {} creases, {} interior vertices\n",
        p.vertices().len(),
        p.creases().len(),
        report.kawasaki.len()
    );
    for k in &report.kawasaki {
        text.push_str(&format!(
            "vertex {}: degree {}, kawasaki {}{}{}\n",
            k.vertex,
            k.degree,
            if k.holds { "holds" } else { "fails" },
            if k.approximate_angles {
                " (angles approximate)"
            } else {
                ""
            },
            if k.split { " (split)" } else { "" },
        ));
    }
    for t in &report.reflection_traces {
        match (&t.trace, &t.error) {
            (Some(tr), _) => text.push_str(&format!(
                "vertex {}: reflection trace {:?}, deviation {:.3e}\n",
                t.vertex, tr.verdict, tr.deviation
            )),
            (None, e) => text.push_str(&format!(
                "vertex {}: no trace ({})\n",
                t.vertex,
                e.as_deref().unwrap_or("?")
            )),
        }
    }
    match &report.maekawa {
        Some(MaekawaOutcome::Evaluated { tally, holds }) => text.push_str(&format!(
            "generalized maekawa: M-V = {} vs 2U-2D-Mi+Vi = {} ({})\n",
            tally.lhs(),
            tally.rhs(),
            if *holds { "holds" } else { "fails" }
        )),
        Some(MaekawaOutcome::LocalViolation { vertices }) => text.push_str(&format!(
            "generalized maekawa: not evaluated, local M-V != ±2 at {vertices:?}\n"
        )),
        None => text.push_str("generalized maekawa: no assignment\n"),
    }
    text.push_str(&format!(
        "all checks pass: {} ({}; foldability not decided)\n",
        report.all_necessary_checks_pass, report.scope
    ));
    Ok(Report { json, text })
}

pub fn selftest(seed: u64, size: usize) -> Report {
    let corpus = flatfold::corpus::kawasaki_corpus(seed, size, &[2, 4, 6, 8]);
    let mut mismatches = Vec::new();
    let mut assignments_checked = 0usize;
    for v in &corpus {
        let fast = count_mv(v).expect("corpus is Kawasaki-valid").count;
        let exhaustive = oracle_valid_assignments(v).expect("corpus within capacity");
        if fast != exhaustive.len().into() {
            mismatches.push(format!(
                "{v}: recursion {fast}, search {}",
                exhaustive.len()
            ));
        }
        for mask in 0..1u64 << v.len() {
            let mv = MvAssignment::from_mask(mask, v.len());
            let crimp = crimp_validity(v, &mv).expect("corpus is Kawasaki-valid");
            if crimp != exhaustive.contains(&mv) {
                mismatches.push(format!("{v} {mv}: crimp {crimp}"));
            }
            assignments_checked += 1;
        }
    }
    let mut json = json!({
        "seed": seed,
        "vertices": corpus.len(),
        "assignments_checked": assignments_checked,
        "mismatches": mismatches,
    });
    let mut text = format!(
        "{} vertices, {} assignments: {} mismatches\n",
        corpus.len(),
        assignments_checked,
        mismatches.len()
    );
    for m in &mismatches {
        text.push_str(&format!("  {m}\n"));
    }
    if !mismatches.is_empty() {
        json["invariant_violation"] = json!(format!(
            "{} disagreements with the exhaustive search",
            mismatches.len()
        ));
    }
    Report { json, text }
}
