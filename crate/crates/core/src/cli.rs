//! `froblab` command line.
//!
//! Scan subcommands write CSV (default) or JSON lines. The first line always
//! echoes the resolved configuration: a `#` comment in CSV, a `{"config": ..}`
//! object in JSON lines. The worker count is left out of the echo so output
//! does not depend on it. Progress and summaries go to standard error.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::error::LabError;
use crate::lab::{
    bez_scan, density_scan, family_scan, prop1_interval, violation_report, window_search,
    Prop1Interval, ScanRecord,
};
use crate::nfunc::{cf_n_bounds, n_exact};
use crate::MAX_GENERATOR;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CRITICAL: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "froblab",
    version,
    about = "Frobenius numbers of triples and the covering function N_a(b,c)"
)]
pub struct Cli {
    /// Output format for scan results.
    #[arg(long, value_enum, global = true)]
    pub format: Option<Format>,
    /// Write results here instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    /// Worker threads (0 = one per core).
    #[arg(long, env = "FROBLAB_WORKERS", default_value_t = 0, global = true)]
    pub workers: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Jsonl,
}

#[derive(Args, Debug, Clone, Copy, Serialize)]
pub struct TripleArgs {
    #[arg(long)]
    pub a: u64,
    #[arg(long)]
    pub b: u64,
    #[arg(long)]
    pub c: u64,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Frobenius number f(a, b, c).
    Frob {
        #[command(flatten)]
        triple: TripleArgs,
        /// Also print N and the interval min(b,c)N - a <= f <= (b+c)N.
        #[arg(long)]
        bounds: bool,
    },
    /// Covering function N_a(b, c).
    Nfunc {
        #[command(flatten)]
        triple: TripleArgs,
        /// Add one row of continued-fraction bounds per convergent of t/a.
        #[arg(long)]
        cf: bool,
    },
    /// Inverse-pair family summary, one row per a.
    Family {
        #[arg(long)]
        a_from: u64,
        #[arg(long)]
        a_to: u64,
        #[arg(long, default_value_t = 1)]
        step: u64,
        /// Also write the violating triples (bez schema) to this file.
        #[arg(long)]
        violations_out: Option<PathBuf>,
    },
    /// Search inverse pairs with c <= (1 + window)·a for f > (abc)^{5/8}.
    BezScan {
        #[arg(long)]
        a_from: u64,
        #[arg(long)]
        a_to: u64,
        #[arg(long, default_value_t = 0.1)]
        window: f64,
        /// Drop triples within a/100 of an arithmetic progression.
        #[arg(long)]
        exclude_progressions: bool,
    },
    /// Fraction of pairs with f > a^{3/2+delta}.
    Density {
        #[arg(long)]
        a: u64,
        #[arg(long)]
        delta: f64,
        /// Number of sampled pairs, or `exhaustive`.
        #[arg(long, value_parser = parse_sample)]
        sample: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// First inverse pair inside the windows [(1+alpha)a, (1+alpha+eps)a] x [(1+beta)a, (1+beta+eps)a].
    Windows {
        #[arg(long)]
        a: u64,
        #[arg(long)]
        alpha: f64,
        #[arg(long)]
        beta: f64,
        #[arg(long)]
        eps: f64,
    },
    /// Triples a < b < c < 2a, a <= a_max, with f < min(b,c)·N.
    Violations {
        #[arg(long)]
        a_max: u64,
    },
}

fn parse_sample(s: &str) -> Result<u64, String> {
    match s {
        "exhaustive" | "all" => Ok(u64::MAX),
        _ => s
            .parse::<u64>()
            .map_err(|e| format!("expected a count or `exhaustive`: {e}")),
    }
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Io(io::Error),
}

impl From<LabError> for CliError {
    fn from(e: LabError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Io(io::Error::other(e))
    }
}

fn check_magnitude(name: &str, v: u64) -> Result<(), CliError> {
    if v > MAX_GENERATOR {
        return Err(CliError::Usage(format!(
            "refusing --{name} {v}: values above {MAX_GENERATOR} overflow the supported integer width"
        )));
    }
    Ok(())
}

fn check_triple(t: &TripleArgs) -> Result<(), CliError> {
    check_magnitude("a", t.a)?;
    check_magnitude("b", t.b)?;
    check_magnitude("c", t.c)
}

// CSV row layouts.

#[derive(Serialize)]
struct FamilyCsv {
    a: u64,
    pairs_count: usize,
    min_f: Option<i64>,
    min_ratio: Option<f64>,
    max_f: Option<i64>,
    bez_violations: usize,
}

#[derive(Serialize)]
struct BezCsv {
    a: u64,
    b: u64,
    c: u64,
    f: i64,
    abc: u128,
    bound_float: f64,
}

impl From<&ScanRecord> for BezCsv {
    fn from(r: &ScanRecord) -> Self {
        BezCsv {
            a: r.triple.a(),
            b: r.triple.b(),
            c: r.triple.c(),
            f: r.f,
            abc: r.triple.product(),
            bound_float: r.bez_bound,
        }
    }
}

#[derive(Serialize)]
struct DensityCsv {
    a: u64,
    delta_exp: f64,
    threshold: u64,
    pairs_tested: u64,
    pairs_exceeding: u64,
    fraction: f64,
}

#[derive(Serialize)]
struct Prop1Csv {
    a: u64,
    b: u64,
    c: u64,
    n: u64,
    f: i64,
    paper_lower: u64,
    corrected_lower: i64,
    upper: u64,
    paper_lower_ok: bool,
    upper_ok: bool,
}

impl From<&Prop1Interval> for Prop1Csv {
    fn from(p: &Prop1Interval) -> Self {
        Prop1Csv {
            a: p.triple.a(),
            b: p.triple.b(),
            c: p.triple.c(),
            n: p.n,
            f: p.f,
            paper_lower: p.paper_lower,
            corrected_lower: p.corrected_lower,
            upper: p.upper,
            paper_lower_ok: p.paper_lower_ok,
            upper_ok: p.upper_ok,
        }
    }
}

/// Writes a table of rows in the selected format, preceded by the config echo.
fn write_table<W: Write, R: Serialize, J: Serialize>(
    out: &mut W,
    format: Format,
    config: &serde_json::Value,
    csv_rows: &[R],
    json_rows: &[J],
    empty_header: &str,
) -> Result<(), CliError> {
    match format {
        Format::Csv => {
            writeln!(out, "# {}", config_comment(config))?;
            if csv_rows.is_empty() {
                writeln!(out, "{empty_header}")?;
            } else {
                let mut w = csv::WriterBuilder::new()
                    .terminator(csv::Terminator::Any(b'\n'))
                    .from_writer(&mut *out);
                for r in csv_rows {
                    w.serialize(r)?;
                }
                w.flush()?;
            }
        }
        Format::Jsonl => {
            writeln!(out, "{}", json!({ "config": config }))?;
            for r in json_rows {
                writeln!(
                    out,
                    "{}",
                    serde_json::to_string(r).map_err(io::Error::other)?
                )?;
            }
        }
    }
    Ok(())
}

fn config_comment(config: &serde_json::Value) -> String {
    let mut parts = Vec::new();
    if let Some(obj) = config.as_object() {
        for (k, v) in obj {
            let v = match v {
                serde_json::Value::String(s) => s.clone(),
                other => other.to_string(),
            };
            parts.push(format!("{k}={v}"));
        }
    }
    format!("froblab {}", parts.join(" "))
}

pub const FAMILY_HEADER: &str = "a,pairs_count,min_f,min_ratio,max_f,bez_violations";
pub const BEZ_HEADER: &str = "a,b,c,f,abc,bound_float";
pub const DENSITY_HEADER: &str = "a,delta_exp,threshold,pairs_tested,pairs_exceeding,fraction";
pub const PROP1_HEADER: &str =
    "a,b,c,n,f,paper_lower,corrected_lower,upper,paper_lower_ok,upper_ok";

fn execute<W: Write, E: Write>(
    cli: &Cli,
    pool: &rayon::ThreadPool,
    out: &mut W,
    err: &mut E,
) -> Result<i32, CliError> {
    let format = cli.format.unwrap_or(Format::Csv);
    match &cli.command {
        Command::Frob { triple, bounds } => {
            check_triple(triple)?;
            let TripleArgs { a, b, c } = *triple;
            if !*bounds {
                let f = crate::frobenius::frobenius(a, b, c).map_err(LabError::from)?;
                match cli.format {
                    Some(Format::Jsonl) => {
                        writeln!(out, "{}", json!({"a": a, "b": b, "c": c, "f": f}))?
                    }
                    _ => writeln!(out, "{f}")?,
                }
                return Ok(EXIT_OK);
            }
            let p = prop1_interval(a, b, c)?;
            match cli.format {
                None => {
                    writeln!(out, "{}", p.f)?;
                    writeln!(
                        out,
                        "n={} paper_lower={} corrected_lower={} upper={} paper_lower_ok={} corrected_lower_ok={} upper_ok={}",
                        p.n, p.paper_lower, p.corrected_lower, p.upper, p.paper_lower_ok, p.corrected_lower_ok, p.upper_ok
                    )?;
                }
                Some(fmt) => {
                    let config = json!({"command": "frob", "a": a, "b": b, "c": c, "bounds": true, "format": fmt});
                    write_table(out, fmt, &config, &[Prop1Csv::from(&p)], &[p], PROP1_HEADER)?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Nfunc { triple, cf } => {
            check_triple(triple)?;
            let TripleArgs { a, b, c } = *triple;
            if !*cf {
                let n = n_exact(a, b, c).map_err(LabError::from)?;
                match cli.format {
                    Some(Format::Jsonl) => {
                        writeln!(out, "{}", json!({"a": a, "b": b, "c": c, "n": n}))?
                    }
                    _ => writeln!(out, "{n}")?,
                }
                return Ok(EXIT_OK);
            }
            let report = cf_n_bounds(a, b, c).map_err(LabError::from)?;
            match cli.format {
                Some(Format::Jsonl) => writeln!(
                    out,
                    "{}",
                    serde_json::to_string(&report).map_err(io::Error::other)?
                )?,
                _ => {
                    writeln!(out, "{}", report.n_exact)?;
                    writeln!(out, "t={} best_upper={}", report.t, report.best_upper)?;
                    for r in &report.per_convergent {
                        writeln!(
                            out,
                            "p={} q={} delta={} lower_proxy={} upper_proxy={} gap_bound={}",
                            r.p, r.q, r.delta, r.lower_proxy, r.upper_proxy, r.gap_bound
                        )?;
                    }
                }
            }
            Ok(EXIT_OK)
        }
        Command::Family {
            a_from,
            a_to,
            step,
            violations_out,
        } => {
            check_magnitude("a-to", *a_to)?;
            let scan = pool.install(|| family_scan(*a_from, *a_to, *step))?;
            let config = json!({"command": "family", "a_from": a_from, "a_to": a_to, "step": step, "format": format});
            let csv_rows: Vec<FamilyCsv> = scan
                .rows
                .iter()
                .map(|r| FamilyCsv {
                    a: r.a,
                    pairs_count: r.pairs_count,
                    min_f: r.min_f,
                    min_ratio: r.min_ratio,
                    max_f: r.max_f,
                    bez_violations: r.bez_violations,
                })
                .collect();
            write_table(out, format, &config, &csv_rows, &scan.rows, FAMILY_HEADER)?;
            if let Some(path) = violations_out {
                let mut file = BufWriter::new(File::create(path)?);
                let rows: Vec<BezCsv> = scan.violations.iter().map(BezCsv::from).collect();
                write_table(
                    &mut file,
                    format,
                    &config,
                    &rows,
                    &scan.violations,
                    BEZ_HEADER,
                )?;
                file.flush()?;
            }
            let deviating = scan.rows.iter().filter(|r| r.phi_deviation).count();
            writeln!(
                err,
                "family: {} rows, {} violating triples, {} rows deviate from phi(a)/2 by more than 2",
                scan.rows.len(),
                scan.violations.len(),
                deviating
            )?;
            Ok(EXIT_OK)
        }
        Command::BezScan {
            a_from,
            a_to,
            window,
            exclude_progressions,
        } => {
            check_magnitude("a-to", *a_to)?;
            let mut found = pool.install(|| bez_scan(*a_from, *a_to, *window))?;
            let near = found.iter().filter(|r| r.near_progression).count();
            if *exclude_progressions {
                found.retain(|r| !r.near_progression);
            }
            let config = json!({
                "command": "bez-scan", "a_from": a_from, "a_to": a_to, "window": window,
                "exclude_progressions": exclude_progressions, "format": format
            });
            let rows: Vec<BezCsv> = found.iter().map(BezCsv::from).collect();
            write_table(out, format, &config, &rows, &found, BEZ_HEADER)?;
            writeln!(
                err,
                "bez-scan: {} violations reported ({} near an arithmetic progression before filtering)",
                found.len(),
                near
            )?;
            Ok(EXIT_OK)
        }
        Command::Density {
            a,
            delta,
            sample,
            seed,
        } => {
            check_magnitude("a", *a)?;
            let r = pool.install(|| density_scan(*a, *delta, *sample, *seed))?;
            let sample_echo = if *sample == u64::MAX {
                json!("exhaustive")
            } else {
                json!(sample)
            };
            let config = json!({"command": "density", "a": a, "delta": delta, "sample": sample_echo, "seed": seed, "format": format});
            let row = DensityCsv {
                a: r.a,
                delta_exp: r.delta_exp,
                threshold: r.threshold,
                pairs_tested: r.pairs_tested,
                pairs_exceeding: r.pairs_exceeding,
                fraction: r.fraction,
            };
            write_table(out, format, &config, &[row], &[r], DENSITY_HEADER)?;
            Ok(EXIT_OK)
        }
        Command::Windows {
            a,
            alpha,
            beta,
            eps,
        } => {
            check_magnitude("a", *a)?;
            let hit = window_search(*a, *alpha, *beta, *eps)?;
            match (cli.format, hit) {
                (Some(Format::Jsonl), h) => writeln!(
                    out,
                    "{}",
                    json!({"a": a, "alpha": alpha, "beta": beta, "eps": eps, "pair": h})
                )?,
                (_, Some((b, c))) => writeln!(out, "{b},{c}")?,
                (_, None) => writeln!(out, "none")?,
            }
            Ok(EXIT_OK)
        }
        Command::Violations { a_max } => {
            let report = pool.install(|| violation_report(*a_max))?;
            let config = json!({"command": "violations", "a_max": a_max, "format": format});
            let rows: Vec<Prop1Csv> = report.iter().map(Prop1Csv::from).collect();
            write_table(out, format, &config, &rows, &report, PROP1_HEADER)?;
            let critical: Vec<&Prop1Interval> = report.iter().filter(|p| p.is_critical()).collect();
            for p in &critical {
                writeln!(
                    err,
                    "CRITICAL: f({}, {}, {}) = {} < min(b,c)N - a = {}",
                    p.triple.a(),
                    p.triple.b(),
                    p.triple.c(),
                    p.f,
                    p.corrected_lower
                )?;
            }
            writeln!(
                err,
                "violations: {} below min(b,c)N, {} critical",
                report.len(),
                critical.len()
            )?;
            Ok(if critical.is_empty() {
                EXIT_OK
            } else {
                EXIT_CRITICAL
            })
        }
    }
}

/// Parses `args` (including the program name) and runs the command, writing
/// results to `out` unless `--output` redirects them. Returns the exit code.
pub fn run_with<I, T, W, E>(args: I, out: &mut W, err: &mut E) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
    W: Write,
    E: Write,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = if e.use_stderr() {
                write!(err, "{e}")
            } else {
                write!(out, "{e}")
            };
            return code;
        }
    };

    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(cli.workers)
        .build()
    {
        Ok(pool) => pool,
        Err(e) => {
            let _ = writeln!(err, "error: cannot start worker pool: {e}");
            return EXIT_USAGE;
        }
    };

    let result = match &cli.output {
        Some(path) => File::create(path).map_err(CliError::Io).and_then(|f| {
            let mut w = BufWriter::new(f);
            let code = execute(&cli, &pool, &mut w, err)?;
            w.flush()?;
            Ok(code)
        }),
        None => execute(&cli, &pool, out, err),
    };

    match result {
        Ok(code) => code,
        Err(CliError::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(CliError::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

/// Entry point for the binary.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = io::stdout();
    let stderr = io::stderr();
    let mut out = stdout.lock();
    let mut err = stderr.lock();
    let code = run_with(args, &mut out, &mut err);
    let _ = out.flush();
    code
}
