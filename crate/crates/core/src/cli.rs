//! The `common-eig` command line.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, ValueEnum};

use crate::error::Error;
use crate::gerschgorin::{intersect, matrix_bounds, row_discs};
use crate::matrix::{parse_matrix, DenseMatrix};
use crate::report::{emit_json_report, emit_scan_table, format_significant, render_svg};
use crate::rootfind::{self, RootEstimate};
use crate::spectrum::{
    self, common_eigenvalues, run_benchmark, AnalysisConfig, BenchmarkSummary, CommonEigenReport,
    Mode,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_NUMERIC: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Proposed,
    Conventional,
    Both,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Proposed => Mode::Proposed,
            ModeArg::Conventional => Mode::Conventional,
            ModeArg::Both => Mode::Both,
        }
    }
}

/// Find real eigenvalues shared by two matrices.
#[derive(Debug, Parser)]
#[command(name = "common-eig", version)]
struct Args {
    /// Matrix file for A
    path_a: PathBuf,
    /// Matrix file for B
    path_b: PathBuf,
    #[arg(long, value_enum, default_value_t = ModeArg::Proposed)]
    mode: ModeArg,
    /// Scan grid spacing
    #[arg(long, default_value_t = rootfind::DEFAULT_STEP)]
    step: f64,
    /// Bisection stops once the bracket is this narrow
    #[arg(long, default_value_t = rootfind::DEFAULT_WIDTH_TOL)]
    width_tol: f64,
    /// |f| at or below this counts as a root
    #[arg(long, default_value_t = rootfind::DEFAULT_ZERO_TOL)]
    zero_tol: f64,
    /// Roots of A and B closer than this are paired
    #[arg(long, default_value_t = spectrum::DEFAULT_MATCH_TOL)]
    match_tol: f64,
    /// Roots of one matrix closer than this are merged
    #[arg(long, default_value_t = rootfind::DEFAULT_DEDUPE_TOL)]
    dedupe_tol: f64,
    /// Write the disc diagram here
    #[arg(long, value_name = "PATH")]
    svg: Option<PathBuf>,
    /// Write PREFIX_A.csv and PREFIX_B.csv scan tables
    #[arg(long, value_name = "PREFIX")]
    scan_table: Option<String>,
    /// Write the JSON report here
    #[arg(long, value_name = "PATH")]
    json: Option<PathBuf>,
    /// Time both modes over N repetitions
    #[arg(long, value_name = "N", default_value_t = 0)]
    bench: usize,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Numeric(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::MaxIterExceeded(_)
            | Error::InconsistentModes { .. }
            | Error::InvalidBracket { .. } => Failure::Numeric(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

/// Runs the CLI with the process's standard streams. `argv[0]` is the
/// program name.
pub fn run_cli<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_cli_with(argv, &mut stdout.lock(), &mut stderr.lock())
}

/// As [`run_cli`], writing to the given streams.
pub fn run_cli_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args = match Args::try_parse_from(argv) {
        Ok(a) => a,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(&args, out) {
        Ok(()) => EXIT_OK,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Numeric(msg)) => {
            let _ = writeln!(err, "numeric failure: {msg}");
            EXIT_NUMERIC
        }
    }
}

fn load(path: &Path) -> Result<DenseMatrix, Failure> {
    let text =
        fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    parse_matrix(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, contents: &str) -> Result<(), Failure> {
    fs::write(path, contents).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn execute(args: &Args, out: &mut dyn Write) -> Result<(), Failure> {
    let cfg = AnalysisConfig {
        mode: args.mode.into(),
        step: args.step,
        width_tol: args.width_tol,
        zero_tol: args.zero_tol,
        match_tol: args.match_tol,
        dedupe_tol: args.dedupe_tol,
        ..AnalysisConfig::default()
    };
    cfg.validate()?;
    let a = load(&args.path_a)?;
    let b = load(&args.path_b)?;

    let report = common_eigenvalues(&a, &b, &cfg)?;
    let bench = match args.bench {
        0 => None,
        n => Some(run_benchmark(&a, &b, &cfg, n)?),
    };

    if let Some(path) = &args.json {
        write_file(path, &emit_json_report(&report))?;
    }
    if let Some(prefix) = &args.scan_table {
        write_file(
            Path::new(&format!("{prefix}_A.csv")),
            &emit_scan_table(&report.scan_a, &report.roots_a),
        )?;
        write_file(
            Path::new(&format!("{prefix}_B.csv")),
            &emit_scan_table(&report.scan_b, &report.roots_b),
        )?;
    }
    if let Some(path) = &args.svg {
        let shared = intersect(matrix_bounds(&a), matrix_bounds(&b));
        write_file(path, &render_svg(&row_discs(&a), &row_discs(&b), shared))?;
    }

    print_summary(out, &report, bench.as_ref()).map_err(|e| Failure::Usage(e.to_string()))
}

fn join_values(values: impl IntoIterator<Item = f64>) -> String {
    let parts: Vec<String> = values
        .into_iter()
        .map(|v| format_significant(v, 10))
        .collect();
    if parts.is_empty() {
        "(none)".to_owned()
    } else {
        parts.join(", ")
    }
}

fn root_values(roots: &[RootEstimate]) -> impl Iterator<Item = f64> + '_ {
    roots.iter().map(|r| r.value)
}

pub(crate) fn print_summary(
    out: &mut dyn Write,
    report: &CommonEigenReport,
    bench: Option<&BenchmarkSummary>,
) -> std::io::Result<()> {
    writeln!(out, "mode: {}", report.mode.as_str())?;
    writeln!(out, "bounds A: {}", report.interval_a)?;
    writeln!(out, "bounds B: {}", report.interval_b)?;
    if report.search_interval_a == report.search_interval_b {
        writeln!(out, "interval: {}", report.search_interval_a)?;
    } else {
        writeln!(out, "interval A: {}", report.search_interval_a)?;
        writeln!(out, "interval B: {}", report.search_interval_b)?;
    }
    writeln!(
        out,
        "roots A: {}",
        join_values(root_values(&report.roots_a))
    )?;
    writeln!(
        out,
        "roots B: {}",
        join_values(root_values(&report.roots_b))
    )?;
    writeln!(
        out,
        "common: {}",
        join_values(report.common.iter().copied())
    )?;
    writeln!(
        out,
        "evaluations: A {}, B {}, total {}",
        report.eval_count_a,
        report.eval_count_b,
        report.eval_count()
    )?;
    writeln!(out, "wall time: {:.6} s", report.wall_time.as_secs_f64())?;
    if let Some(b) = bench {
        writeln!(out, "benchmark: {} repetitions", b.repetitions)?;
        for s in [&b.proposed, &b.conventional] {
            writeln!(
                out,
                "  {}: median {:.6} s, evaluations {}",
                s.mode.as_str(),
                s.median_wall_time.as_secs_f64(),
                s.eval_count()
            )?;
        }
        writeln!(out, "  evaluation ratio: {:.4}", b.eval_ratio())?;
        writeln!(out, "  speedup: {:.4}", b.speedup())?;
    }
    Ok(())
}
