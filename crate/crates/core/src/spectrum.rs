//! The common-eigenvalue pipeline: Gerschgorin bounds for both matrices, a
//! search interval chosen by [`Mode`], per-matrix root finding on
//! `det(λI − M)`, and pairing of the two root lists.

use std::cell::Cell;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gerschgorin::{intersect, matrix_bounds, RealInterval};
use crate::matrix::{char_fn, DenseMatrix};
use crate::rootfind::{self, roots_from_scan, scan, RootEstimate, RootFindOptions, ScanRecord};

pub const DEFAULT_MATCH_TOL: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Both matrices are searched only on the intersection of their bounds.
    Proposed,
    /// Each matrix is searched on its own full bounds.
    Conventional,
    /// Proposed search, cross-checked against a conventional run.
    Both,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Proposed => "proposed",
            Mode::Conventional => "conventional",
            Mode::Both => "both",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AnalysisConfig {
    pub mode: Mode,
    pub step: f64,
    pub width_tol: f64,
    pub zero_tol: f64,
    pub match_tol: f64,
    pub dedupe_tol: f64,
    pub max_iter: usize,
}

impl Default for AnalysisConfig {
    fn default() -> Self {
        Self {
            mode: Mode::Proposed,
            step: rootfind::DEFAULT_STEP,
            width_tol: rootfind::DEFAULT_WIDTH_TOL,
            zero_tol: rootfind::DEFAULT_ZERO_TOL,
            match_tol: DEFAULT_MATCH_TOL,
            dedupe_tol: rootfind::DEFAULT_DEDUPE_TOL,
            max_iter: rootfind::DEFAULT_MAX_ITER,
        }
    }
}

impl AnalysisConfig {
    pub fn with_mode(self, mode: Mode) -> Self {
        Self { mode, ..self }
    }

    pub fn root_options(&self) -> RootFindOptions {
        RootFindOptions {
            step: self.step,
            width_tol: self.width_tol,
            zero_tol: self.zero_tol,
            dedupe_tol: self.dedupe_tol,
            max_iter: self.max_iter,
        }
    }

    pub fn validate(&self) -> Result<()> {
        self.root_options().validate()?;
        if !(self.match_tol.is_finite() && self.match_tol >= self.width_tol) {
            return Err(Error::InvalidConfig(format!(
                "match_tol ({}) must be finite and at least width_tol ({})",
                self.match_tol, self.width_tol
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CommonEigenReport {
    pub mode: Mode,
    pub interval_a: RealInterval,
    pub interval_b: RealInterval,
    pub search_interval_a: RealInterval,
    pub search_interval_b: RealInterval,
    pub roots_a: Vec<RootEstimate>,
    pub roots_b: Vec<RootEstimate>,
    pub common: Vec<f64>,
    pub eval_count_a: usize,
    pub eval_count_b: usize,
    pub wall_time: Duration,
    /// Grid records of each scan; empty when the search interval is empty.
    pub scan_a: Vec<ScanRecord>,
    pub scan_b: Vec<ScanRecord>,
}

impl CommonEigenReport {
    pub fn eval_count(&self) -> usize {
        self.eval_count_a + self.eval_count_b
    }
}

struct MatrixSearch {
    records: Vec<ScanRecord>,
    roots: Vec<RootEstimate>,
    evals: usize,
}

fn search_matrix(
    m: &DenseMatrix,
    interval: RealInterval,
    opts: &RootFindOptions,
) -> Result<MatrixSearch> {
    if interval.is_empty() {
        return Ok(MatrixSearch {
            records: Vec::new(),
            roots: Vec::new(),
            evals: 0,
        });
    }
    let evals = Cell::new(0usize);
    let f = |lambda: f64| {
        evals.set(evals.get() + 1);
        char_fn(m, lambda)
    };
    let records = scan(f, interval, opts.step, opts.zero_tol)?;
    let roots = roots_from_scan(f, &records, opts)?;
    Ok(MatrixSearch {
        records,
        roots,
        evals: evals.get(),
    })
}

fn run_single(
    a: &DenseMatrix,
    b: &DenseMatrix,
    cfg: &AnalysisConfig,
    proposed: bool,
) -> Result<CommonEigenReport> {
    let start = Instant::now();
    let interval_a = matrix_bounds(a);
    let interval_b = matrix_bounds(b);
    let (search_a, search_b) = if proposed {
        let shared = intersect(interval_a, interval_b);
        (shared, shared)
    } else {
        (interval_a, interval_b)
    };
    let opts = cfg.root_options();
    let found_a = search_matrix(a, search_a, &opts)?;
    let found_b = search_matrix(b, search_b, &opts)?;
    let common = match_roots(&found_a.roots, &found_b.roots, cfg.match_tol);
    let wall_time = start.elapsed();

    Ok(CommonEigenReport {
        mode: if proposed {
            Mode::Proposed
        } else {
            Mode::Conventional
        },
        interval_a,
        interval_b,
        search_interval_a: search_a,
        search_interval_b: search_b,
        roots_a: found_a.roots,
        roots_b: found_b.roots,
        common,
        eval_count_a: found_a.evals,
        eval_count_b: found_b.evals,
        wall_time,
        scan_a: found_a.records,
        scan_b: found_b.records,
    })
}

/// Real eigenvalues shared by `a` and `b`.
///
/// An empty result is a valid outcome. With [`Mode::Both`] the proposed
/// report is returned (tagged `Both`) after a conventional run confirms that
/// it finds every common value the proposed run found.
pub fn common_eigenvalues(
    a: &DenseMatrix,
    b: &DenseMatrix,
    cfg: &AnalysisConfig,
) -> Result<CommonEigenReport> {
    cfg.validate()?;
    match cfg.mode {
        Mode::Proposed => run_single(a, b, cfg, true),
        Mode::Conventional => run_single(a, b, cfg, false),
        Mode::Both => {
            let proposed = run_single(a, b, cfg, true)?;
            let conventional = run_single(a, b, cfg, false)?;
            check_consistent(&proposed.common, &conventional.common, cfg.match_tol)?;
            Ok(CommonEigenReport {
                mode: Mode::Both,
                ..proposed
            })
        }
    }
}

/// Greedy two-pointer pairing of sorted root lists. Each root is used at
/// most once; a matched pair yields its midpoint.
pub fn match_roots(roots_a: &[RootEstimate], roots_b: &[RootEstimate], match_tol: f64) -> Vec<f64> {
    let (mut i, mut j) = (0, 0);
    let mut common = Vec::new();
    while i < roots_a.len() && j < roots_b.len() {
        let (ra, rb) = (roots_a[i].value, roots_b[j].value);
        if (ra - rb).abs() <= match_tol {
            common.push(0.5 * (ra + rb));
            i += 1;
            j += 1;
        } else if ra < rb {
            i += 1;
        } else {
            j += 1;
        }
    }
    common
}

fn check_consistent(proposed: &[f64], conventional: &[f64], tol: f64) -> Result<()> {
    let covered = proposed
        .iter()
        .all(|p| conventional.iter().any(|c| (p - c).abs() <= tol));
    if covered {
        Ok(())
    } else {
        Err(Error::InconsistentModes {
            proposed: proposed.to_vec(),
            conventional: conventional.to_vec(),
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ModeStats {
    pub mode: Mode,
    pub median_wall_time: Duration,
    pub eval_count_a: usize,
    pub eval_count_b: usize,
    pub common: Vec<f64>,
}

impl ModeStats {
    pub fn eval_count(&self) -> usize {
        self.eval_count_a + self.eval_count_b
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchmarkSummary {
    pub repetitions: usize,
    pub proposed: ModeStats,
    pub conventional: ModeStats,
}

impl BenchmarkSummary {
    /// Conventional over proposed `char_fn` evaluations per run.
    pub fn eval_ratio(&self) -> f64 {
        self.conventional.eval_count() as f64 / self.proposed.eval_count() as f64
    }

    /// Conventional over proposed median wall time.
    pub fn speedup(&self) -> f64 {
        self.conventional.median_wall_time.as_secs_f64()
            / self.proposed.median_wall_time.as_secs_f64()
    }
}

/// Times both modes `repetitions` times each, interleaved, after one
/// untimed warm-up of each.
pub fn run_benchmark(
    a: &DenseMatrix,
    b: &DenseMatrix,
    cfg: &AnalysisConfig,
    repetitions: usize,
) -> Result<BenchmarkSummary> {
    if repetitions == 0 {
        return Err(Error::InvalidConfig(
            "repetitions must be at least 1".into(),
        ));
    }
    cfg.validate()?;
    let first_p = run_single(a, b, cfg, true)?;
    let first_c = run_single(a, b, cfg, false)?;
    check_consistent(&first_p.common, &first_c.common, cfg.match_tol)?;

    let mut times_p = Vec::with_capacity(repetitions);
    let mut times_c = Vec::with_capacity(repetitions);
    for _ in 0..repetitions {
        times_p.push(run_single(a, b, cfg, true)?.wall_time);
        times_c.push(run_single(a, b, cfg, false)?.wall_time);
    }

    let stats = |r: CommonEigenReport, times: Vec<Duration>| ModeStats {
        mode: r.mode,
        median_wall_time: median(times),
        eval_count_a: r.eval_count_a,
        eval_count_b: r.eval_count_b,
        common: r.common,
    };
    Ok(BenchmarkSummary {
        repetitions,
        proposed: stats(first_p, times_p),
        conventional: stats(first_c, times_c),
    })
}

fn median(mut times: Vec<Duration>) -> Duration {
    times.sort_unstable();
    let n = times.len();
    if n % 2 == 1 {
        times[n / 2]
    } else {
        (times[n / 2 - 1] + times[n / 2]) / 2
    }
}
