//! Real roots of a scalar function on an interval: a fixed-step sign-change
//! scan, bisection inside each bracketing cell, and acceptance of grid points
//! where the function is already (numerically) zero.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gerschgorin::RealInterval;

pub const DEFAULT_STEP: f64 = 0.1;
pub const DEFAULT_WIDTH_TOL: f64 = 1e-10;
pub const DEFAULT_ZERO_TOL: f64 = 1e-9;
pub const DEFAULT_DEDUPE_TOL: f64 = 1e-6;
pub const DEFAULT_MAX_ITER: usize = 200;

/// Relative slack used to decide that `(hi − lo) / step` is an integer.
const GRID_SNAP_RTOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ScanEvent {
    None,
    ZeroHit,
    /// `f` changes sign strictly between this grid point and the next.
    SignChangeAhead,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScanRecord {
    pub lambda: f64,
    pub value: f64,
    pub event: ScanEvent,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum RootOrigin {
    Bisection,
    GridZero,
    EndpointZero,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RootEstimate {
    pub value: f64,
    /// `|f(value)|`
    pub residual: f64,
    pub bracket_lo: f64,
    pub bracket_hi: f64,
    pub iterations: usize,
    pub origin: RootOrigin,
}

/// Tolerances and grid spacing for [`find_real_roots`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RootFindOptions {
    pub step: f64,
    pub width_tol: f64,
    pub zero_tol: f64,
    pub dedupe_tol: f64,
    pub max_iter: usize,
}

impl Default for RootFindOptions {
    fn default() -> Self {
        Self {
            step: DEFAULT_STEP,
            width_tol: DEFAULT_WIDTH_TOL,
            zero_tol: DEFAULT_ZERO_TOL,
            dedupe_tol: DEFAULT_DEDUPE_TOL,
            max_iter: DEFAULT_MAX_ITER,
        }
    }
}

impl RootFindOptions {
    pub fn validate(&self) -> Result<()> {
        if !(self.step > 0.0 && self.step.is_finite()) {
            return Err(Error::NonPositiveStep(self.step));
        }
        for (name, v) in [
            ("width_tol", self.width_tol),
            ("zero_tol", self.zero_tol),
            ("dedupe_tol", self.dedupe_tol),
        ] {
            check_tolerance(name, v)?;
        }
        Ok(())
    }
}

fn check_tolerance(name: &str, v: f64) -> Result<()> {
    if v >= 0.0 && v.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidConfig(format!(
            "{name} must be a finite non-negative number, got {v}"
        )))
    }
}

/// Grid points `lo + i·step` strictly below `hi`, followed by `hi` itself.
///
/// A width that is an integer multiple of `step` (up to rounding) does not
/// produce an extra point just short of `hi`.
pub fn grid(interval: RealInterval, step: f64) -> Result<Vec<f64>> {
    let (lo, hi) = interval.bounds().ok_or(Error::EmptyInterval)?;
    if !(step > 0.0 && step.is_finite()) {
        return Err(Error::NonPositiveStep(step));
    }
    let ratio = (hi - lo) / step;
    let nearest = ratio.round();
    let cells = if (ratio - nearest).abs() <= GRID_SNAP_RTOL * nearest.max(1.0) {
        nearest
    } else {
        ratio.ceil()
    } as usize;
    let mut points: Vec<f64> = (0..cells)
        .map(|i| lo + i as f64 * step)
        .take_while(|&x| x < hi)
        .collect();
    points.push(hi);
    Ok(points)
}

/// Evaluates `f` on the grid of `interval` and tags zero hits and sign changes.
///
/// A cell with a zero-hit endpoint is never tagged as a sign change; the
/// zero hit already accounts for the root there.
pub fn scan<F>(f: F, interval: RealInterval, step: f64, zero_tol: f64) -> Result<Vec<ScanRecord>>
where
    F: Fn(f64) -> f64,
{
    let points = grid(interval, step)?;
    check_tolerance("zero_tol", zero_tol)?;
    let values: Vec<f64> = points.iter().map(|&x| f(x)).collect();
    let is_zero = |v: f64| v.abs() <= zero_tol;

    let records = points
        .iter()
        .zip(&values)
        .enumerate()
        .map(|(i, (&lambda, &value))| {
            let event = if is_zero(value) {
                ScanEvent::ZeroHit
            } else {
                match values.get(i + 1) {
                    Some(&next) if !is_zero(next) && (value < 0.0) != (next < 0.0) => {
                        ScanEvent::SignChangeAhead
                    }
                    _ => ScanEvent::None,
                }
            };
            ScanRecord {
                lambda,
                value,
                event,
            }
        })
        .collect();
    Ok(records)
}

/// Bisection on `[lo, hi]`, which must carry a strict sign change.
///
/// Each iteration evaluates the midpoint once. Iteration stops when the
/// midpoint is a zero within `zero_tol`, when the bracket has shrunk to
/// `width_tol`, or when the bracket cannot be split further in floating
/// point. The returned value is the last evaluated midpoint, which is always
/// an element of the final bracket.
pub fn bisect<F>(
    f: F,
    lo: f64,
    hi: f64,
    width_tol: f64,
    zero_tol: f64,
    max_iter: usize,
) -> Result<RootEstimate>
where
    F: Fn(f64) -> f64,
{
    check_tolerance("width_tol", width_tol)?;
    check_tolerance("zero_tol", zero_tol)?;
    let f_lo = f(lo);
    let f_hi = f(hi);
    let sign_change = (f_lo < 0.0 && f_hi > 0.0) || (f_lo > 0.0 && f_hi < 0.0);
    let ordered = lo < hi;
    if !ordered || !sign_change {
        return Err(Error::InvalidBracket { lo, hi, f_lo, f_hi });
    }

    let (mut a, mut b) = (lo, hi);
    let mut fa = f_lo;

    if b - a <= width_tol {
        let (value, residual) = if fa.abs() <= f_hi.abs() {
            (a, fa.abs())
        } else {
            (b, f_hi.abs())
        };
        return Ok(RootEstimate {
            value,
            residual,
            bracket_lo: a,
            bracket_hi: b,
            iterations: 0,
            origin: RootOrigin::Bisection,
        });
    }

    let mut iterations = 0;
    loop {
        if iterations == max_iter {
            return Err(Error::MaxIterExceeded(max_iter));
        }
        let mid = a + 0.5 * (b - a);
        let fm = f(mid);
        iterations += 1;

        let done = |a: f64, b: f64| RootEstimate {
            value: mid,
            residual: fm.abs(),
            bracket_lo: a,
            bracket_hi: b,
            iterations,
            origin: RootOrigin::Bisection,
        };

        if fm.abs() <= zero_tol || mid <= a || mid >= b {
            return Ok(done(a, b));
        }
        if (fm < 0.0) == (fa < 0.0) {
            a = mid;
            fa = fm;
        } else {
            b = mid;
        }
        if b - a <= width_tol {
            return Ok(done(a, b));
        }
    }
}

/// Turns a finished scan into root estimates: zero hits are taken as-is,
/// every sign-change cell is refined by bisection, and near-duplicates are
/// merged.
pub fn roots_from_scan<F>(
    f: F,
    records: &[ScanRecord],
    opts: &RootFindOptions,
) -> Result<Vec<RootEstimate>>
where
    F: Fn(f64) -> f64,
{
    opts.validate()?;
    let last = records.len().saturating_sub(1);
    let mut roots = Vec::new();
    for (i, rec) in records.iter().enumerate() {
        match rec.event {
            ScanEvent::ZeroHit => roots.push(RootEstimate {
                value: rec.lambda,
                residual: rec.value.abs(),
                bracket_lo: rec.lambda,
                bracket_hi: rec.lambda,
                iterations: 0,
                origin: if i == 0 || i == last {
                    RootOrigin::EndpointZero
                } else {
                    RootOrigin::GridZero
                },
            }),
            ScanEvent::SignChangeAhead => {
                let next = records[i + 1].lambda;
                roots.push(bisect(
                    &f,
                    rec.lambda,
                    next,
                    opts.width_tol,
                    opts.zero_tol,
                    opts.max_iter,
                )?);
            }
            ScanEvent::None => {}
        }
    }
    Ok(dedupe(roots, opts.dedupe_tol))
}

/// Real roots of `f` on `interval`, sorted ascending, consecutive gaps
/// greater than `opts.dedupe_tol`.
///
/// Roots of even multiplicity are found only if they land on the grid, and
/// two roots sharing one grid cell cancel each other out.
pub fn find_real_roots<F>(
    f: F,
    interval: RealInterval,
    opts: &RootFindOptions,
) -> Result<Vec<RootEstimate>>
where
    F: Fn(f64) -> f64,
{
    opts.validate()?;
    let records = scan(&f, interval, opts.step, opts.zero_tol)?;
    roots_from_scan(&f, &records, opts)
}

fn dedupe(mut roots: Vec<RootEstimate>, tol: f64) -> Vec<RootEstimate> {
    roots.sort_by(|a, b| a.value.total_cmp(&b.value));
    let mut out: Vec<RootEstimate> = Vec::with_capacity(roots.len());
    let mut cluster_end = f64::NEG_INFINITY;
    for r in roots {
        match out.last_mut() {
            Some(best) if r.value - cluster_end <= tol => {
                if r.residual < best.residual {
                    *best = r;
                }
            }
            _ => out.push(r),
        }
        cluster_end = r.value;
    }
    out
}
