use serde::{Serialize, Serializer};

use crate::gerschgorin::RealInterval;
use crate::rootfind::{RootEstimate, RootOrigin};
use crate::spectrum::{CommonEigenReport, Mode};

#[derive(Serialize)]
struct ReportJson<'a> {
    mode: Mode,
    interval_a: IntervalJson,
    interval_b: IntervalJson,
    search_interval_a: IntervalJson,
    search_interval_b: IntervalJson,
    roots_a: Vec<RootJson>,
    roots_b: Vec<RootJson>,
    common: &'a [f64],
    eval_count_a: usize,
    eval_count_b: usize,
    wall_time_seconds: f64,
}

#[derive(Serialize)]
struct IntervalJson {
    #[serde(serialize_with = "compact_bound")]
    lo: Option<f64>,
    #[serde(serialize_with = "compact_bound")]
    hi: Option<f64>,
    empty: bool,
}

impl From<RealInterval> for IntervalJson {
    fn from(iv: RealInterval) -> Self {
        Self {
            lo: iv.lo(),
            hi: iv.hi(),
            empty: iv.is_empty(),
        }
    }
}

#[derive(Serialize)]
struct RootJson {
    value: f64,
    residual: f64,
    iterations: usize,
    origin: RootOrigin,
}

impl From<&RootEstimate> for RootJson {
    fn from(r: &RootEstimate) -> Self {
        Self {
            value: r.value,
            residual: r.residual,
            iterations: r.iterations,
            origin: r.origin,
        }
    }
}

const EXACT_INT_LIMIT: f64 = 9_007_199_254_740_992.0;

/// Integral bounds print as integers (`0`, not `0.0`); empty bounds as `null`.
fn compact_bound<S: Serializer>(v: &Option<f64>, s: S) -> Result<S::Ok, S::Error> {
    match *v {
        Some(x)
            if x.fract() == 0.0
                && x.abs() < EXACT_INT_LIMIT
                && !(x == 0.0 && x.is_sign_negative()) =>
        {
            s.serialize_i64(x as i64)
        }
        Some(x) => s.serialize_f64(x),
        None => s.serialize_none(),
    }
}

/// Serializes the report as one JSON object with a fixed key order. Floats
/// are written in shortest round-trip form.
pub fn emit_json_report(report: &CommonEigenReport) -> String {
    let json = ReportJson {
        mode: report.mode,
        interval_a: report.interval_a.into(),
        interval_b: report.interval_b.into(),
        search_interval_a: report.search_interval_a.into(),
        search_interval_b: report.search_interval_b.into(),
        roots_a: report.roots_a.iter().map(RootJson::from).collect(),
        roots_b: report.roots_b.iter().map(RootJson::from).collect(),
        common: &report.common,
        eval_count_a: report.eval_count_a,
        eval_count_b: report.eval_count_b,
        wall_time_seconds: report.wall_time.as_secs_f64(),
    };
    serde_json::to_string(&json).expect("report serializes")
}
