use std::fmt::Write;

use crate::rootfind::{RootEstimate, ScanEvent, ScanRecord};

use super::format_significant;

/// Renders scan records in the layout `sr_no,lambda,det,remark`.
///
/// `lambda` uses at most four decimals with trailing zeros trimmed; `det`
/// uses four decimals, switching to scientific notation for nonzero values
/// below `1e-3` in magnitude. Zero hits are annotated with the nearest
/// reported root.
pub fn emit_scan_table(records: &[ScanRecord], roots: &[RootEstimate]) -> String {
    let mut out = String::from("sr_no,lambda,det,remark\n");
    for (i, rec) in records.iter().enumerate() {
        let remark = match rec.event {
            ScanEvent::ZeroHit => {
                let root = roots
                    .iter()
                    .map(|r| r.value)
                    .min_by(|a, b| (a - rec.lambda).abs().total_cmp(&(b - rec.lambda).abs()))
                    .unwrap_or(rec.lambda);
                format!("root={}", format_significant(root, 10))
            }
            ScanEvent::SignChangeAhead => "sign change".to_owned(),
            ScanEvent::None => String::new(),
        };
        writeln!(
            out,
            "{},{},{},{}",
            i + 1,
            format_lambda(rec.lambda),
            format_det(rec.value),
            remark
        )
        .expect("writing to a String");
    }
    out
}

fn format_lambda(x: f64) -> String {
    let s = format!("{x:.4}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        "0".to_owned()
    } else {
        s.to_owned()
    }
}

fn format_det(x: f64) -> String {
    if x != 0.0 && x.abs() < 1e-3 {
        format!("{x:.4e}")
    } else if x == 0.0 {
        "0.0000".to_owned()
    } else {
        format!("{x:.4}")
    }
}
