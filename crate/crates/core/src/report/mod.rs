//! Output formats: CSV scan tables, the JSON report and SVG disc diagrams.

mod csv;
mod json;
mod svg;

pub use csv::emit_scan_table;
pub use json::emit_json_report;
pub use svg::render_svg;

/// Rounds to `digits` significant digits and prints the shortest decimal
/// form of the result (`3.0000000001` at 10 digits prints as `3`).
pub fn format_significant(x: f64, digits: usize) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{}", if x == 0.0 { 0.0 } else { x });
    }
    let rounded: f64 = format!("{:.*e}", digits.saturating_sub(1), x)
        .parse()
        .expect("formatted float parses");
    format!("{rounded}")
}

#[cfg(test)]
mod tests {
    use super::format_significant;

    #[test]
    fn significant_digits() {
        assert_eq!(format_significant(3.0000000000000004, 10), "3");
        assert_eq!(format_significant(2.999999999987, 10), "3");
        assert_eq!(format_significant(1.23456789012345, 10), "1.23456789");
        assert_eq!(format_significant(-0.0, 10), "0");
        assert_eq!(format_significant(1e-20, 10), "0.00000000000000000001");
    }
}
