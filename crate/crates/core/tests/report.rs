mod common;

use common::*;
use common_eig::report::{emit_json_report, emit_scan_table, render_svg};
use common_eig::{
    common_eigenvalues, intersect, matrix_bounds, row_discs, AnalysisConfig, DenseMatrix,
};
use proptest::prelude::*;

#[test]
fn sample_scan_tables() {
    let r = common_eigenvalues(&sample_a(), &sample_b(), &AnalysisConfig::default()).unwrap();
    let csv_a = emit_scan_table(&r.scan_a, &r.roots_a);
    let lines: Vec<&str> = csv_a.lines().collect();
    assert_eq!(lines[0], "sr_no,lambda,det,remark");
    assert_eq!(lines[1], "1,0,-30.0000,");
    assert_eq!(lines[2], "2,0.1,-26.9990,");
    assert_eq!(lines[21], "21,2,0.0000,root=2");
    assert_eq!(lines[30], "30,2.9,0.1890,");
    assert_eq!(lines[31], "31,3,0.0000,root=3");
    assert_eq!(lines.len(), r.scan_a.len() + 1);

    let csv_b = emit_scan_table(&r.scan_b, &r.roots_b);
    let lines: Vec<&str> = csv_b.lines().collect();
    assert_eq!(lines[1], "1,0,-12.0000,");
    assert_eq!(lines[2], "2,0.1,-10.1790,");
    assert_eq!(lines[10], "10,0.9,-0.6510,");
    assert_eq!(lines[30], "30,2.9,0.2090,");
    assert_eq!(lines[41], "41,4,0.0000,root=4");
    assert!(!csv_b.contains('\r'));
}

#[test]
fn sample_svg_structure() {
    let (a, b) = (sample_a(), sample_b());
    let shared = intersect(matrix_bounds(&a), matrix_bounds(&b));
    let svg = render_svg(&row_discs(&a), &row_discs(&b), shared);
    assert_eq!(svg.matches("<circle class=\"disc-a\"").count(), 3);
    assert_eq!(svg.matches("<circle class=\"disc-b\"").count(), 3);
    assert!(svg.contains(r#"<rect class="band" x="0.000000""#));
    assert!(svg.contains(r#"width="4.000000""#));
    assert_eq!(svg, render_svg(&row_discs(&a), &row_discs(&b), shared));
}

#[test]
fn json_examples() {
    let r = common_eigenvalues(&sample_a(), &sample_b(), &AnalysisConfig::default()).unwrap();
    let text = emit_json_report(&r);
    assert!(
        text.contains(r#""search_interval_a":{"lo":0,"hi":4,"empty":false}"#),
        "{text}"
    );
    assert!(text.contains(r#""common":[3.0"#), "{text}");

    let empty = common_eigenvalues(
        &DenseMatrix::from_diagonal(&[1.0]),
        &DenseMatrix::from_diagonal(&[10.0]),
        &AnalysisConfig::default(),
    )
    .unwrap();
    let text = emit_json_report(&empty);
    assert!(text.contains(r#""common":[]"#));
    assert!(text.contains(r#""search_interval_a":{"lo":null,"hi":null,"empty":true}"#));
    assert!(text.contains(r#""eval_count_a":0,"eval_count_b":0"#));

    let same = common_eigenvalues(&sample_a(), &sample_a(), &AnalysisConfig::default()).unwrap();
    let v: serde_json::Value = serde_json::from_str(&emit_json_report(&same)).unwrap();
    assert_eq!(v["common"].as_array().unwrap().len(), 3);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn json_numbers_round_trip(seed in any::<u64>(), n in 2usize..6) {
        let mut r = rng(seed);
        let a = random_symmetric(&mut r, n, 2.0);
        let b = random_symmetric(&mut r, n, 2.0);
        let report = common_eigenvalues(&a, &b, &AnalysisConfig::default()).unwrap();
        let v: serde_json::Value = serde_json::from_str(&emit_json_report(&report)).unwrap();
        for (key, roots) in [("roots_a", &report.roots_a), ("roots_b", &report.roots_b)] {
            let arr = v[key].as_array().unwrap();
            prop_assert_eq!(arr.len(), roots.len());
            for (j, root) in arr.iter().zip(roots.iter()) {
                prop_assert_eq!(j["value"].as_f64().unwrap().to_bits(), root.value.to_bits());
                prop_assert_eq!(j["residual"].as_f64().unwrap().to_bits(), root.residual.to_bits());
                prop_assert_eq!(j["iterations"].as_u64().unwrap() as usize, root.iterations);
            }
        }
        for (key, iv) in [("interval_a", report.interval_a), ("search_interval_b", report.search_interval_b)] {
            prop_assert_eq!(v[key]["empty"].as_bool().unwrap(), iv.is_empty());
            if let Some((lo, hi)) = iv.bounds() {
                prop_assert_eq!(v[key]["lo"].as_f64().unwrap().to_bits(), lo.to_bits());
                prop_assert_eq!(v[key]["hi"].as_f64().unwrap().to_bits(), hi.to_bits());
            }
        }
        prop_assert_eq!(v["wall_time_seconds"].as_f64().unwrap(), report.wall_time.as_secs_f64());
    }

    #[test]
    fn csv_row_count(seed in any::<u64>(), n in 1usize..6) {
        let m = random_symmetric(&mut rng(seed), n, 3.0);
        let r = common_eigenvalues(&m, &m, &AnalysisConfig::default()).unwrap();
        prop_assert_eq!(emit_scan_table(&r.scan_a, &r.roots_a).lines().count(), r.scan_a.len() + 1);
    }
}
