//! End-to-end search for shared real eigenvalues in both search modes.
//!
//! ```bash
//! cargo run -p common-eig --example common_eigenvalues
//! cargo run -p common-eig --example common_eigenvalues -- A.mat B.mat
//! ```

use common_eig::report::emit_json_report;
use common_eig::{common_eigenvalues, parse_matrix, AnalysisConfig, DenseMatrix, Mode};

fn load(path: Option<String>, fallback: &str) -> Result<DenseMatrix, Box<dyn std::error::Error>> {
    let text = match path {
        Some(p) => std::fs::read_to_string(p)?,
        None => fallback.to_owned(),
    };
    Ok(parse_matrix(&text)?)
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let a = load(args.next(), include_str!("../data/sample_a.mat"))?;
    let b = load(args.next(), include_str!("../data/sample_b.mat"))?;

    for mode in [Mode::Proposed, Mode::Conventional] {
        let report = common_eigenvalues(&a, &b, &AnalysisConfig::default().with_mode(mode))?;
        println!(
            "{:<12} search A {} B {}  evals {:>4}  common {:?}",
            mode.as_str(),
            report.search_interval_a,
            report.search_interval_b,
            report.eval_count(),
            report.common
        );
        if mode == Mode::Proposed {
            println!("{}", emit_json_report(&report));
        }
    }
    Ok(())
}
