//! Work and wall-time comparison of the proposed and conventional modes.
//!
//! ```bash
//! cargo run --release -p common-eig --example benchmark -- 200
//! ```

use common_eig::{run_benchmark, AnalysisConfig, DenseMatrix};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let repetitions: usize = std::env::args()
        .nth(1)
        .map(|s| s.parse())
        .transpose()?
        .unwrap_or(50);
    let a: DenseMatrix = include_str!("../data/sample_a.mat").parse()?;
    let b: DenseMatrix = include_str!("../data/sample_b.mat").parse()?;

    let summary = run_benchmark(&a, &b, &AnalysisConfig::default(), repetitions)?;
    for s in [&summary.proposed, &summary.conventional] {
        println!(
            "{:<12} median {:>10.3?}  evaluations A {:>4} B {:>4}  common {:?}",
            s.mode.as_str(),
            s.median_wall_time,
            s.eval_count_a,
            s.eval_count_b,
            s.common
        );
    }
    println!("evaluation ratio {:.3}", summary.eval_ratio());
    println!("speedup          {:.3}", summary.speedup());
    Ok(())
}
