//! Writes the disc diagram of both sample matrices, with the shared
//! interval shaded, to an SVG file.
//!
//! ```bash
//! cargo run -p common-eig --example disc_diagram -- discs.svg
//! ```

use common_eig::report::render_svg;
use common_eig::{intersect, matrix_bounds, row_discs, DenseMatrix};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "discs.svg".to_owned());
    let a: DenseMatrix = include_str!("../data/sample_a.mat").parse()?;
    let b: DenseMatrix = include_str!("../data/sample_b.mat").parse()?;

    let shared = intersect(matrix_bounds(&a), matrix_bounds(&b));
    std::fs::write(&path, render_svg(&row_discs(&a), &row_discs(&b), shared))?;
    println!("wrote {path}");
    Ok(())
}
