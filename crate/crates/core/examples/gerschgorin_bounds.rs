//! Row and column Gerschgorin discs of the two sample matrices, the
//! real-axis bounds they imply, and the shared search interval.
//!
//! ```bash
//! cargo run -p common-eig --example gerschgorin_bounds
//! ```

use common_eig::{col_discs, intersect, interval_of, matrix_bounds, row_discs, DenseMatrix};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let a: DenseMatrix = include_str!("../data/sample_a.mat").parse()?;
    let b: DenseMatrix = include_str!("../data/sample_b.mat").parse()?;

    for (name, m) in [("A", &a), ("B", &b)] {
        println!("matrix {name}");
        for (row, col) in row_discs(m).iter().zip(col_discs(m)) {
            println!(
                "  k={}  center {:>4}  row radius {:>4}  column radius {:>4}",
                row.index, row.center, row.radius, col.radius
            );
        }
        println!("  row interval    {}", interval_of(&row_discs(m))?);
        println!("  column interval {}", interval_of(&col_discs(m))?);
        println!("  bounds          {}", matrix_bounds(m));
    }
    println!(
        "shared search interval {}",
        intersect(matrix_bounds(&a), matrix_bounds(&b))
    );
    Ok(())
}
