//! Sign-change scan of `det(λI − M)` over the shared interval, printed as
//! CSV scan tables together with the roots each scan yields.
//!
//! ```bash
//! cargo run -p common-eig --example scan_table
//! ```

use common_eig::report::emit_scan_table;
use common_eig::rootfind::roots_from_scan;
use common_eig::{char_fn, intersect, matrix_bounds, scan, DenseMatrix, RootFindOptions};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let a: DenseMatrix = include_str!("../data/sample_a.mat").parse()?;
    let b: DenseMatrix = include_str!("../data/sample_b.mat").parse()?;
    let interval = intersect(matrix_bounds(&a), matrix_bounds(&b));
    let opts = RootFindOptions::default();

    for (name, m) in [("A", &a), ("B", &b)] {
        let f = |x: f64| char_fn(m, x);
        let records = scan(f, interval, opts.step, opts.zero_tol)?;
        let roots = roots_from_scan(f, &records, &opts)?;
        println!("# matrix {name} over {interval}");
        print!("{}", emit_scan_table(&records, &roots));
        for r in &roots {
            println!(
                "# root {:.10} ({:?}, residual {:e})",
                r.value, r.origin, r.residual
            );
        }
    }
    Ok(())
}
