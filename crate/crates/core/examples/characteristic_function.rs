//! LU factorization, determinants, and `det(λI − M)` evaluated against the
//! factored form of each sample matrix's characteristic polynomial.
//!
//! ```bash
//! cargo run -p common-eig --example characteristic_function
//! ```

use common_eig::{char_fn, determinant, lu_factor, DenseMatrix};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let a: DenseMatrix = include_str!("../data/sample_a.mat").parse()?;
    let b: DenseMatrix = include_str!("../data/sample_b.mat").parse()?;

    let lu = lu_factor(&b);
    println!(
        "LU of B: permutation {:?}, parity {}, pivots {:?}",
        lu.permutation(),
        lu.parity(),
        lu.pivots().collect::<Vec<_>>()
    );
    println!("det A = {}, det B = {}", determinant(&a), determinant(&b));

    println!(
        "{:>6} {:>12} {:>16} {:>12} {:>16}",
        "λ", "f_A", "(λ-2)(λ-3)(λ-5)", "f_B", "(λ-1)(λ-3)(λ-4)"
    );
    for i in 0..=10 {
        let lambda = 0.5 * f64::from(i);
        println!(
            "{lambda:>6.2} {:>12.6} {:>16.6} {:>12.6} {:>16.6}",
            char_fn(&a, lambda),
            (lambda - 2.0) * (lambda - 3.0) * (lambda - 5.0),
            char_fn(&b, lambda),
            (lambda - 1.0) * (lambda - 3.0) * (lambda - 4.0),
        );
    }
    Ok(())
}
