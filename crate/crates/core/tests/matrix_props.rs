mod common;

use common::*;
use common_eig::{char_fn, determinant, matrix_bounds, parse_matrix, DenseMatrix};
use proptest::prelude::*;

fn integer_matrix() -> impl Strategy<Value = Vec<Vec<f64>>> {
    (1usize..=5).prop_flat_map(|n| {
        prop::collection::vec(prop::collection::vec((-9i32..=9).prop_map(f64::from), n), n)
    })
}

fn real_matrix() -> impl Strategy<Value = Vec<Vec<f64>>> {
    (1usize..=6)
        .prop_flat_map(|n| prop::collection::vec(prop::collection::vec(-10.0f64..10.0, n), n))
}

#[test]
fn oracle_sanity() {
    assert_eq!(cofactor_det(&to_rows(&sample_a())), 30.0);
    assert_eq!(cofactor_det(&to_rows(&sample_b())), 12.0);
    let ev = jacobi_eigenvalues(&sample_b());
    for (got, want) in ev.iter().zip([1.0, 3.0, 4.0]) {
        assert!((got - want).abs() < 1e-12, "{ev:?}");
    }
}

proptest! {
    #[test]
    fn determinant_matches_cofactor_expansion(rows in integer_matrix()) {
        let m = DenseMatrix::from_rows(&rows).unwrap();
        let want = cofactor_det(&rows);
        let got = determinant(&m);
        if want == 0.0 {
            prop_assert!(got.abs() <= 1e-9, "got {got}");
        } else {
            prop_assert!(rel_err(got, want) <= 1e-9, "got {got}, want {want}");
        }
    }

    #[test]
    fn triangular_determinant_is_diagonal_product(
        diag in prop::collection::vec(-5.0f64..5.0, 1..7),
        seed in any::<u64>(),
    ) {
        let m = random_upper_triangular(&mut rng(seed), &diag, 3.0);
        let want: f64 = diag.iter().product();
        let got = determinant(&m);
        prop_assert!(rel_err(got, want) <= 1e-12 || (want.abs() < 1e-300 && got == 0.0), "{got} vs {want}");
    }

    #[test]
    fn char_fn_positive_above_bounds(rows in real_matrix()) {
        let m = DenseMatrix::from_rows(&rows).unwrap();
        let hi = matrix_bounds(&m).hi().unwrap();
        prop_assert!(char_fn(&m, hi + 1.0) > 0.0);
    }

    #[test]
    fn char_fn_of_triangular_matches_closed_form(
        diag in prop::collection::vec(-5.0f64..5.0, 3),
        lambda in -8.0f64..8.0,
        seed in any::<u64>(),
    ) {
        let m = random_upper_triangular(&mut rng(seed), &diag, 2.0);
        let want: f64 = diag.iter().map(|d| lambda - d).product();
        let got = char_fn(&m, lambda);
        // The singular cutoff maps values within ~1e-13 of a root to an exact zero.
        let scale = (1.0 + lambda.abs()).powi(3) + 1.0;
        prop_assert!(rel_err(got, want) <= 1e-10 || (got - want).abs() <= 1e-12 * scale, "{got} vs {want}");
    }

    #[test]
    fn render_then_parse_is_identity(rows in real_matrix()) {
        let m = DenseMatrix::from_rows(&rows).unwrap();
        prop_assert_eq!(parse_matrix(&m.to_string()).unwrap(), m);
    }
}
