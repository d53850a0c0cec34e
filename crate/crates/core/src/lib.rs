//! Real eigenvalues common to two matrices, located by intersecting
//! Gerschgorin inclusion intervals and scanning `det(λI − M)` for sign
//! changes and zeros, refined by bisection.
//!
//! ```
//! use common_eig::{common_eigenvalues, AnalysisConfig, DenseMatrix};
//!
//! let a: DenseMatrix = "3\n3 1 4\n0 2 6\n0 0 5\n".parse().unwrap();
//! let b: DenseMatrix = "3\n3 -1 0\n-1 2 -1\n0 -1 3\n".parse().unwrap();
//! let report = common_eigenvalues(&a, &b, &AnalysisConfig::default()).unwrap();
//! assert_eq!(report.common.len(), 1);
//! assert!((report.common[0] - 3.0).abs() < 1e-8);
//! ```

pub mod cli;
pub mod error;
pub mod gerschgorin;
pub mod matrix;
pub mod report;
pub mod rootfind;
pub mod spectrum;

pub use error::{Error, ParseError, Result};
pub use gerschgorin::{
    col_discs, intersect, interval_of, matrix_bounds, row_discs, Axis, Disc, RealInterval,
};
pub use matrix::{char_fn, determinant, lu_factor, parse_matrix, DenseMatrix, LuFactors};
pub use rootfind::{
    bisect, find_real_roots, scan, RootEstimate, RootFindOptions, RootOrigin, ScanEvent, ScanRecord,
};
pub use spectrum::{
    common_eigenvalues, match_roots, run_benchmark, AnalysisConfig, BenchmarkSummary,
    CommonEigenReport, Mode, ModeStats,
};
