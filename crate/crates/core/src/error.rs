use thiserror::Error;

/// Failures while reading a matrix file or building a [`DenseMatrix`](crate::DenseMatrix).
#[derive(Debug, Clone, PartialEq, Error)]
pub enum ParseError {
    #[error("input contains no matrix")]
    EmptyInput,
    #[error("line {line}: expected a positive integer order, found `{token}`")]
    InvalidOrder { line: usize, token: String },
    #[error("matrix is not square: {detail}")]
    NonSquare { detail: String },
    #[error("line {line}, column {column}: `{token}` is not a number")]
    NonNumericToken {
        line: usize,
        column: usize,
        token: String,
    },
    #[error("line {line}, column {column}: entry is not finite")]
    NonFiniteValue { line: usize, column: usize },
    #[error("line {line}: unexpected content after the last matrix row")]
    TrailingContent { line: usize },
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("disc list is empty")]
    EmptyDiscList,
    #[error("search interval is empty")]
    EmptyInterval,
    #[error("invalid interval [{lo}, {hi}]")]
    InvalidInterval { lo: f64, hi: f64 },
    #[error("grid step must be positive, got {0}")]
    NonPositiveStep(f64),
    #[error("no strict sign change on [{lo}, {hi}]: f(lo) = {f_lo}, f(hi) = {f_hi}")]
    InvalidBracket {
        lo: f64,
        hi: f64,
        f_lo: f64,
        f_hi: f64,
    },
    #[error("bisection did not converge within {0} iterations")]
    MaxIterExceeded(usize),
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("proposed common set {proposed:?} is not contained in conventional common set {conventional:?}")]
    InconsistentModes {
        proposed: Vec<f64>,
        conventional: Vec<f64>,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
