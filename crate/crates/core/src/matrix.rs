//! Dense real square matrices, LU factorization with partial pivoting and the
//! characteristic function `f(λ) = det(λI − M)`.

use std::fmt;
use std::ops::Index;
use std::str::FromStr;

use crate::error::ParseError;

/// Relative pivot threshold; a pivot column whose largest entry is at most
/// `PIVOT_RTOL * max(1, ‖M‖∞)` marks the factorization singular.
pub const PIVOT_RTOL: f64 = 1e-13;

/// A real `n × n` matrix with finite entries, stored row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix {
    order: usize,
    entries: Vec<f64>,
}

impl DenseMatrix {
    /// Builds a matrix from row vectors. Rows must all have length equal to
    /// the row count, and every entry must be finite.
    pub fn from_rows<R: AsRef<[f64]>>(rows: &[R]) -> Result<Self, ParseError> {
        let order = rows.len();
        if order == 0 {
            return Err(ParseError::EmptyInput);
        }
        let mut entries = Vec::with_capacity(order * order);
        for (r, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != order {
                return Err(ParseError::NonSquare {
                    detail: format!("row {} has {} entries, expected {order}", r + 1, row.len()),
                });
            }
            for (c, &v) in row.iter().enumerate() {
                if !v.is_finite() {
                    return Err(ParseError::NonFiniteValue {
                        line: r + 1,
                        column: c + 1,
                    });
                }
            }
            entries.extend_from_slice(row);
        }
        Ok(Self { order, entries })
    }

    pub fn identity(order: usize) -> Self {
        let mut m = Self::zeros(order);
        for k in 0..order {
            m.entries[k * order + k] = 1.0;
        }
        m
    }

    /// # Panics
    /// If `order` is zero.
    pub fn zeros(order: usize) -> Self {
        assert!(order > 0, "matrix order must be positive");
        Self {
            order,
            entries: vec![0.0; order * order],
        }
    }

    /// # Panics
    /// If `diagonal` is empty or holds a non-finite value.
    pub fn from_diagonal(diagonal: &[f64]) -> Self {
        assert!(
            diagonal.iter().all(|v| v.is_finite()),
            "non-finite diagonal entry"
        );
        let mut m = Self::zeros(diagonal.len());
        for (k, &d) in diagonal.iter().enumerate() {
            m.entries[k * m.order + k] = d;
        }
        m
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> f64 {
        self.entries[row * self.order + col]
    }

    pub fn row(&self, row: usize) -> &[f64] {
        &self.entries[row * self.order..(row + 1) * self.order]
    }

    pub fn diagonal(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.order).map(move |k| self.get(k, k))
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.order).all(|r| (0..r).all(|c| self.get(r, c) == self.get(c, r)))
    }

    /// Maximum absolute row sum.
    pub fn norm_inf(&self) -> f64 {
        self.entries
            .chunks_exact(self.order)
            .map(|row| row.iter().map(|v| v.abs()).sum::<f64>())
            .fold(0.0, f64::max)
    }

    /// `λI − M`, materialized as a new matrix.
    pub fn shifted_negation(&self, lambda: f64) -> Self {
        let n = self.order;
        let mut entries: Vec<f64> = self.entries.iter().map(|v| -v).collect();
        for k in 0..n {
            entries[k * n + k] += lambda;
        }
        Self { order: n, entries }
    }

    /// Symmetric permutation `PᵀMP`: entry `(r, c)` of the result is
    /// `M[perm[r]][perm[c]]`.
    ///
    /// # Panics
    /// If `perm` is not a permutation of `0..n`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let n = self.order;
        assert_eq!(perm.len(), n);
        let mut seen = vec![false; n];
        for &p in perm {
            assert!(p < n && !seen[p], "not a permutation");
            seen[p] = true;
        }
        let entries = (0..n)
            .flat_map(|r| (0..n).map(move |c| (r, c)))
            .map(|(r, c)| self.get(perm[r], perm[c]))
            .collect();
        Self { order: n, entries }
    }
}

impl Index<(usize, usize)> for DenseMatrix {
    type Output = f64;

    fn index(&self, (row, col): (usize, usize)) -> &f64 {
        &self.entries[row * self.order + col]
    }
}

/// Renders in the matrix file format at full (round-trip) precision.
impl fmt::Display for DenseMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.order)?;
        for row in self.entries.chunks_exact(self.order) {
            let mut first = true;
            for v in row {
                if !first {
                    f.write_str(" ")?;
                }
                first = false;
                write!(f, "{v:?}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

impl FromStr for DenseMatrix {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_matrix(s)
    }
}

/// Parses the plain-text matrix format.
///
/// ```text
/// # comment lines and blank lines are skipped
/// 3
/// 3 1 4
/// 0 2 6
/// 0 0 5
/// ```
///
/// The first significant line holds the order `n`, followed by exactly `n`
/// lines of `n` whitespace-separated reals. Anything after the last row is
/// rejected.
pub fn parse_matrix(text: &str) -> Result<DenseMatrix, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| {
            let t = l.trim();
            !t.is_empty() && !t.starts_with('#')
        });

    let (order_line, header) = lines.next().ok_or(ParseError::EmptyInput)?;
    let header = header.trim();
    let order = match header.parse::<usize>() {
        Ok(n) if n > 0 => n,
        _ => {
            return Err(ParseError::InvalidOrder {
                line: order_line,
                token: header.to_owned(),
            })
        }
    };

    let mut entries = Vec::with_capacity(order * order);
    for r in 0..order {
        let (line_no, line) = lines.next().ok_or_else(|| ParseError::NonSquare {
            detail: format!("declared order {order} but found only {r} rows"),
        })?;
        let mut count = 0;
        for (column, token) in tokens_with_columns(line) {
            count += 1;
            let value: f64 = token.parse().map_err(|_| ParseError::NonNumericToken {
                line: line_no,
                column,
                token: token.to_owned(),
            })?;
            if !value.is_finite() {
                return Err(ParseError::NonFiniteValue {
                    line: line_no,
                    column,
                });
            }
            entries.push(value);
        }
        if count != order {
            return Err(ParseError::NonSquare {
                detail: format!(
                    "line {line_no}: row {} has {count} entries, expected {order}",
                    r + 1
                ),
            });
        }
    }

    if let Some((line, _)) = lines.next() {
        return Err(ParseError::TrailingContent { line });
    }
    Ok(DenseMatrix { order, entries })
}

/// Whitespace-separated tokens paired with their 1-based character column.
fn tokens_with_columns(line: &str) -> impl Iterator<Item = (usize, &str)> {
    let mut rest = line;
    let mut offset = 0;
    std::iter::from_fn(move || {
        let skip = rest.len() - rest.trim_start().len();
        offset += skip;
        rest = &rest[skip..];
        if rest.is_empty() {
            return None;
        }
        let len = rest.find(char::is_whitespace).unwrap_or(rest.len());
        let token = &rest[..len];
        let column = line[..offset].chars().count() + 1;
        offset += len;
        rest = &rest[len..];
        Some((column, token))
    })
}

/// Packed result of `P·M = L·U`.
#[derive(Debug, Clone, PartialEq)]
pub struct LuFactors {
    order: usize,
    packed: Vec<f64>,
    permutation: Vec<usize>,
    parity: i8,
    singular: bool,
}

impl LuFactors {
    pub fn order(&self) -> usize {
        self.order
    }

    /// Row `k` of `P·M` is row `permutation()[k]` of `M`.
    pub fn permutation(&self) -> &[usize] {
        &self.permutation
    }

    /// Sign of the row permutation, `+1` or `-1`.
    pub fn parity(&self) -> i8 {
        self.parity
    }

    pub fn is_singular(&self) -> bool {
        self.singular
    }

    /// Unit-lower multipliers below the diagonal, upper factor on and above.
    pub fn packed(&self, row: usize, col: usize) -> f64 {
        self.packed[row * self.order + col]
    }

    pub fn pivots(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.order).map(move |k| self.packed(k, k))
    }

    pub fn determinant(&self) -> f64 {
        if self.singular {
            return 0.0;
        }
        let prod: f64 = self.pivots().product();
        f64::from(self.parity) * prod
    }
}

/// Doolittle elimination with partial (row) pivoting.
///
/// Elimination stops at the first pivot column whose largest candidate is at
/// or below the pivot tolerance; the result is then flagged singular.
pub fn lu_factor(m: &DenseMatrix) -> LuFactors {
    let n = m.order;
    let tol = PIVOT_RTOL * m.norm_inf().max(1.0);
    let mut a = m.entries.clone();
    let mut permutation: Vec<usize> = (0..n).collect();
    let mut parity = 1i8;
    let mut singular = false;

    for k in 0..n {
        let (p, pivot_abs) =
            (k..n)
                .map(|r| (r, a[r * n + k].abs()))
                .fold(
                    (k, -1.0),
                    |best, cur| if cur.1 > best.1 { cur } else { best },
                );
        if pivot_abs <= tol {
            singular = true;
            break;
        }
        if p != k {
            for c in 0..n {
                a.swap(k * n + c, p * n + c);
            }
            permutation.swap(k, p);
            parity = -parity;
        }
        let pivot = a[k * n + k];
        for r in k + 1..n {
            let factor = a[r * n + k] / pivot;
            a[r * n + k] = factor;
            if factor != 0.0 {
                for c in k + 1..n {
                    a[r * n + c] -= factor * a[k * n + c];
                }
            }
        }
    }

    LuFactors {
        order: n,
        packed: a,
        permutation,
        parity,
        singular,
    }
}

pub fn determinant(m: &DenseMatrix) -> f64 {
    lu_factor(m).determinant()
}

/// `det(λI − M)`. Monic of degree `n` in `λ`.
pub fn char_fn(m: &DenseMatrix, lambda: f64) -> f64 {
    determinant(&m.shifted_negation(lambda))
}
