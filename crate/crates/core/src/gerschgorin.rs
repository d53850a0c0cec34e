//! Gerschgorin discs and the real-axis inclusion intervals derived from them.
//!
//! Every eigenvalue of `M` lies in the union of the row discs
//! `|λ − m_kk| ≤ Σ_{j≠k} |m_kj|`, and likewise in the union of the column
//! discs. The union of either family meets the real axis inside
//! `[min(c_k − r_k), max(c_k + r_k)]`, so intersecting the row and column
//! intervals still bounds every real eigenvalue. The bound is an inclusion
//! region only; it does not pin down the eigenvalues themselves.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::DenseMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Axis {
    Row,
    Column,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Disc {
    pub center: f64,
    pub radius: f64,
    pub index: usize,
    pub axis: Axis,
}

impl Disc {
    #[inline]
    pub fn left(&self) -> f64 {
        self.center - self.radius
    }

    #[inline]
    pub fn right(&self) -> f64 {
        self.center + self.radius
    }
}

/// A closed interval `[lo, hi]` on the real axis, or the empty set.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RealInterval {
    bounds: Option<(f64, f64)>,
}

impl RealInterval {
    pub fn new(lo: f64, hi: f64) -> Result<Self> {
        if lo.is_finite() && hi.is_finite() && lo <= hi {
            Ok(Self {
                bounds: Some((lo, hi)),
            })
        } else {
            Err(Error::InvalidInterval { lo, hi })
        }
    }

    pub const fn empty() -> Self {
        Self { bounds: None }
    }

    pub fn point(x: f64) -> Self {
        Self::new(x, x).expect("finite point")
    }

    pub fn is_empty(&self) -> bool {
        self.bounds.is_none()
    }

    pub fn bounds(&self) -> Option<(f64, f64)> {
        self.bounds
    }

    pub fn lo(&self) -> Option<f64> {
        self.bounds.map(|b| b.0)
    }

    pub fn hi(&self) -> Option<f64> {
        self.bounds.map(|b| b.1)
    }

    /// Zero for the empty interval and for single points.
    pub fn width(&self) -> f64 {
        self.bounds.map_or(0.0, |(lo, hi)| hi - lo)
    }

    pub fn contains(&self, x: f64) -> bool {
        self.bounds.is_some_and(|(lo, hi)| lo <= x && x <= hi)
    }

    /// Widens both ends by `slack`.
    pub fn expanded(&self, slack: f64) -> Self {
        match self.bounds {
            Some((lo, hi)) => Self {
                bounds: Some((lo - slack, hi + slack)),
            },
            None => *self,
        }
    }
}

impl fmt::Display for RealInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.bounds {
            Some((lo, hi)) => write!(f, "[{lo}, {hi}]"),
            None => f.write_str("empty"),
        }
    }
}

pub fn row_discs(m: &DenseMatrix) -> Vec<Disc> {
    let n = m.order();
    (0..n)
        .map(|k| Disc {
            center: m.get(k, k),
            radius: (0..n).filter(|&j| j != k).map(|j| m.get(k, j).abs()).sum(),
            index: k,
            axis: Axis::Row,
        })
        .collect()
}

pub fn col_discs(m: &DenseMatrix) -> Vec<Disc> {
    let n = m.order();
    (0..n)
        .map(|k| Disc {
            center: m.get(k, k),
            radius: (0..n).filter(|&j| j != k).map(|j| m.get(j, k).abs()).sum(),
            index: k,
            axis: Axis::Column,
        })
        .collect()
}

/// Real-axis span of a disc union.
pub fn interval_of(discs: &[Disc]) -> Result<RealInterval> {
    if discs.is_empty() {
        return Err(Error::EmptyDiscList);
    }
    let lo = discs.iter().map(Disc::left).fold(f64::INFINITY, f64::min);
    let hi = discs
        .iter()
        .map(Disc::right)
        .fold(f64::NEG_INFINITY, f64::max);
    RealInterval::new(lo, hi)
}

/// Row interval intersected with column interval. Both contain every
/// diagonal entry, so the result is never empty.
pub fn matrix_bounds(m: &DenseMatrix) -> RealInterval {
    let rows = interval_of(&row_discs(m)).expect("order >= 1");
    let cols = interval_of(&col_discs(m)).expect("order >= 1");
    intersect(rows, cols)
}

/// Set intersection. Intervals that only touch produce the single shared point.
pub fn intersect(a: RealInterval, b: RealInterval) -> RealInterval {
    match (a.bounds, b.bounds) {
        (Some((lo1, hi1)), Some((lo2, hi2))) => {
            let lo = lo1.max(lo2);
            let hi = hi1.min(hi2);
            if lo <= hi {
                RealInterval {
                    bounds: Some((lo, hi)),
                }
            } else {
                RealInterval::empty()
            }
        }
        _ => RealInterval::empty(),
    }
}
