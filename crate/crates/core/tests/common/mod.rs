//! Test-only helpers: fixture matrices, random generators and oracles that
//! share no code with the library's numerical routines.
#![allow(dead_code)]

use common_eig::DenseMatrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn sample_a() -> DenseMatrix {
    DenseMatrix::from_rows(&[[3.0, 1.0, 4.0], [0.0, 2.0, 6.0], [0.0, 0.0, 5.0]]).unwrap()
}

pub fn sample_b() -> DenseMatrix {
    DenseMatrix::from_rows(&[[3.0, -1.0, 0.0], [-1.0, 2.0, -1.0], [0.0, -1.0, 3.0]]).unwrap()
}

pub fn data_path(name: &str) -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("data")
        .join(name)
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn to_rows(m: &DenseMatrix) -> Vec<Vec<f64>> {
    (0..m.order()).map(|r| m.row(r).to_vec()).collect()
}

/// Laplace expansion along the first row.
pub fn cofactor_det(a: &[Vec<f64>]) -> f64 {
    let n = a.len();
    match n {
        0 => 1.0,
        1 => a[0][0],
        2 => a[0][0] * a[1][1] - a[0][1] * a[1][0],
        _ => (0..n)
            .map(|j| {
                let minor: Vec<Vec<f64>> = a[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|&(c, _)| c != j)
                            .map(|(_, &v)| v)
                            .collect()
                    })
                    .collect();
                let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
                sign * a[0][j] * cofactor_det(&minor)
            })
            .sum(),
    }
}

/// Cyclic Jacobi rotations on a symmetric matrix; eigenvalues ascending.
#[allow(clippy::needless_range_loop)]
pub fn jacobi_eigenvalues(m: &DenseMatrix) -> Vec<f64> {
    let n = m.order();
    let mut a = to_rows(m);
    for _sweep in 0..100 {
        let off: f64 = (0..n)
            .flat_map(|p| (0..n).filter(move |&q| q != p).map(move |q| (p, q)))
            .map(|(p, q)| a[p][q] * a[p][q])
            .sum();
        if off.sqrt() < 1e-15 {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                if a[p][q].abs() < 1e-300 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let (akp, akq) = (a[k][p], a[k][q]);
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let (apk, aqk) = (a[p][k], a[q][k]);
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    let mut ev: Vec<f64> = (0..n).map(|k| a[k][k]).collect();
    ev.sort_by(f64::total_cmp);
    ev
}

#[allow(clippy::needless_range_loop)]
pub fn random_symmetric(rng: &mut impl Rng, n: usize, scale: f64) -> DenseMatrix {
    let mut rows = vec![vec![0.0; n]; n];
    for r in 0..n {
        for c in r..n {
            let v = rng.gen_range(-scale..=scale);
            rows[r][c] = v;
            rows[c][r] = v;
        }
    }
    DenseMatrix::from_rows(&rows).unwrap()
}

pub fn random_integer(rng: &mut impl Rng, n: usize, bound: i32) -> DenseMatrix {
    let rows: Vec<Vec<f64>> = (0..n)
        .map(|_| {
            (0..n)
                .map(|_| f64::from(rng.gen_range(-bound..=bound)))
                .collect()
        })
        .collect();
    DenseMatrix::from_rows(&rows).unwrap()
}

/// Distinct values in `[lo, hi]`, pairwise at least `gap` apart, sorted.
pub fn separated_values(rng: &mut impl Rng, count: usize, lo: f64, hi: f64, gap: f64) -> Vec<f64> {
    loop {
        let mut v: Vec<f64> = (0..count).map(|_| rng.gen_range(lo..=hi)).collect();
        v.sort_by(f64::total_cmp);
        if v.windows(2).all(|w| w[1] - w[0] >= gap) {
            return v;
        }
    }
}

/// Upper-triangular matrix with the given diagonal and random entries above it.
pub fn random_upper_triangular(
    rng: &mut impl Rng,
    diagonal: &[f64],
    off_scale: f64,
) -> DenseMatrix {
    let n = diagonal.len();
    let rows: Vec<Vec<f64>> = (0..n)
        .map(|r| {
            (0..n)
                .map(|c| match c.cmp(&r) {
                    std::cmp::Ordering::Less => 0.0,
                    std::cmp::Ordering::Equal => diagonal[r],
                    std::cmp::Ordering::Greater => rng.gen_range(-off_scale..=off_scale),
                })
                .collect()
        })
        .collect();
    DenseMatrix::from_rows(&rows).unwrap()
}

/// `Q·diag(eigenvalues)·Qᵀ` for a random orthogonal `Q` built from Givens
/// rotations; symmetric with exactly the requested spectrum.
pub fn symmetric_with_spectrum(rng: &mut impl Rng, eigenvalues: &[f64]) -> DenseMatrix {
    let n = eigenvalues.len();
    let mut q: Vec<Vec<f64>> = (0..n)
        .map(|r| (0..n).map(|c| if r == c { 1.0 } else { 0.0 }).collect())
        .collect();
    for _ in 0..3 * n {
        let p = rng.gen_range(0..n);
        let s = rng.gen_range(0..n);
        if p == s {
            continue;
        }
        let angle: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
        let (sin, cos) = angle.sin_cos();
        for row in q.iter_mut() {
            let (x, y) = (row[p], row[s]);
            row[p] = cos * x - sin * y;
            row[s] = sin * x + cos * y;
        }
    }
    let mut rows = vec![vec![0.0; n]; n];
    for r in 0..n {
        for c in r..n {
            let v: f64 = (0..n).map(|k| q[r][k] * eigenvalues[k] * q[c][k]).sum();
            rows[r][c] = v;
            rows[c][r] = v;
        }
    }
    DenseMatrix::from_rows(&rows).unwrap()
}

pub fn rel_err(got: f64, want: f64) -> f64 {
    if want == 0.0 {
        got.abs()
    } else {
        ((got - want) / want).abs()
    }
}
