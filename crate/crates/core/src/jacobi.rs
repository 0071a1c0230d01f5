//! Cyclic Jacobi eigensolver for small dense symmetric matrices.
//!
//! Floating point here is advisory only: spectra are reported and
//! eigenvectors steer the witness search, while every verdict is decided in
//! exact arithmetic elsewhere.

use crate::error::{Error, Result};

pub const MAX_SWEEPS: usize = 100;

#[derive(Clone, Debug)]
pub struct Spectrum {
    /// Eigenvalues sorted descending.
    pub values: Vec<f64>,
    /// `vectors[k]` is the unit eigenvector for `values[k]`.
    pub vectors: Vec<Vec<f64>>,
    pub sweeps: usize,
}

impl Spectrum {
    pub fn min(&self) -> Option<(f64, &[f64])> {
        let k = self.values.len().checked_sub(1)?;
        Some((self.values[k], &self.vectors[k]))
    }
}

fn frobenius(a: &[Vec<f64>]) -> f64 {
    a.iter().flatten().map(|x| x * x).sum::<f64>().sqrt()
}

fn off_norm(a: &[Vec<f64>]) -> f64 {
    let n = a.len();
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a[i][j] * a[i][j];
            }
        }
    }
    s.sqrt()
}

/// Rotate until the off-diagonal Frobenius norm drops below `tol · ‖A‖_F`.
pub fn jacobi_spectrum(matrix: &[Vec<f64>], tol: f64) -> Result<Spectrum> {
    let n = matrix.len();
    if matrix.iter().any(|r| r.len() != n) {
        return Err(Error::Dimension {
            expected: n,
            got: matrix.iter().map(Vec::len).find(|&l| l != n).unwrap_or(n),
        });
    }
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::InvalidArgument(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    for i in 0..n {
        for j in (i + 1)..n {
            let scale = matrix[i][j].abs().max(matrix[j][i].abs()).max(1.0);
            if (matrix[i][j] - matrix[j][i]).abs() > 1e-12 * scale {
                return Err(Error::Asymmetric { row: i, col: j });
            }
        }
    }

    let mut a: Vec<Vec<f64>> = matrix.to_vec();
    let mut v = vec![vec![0.0; n]; n];
    for (i, row) in v.iter_mut().enumerate() {
        row[i] = 1.0;
    }
    let norm = frobenius(&a);
    let target = tol * norm;
    let mut sweeps = 0;
    while norm > 0.0 && off_norm(&a) >= target {
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence {
                sweeps,
                off_norm: off_norm(&a),
            });
        }
        sweeps += 1;
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[p][q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k][p];
                    let akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p][k];
                    let aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
                for row in v.iter_mut() {
                    let vp = row[p];
                    let vq = row[q];
                    row[p] = c * vp - s * vq;
                    row[q] = s * vp + c * vq;
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[j][j].total_cmp(&a[i][i]).then(i.cmp(&j)));
    Ok(Spectrum {
        values: order.iter().map(|&k| a[k][k]).collect(),
        vectors: order
            .iter()
            .map(|&k| (0..n).map(|i| v[i][k]).collect())
            .collect(),
        sweeps,
    })
}

/// Count of eigenvalues above, below and within `rel · ‖A‖_F` of zero.
pub fn sign_pattern(s: &Spectrum, norm: f64, rel: f64) -> (usize, usize, usize) {
    let cut = rel * norm;
    let pos = s.values.iter().filter(|&&x| x > cut).count();
    let neg = s.values.iter().filter(|&&x| x < -cut).count();
    (pos, neg, s.values.len() - pos - neg)
}

pub fn matrix_norm(a: &[Vec<f64>]) -> f64 {
    frobenius(a)
}
