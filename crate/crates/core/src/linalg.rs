//! Small dense linear algebra for the brute-force oracles.
//!
//! Gaussian elimination with partial pivoting, row-major storage. Sizes are
//! capped at [`MAX_DENSE`].

use crate::error::{Error, Result};

/// Largest matrix order accepted by the dense routines.
pub const MAX_DENSE: usize = 512;

#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix {
    n: usize,
    data: Vec<f64>,
}

impl DenseMatrix {
    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            data: vec![0.0; n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m[(i, i)] = 1.0;
        }
        m
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn row(&self, r: usize) -> &[f64] {
        &self.data[r * self.n..(r + 1) * self.n]
    }

    /// Largest absolute entry.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |m, v| m.max(v.abs()))
    }

    pub fn add_scaled(&mut self, other: &DenseMatrix, s: f64) {
        assert_eq!(self.n, other.n);
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            *a += s * b;
        }
    }

    pub fn matmul(&self, other: &DenseMatrix) -> DenseMatrix {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let mut out = DenseMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self[(i, k)];
                if a == 0.0 {
                    continue;
                }
                for j in 0..n {
                    out.data[i * n + j] += a * other.data[k * n + j];
                }
            }
        }
        out
    }

    fn check_size(&self) -> Result<()> {
        if self.n > MAX_DENSE {
            return Err(Error::TooLarge {
                n: self.n,
                max: MAX_DENSE,
            });
        }
        Ok(())
    }

    /// Inverse by Gauss-Jordan elimination with partial pivoting.
    pub fn inverse(&self) -> Result<DenseMatrix> {
        self.check_size()?;
        let n = self.n;
        let mut a = self.clone();
        let mut inv = DenseMatrix::identity(n);
        for col in 0..n {
            let pivot = pivot_row(&a, col)?;
            if pivot != col {
                a.swap_rows(pivot, col);
                inv.swap_rows(pivot, col);
            }
            let p = a[(col, col)];
            for j in 0..n {
                a.data[col * n + j] /= p;
                inv.data[col * n + j] /= p;
            }
            for r in 0..n {
                if r == col {
                    continue;
                }
                let f = a[(r, col)];
                if f == 0.0 {
                    continue;
                }
                for j in 0..n {
                    a.data[r * n + j] -= f * a.data[col * n + j];
                    inv.data[r * n + j] -= f * inv.data[col * n + j];
                }
            }
        }
        Ok(inv)
    }

    /// Determinant from the LU factorisation with partial pivoting.
    pub fn determinant(&self) -> Result<f64> {
        self.check_size()?;
        let n = self.n;
        let mut a = self.clone();
        let mut det = 1.0;
        for col in 0..n {
            let pivot = match pivot_row(&a, col) {
                Ok(p) => p,
                Err(Error::Singular(_)) => return Ok(0.0),
                Err(e) => return Err(e),
            };
            if pivot != col {
                a.swap_rows(pivot, col);
                det = -det;
            }
            let p = a[(col, col)];
            det *= p;
            for r in col + 1..n {
                let f = a[(r, col)] / p;
                if f == 0.0 {
                    continue;
                }
                for j in col..n {
                    a.data[r * n + j] -= f * a.data[col * n + j];
                }
            }
        }
        Ok(det)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        let n = self.n;
        for j in 0..n {
            self.data.swap(a * n + j, b * n + j);
        }
    }
}

fn pivot_row(a: &DenseMatrix, col: usize) -> Result<usize> {
    let (mut best, mut best_abs) = (col, a[(col, col)].abs());
    for r in col + 1..a.n {
        let v = a[(r, col)].abs();
        if v > best_abs {
            best = r;
            best_abs = v;
        }
    }
    if best_abs == 0.0 {
        return Err(Error::Singular(col));
    }
    Ok(best)
}

impl std::ops::Index<(usize, usize)> for DenseMatrix {
    type Output = f64;

    fn index(&self, (r, c): (usize, usize)) -> &f64 {
        &self.data[r * self.n + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for DenseMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut f64 {
        &mut self.data[r * self.n + c]
    }
}

/// Largest eigenvalue of a symmetric matrix with spectrum symmetric about
/// zero (bipartite adjacency matrices, cycles). Power iteration on `M + I`
/// so that `+rho` and `-rho` do not alternate; returns the Rayleigh quotient
/// minus the shift.
pub fn power_iteration_radius(m: &DenseMatrix, tol: f64, max_iter: usize) -> f64 {
    let n = m.order();
    let mut v: Vec<f64> = (0..n).map(|i| 1.0 + i as f64 / n as f64).collect();
    normalize(&mut v);
    let mut lambda = 0.0;
    for _ in 0..max_iter {
        let mut w: Vec<f64> = (0..n)
            .map(|i| m.row(i).iter().zip(&v).map(|(a, b)| a * b).sum::<f64>() + v[i])
            .collect();
        let next: f64 = w.iter().zip(&v).map(|(a, b)| a * b).sum();
        normalize(&mut w);
        let done = (next - lambda).abs() <= tol * next.abs();
        lambda = next;
        v = w;
        if done {
            break;
        }
    }
    lambda - 1.0
}

fn normalize(v: &mut [f64]) {
    let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    for x in v.iter_mut() {
        *x /= norm;
    }
}
