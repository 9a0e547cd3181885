//! Reference computations shared by the integration tests. Everything here
//! is written from the definitions and uses none of the library's numerics.

#![allow(dead_code, clippy::needless_range_loop)]

pub const INV_SQRT5: f64 = 0.447_213_595_499_957_9;

/// `d_0..=d_max` from the three-term recursion.
pub fn d_seq(max: usize, a: f64) -> Vec<f64> {
    let mut d = vec![1.0; max.max(1) + 1];
    for n in 2..=max {
        d[n] = d[n - 1] - a * a * d[n - 2];
    }
    d.truncate(max + 1);
    d
}

pub fn d(n: usize, a: f64) -> f64 {
    d_seq(n, a)[n]
}

/// `d_k` with `d_{-1} = 0`.
pub fn dm(k: isize, a: f64) -> f64 {
    if k < 0 {
        0.0
    } else {
        d(k as usize, a)
    }
}

/// `I - a A` for a path or cycle on `n` vertices, row-major.
pub fn kernel(n: usize, cycle: bool, a: f64) -> Vec<Vec<f64>> {
    let mut m = vec![vec![0.0; n]; n];
    for (r, row) in m.iter_mut().enumerate() {
        row[r] = 1.0;
        if r + 1 < n {
            row[r + 1] = -a;
        }
        if r > 0 {
            row[r - 1] = -a;
        }
    }
    if cycle {
        m[0][n - 1] = -a;
        m[n - 1][0] = -a;
    }
    m
}

/// Determinant by Gaussian elimination with partial pivoting.
pub fn det(mut m: Vec<Vec<f64>>) -> f64 {
    let n = m.len();
    let mut det = 1.0;
    for c in 0..n {
        let p = (c..n)
            .max_by(|&x, &y| m[x][c].abs().total_cmp(&m[y][c].abs()))
            .unwrap();
        if m[p][c] == 0.0 {
            return 0.0;
        }
        if p != c {
            m.swap(p, c);
            det = -det;
        }
        det *= m[c][c];
        for r in c + 1..n {
            let f = m[r][c] / m[c][c];
            for k in c..n {
                m[r][k] -= f * m[c][k];
            }
        }
    }
    det
}

/// Solve `m x = b` by Gaussian elimination.
pub fn solve(mut m: Vec<Vec<f64>>, mut b: Vec<f64>) -> Vec<f64> {
    let n = m.len();
    for c in 0..n {
        let p = (c..n)
            .max_by(|&x, &y| m[x][c].abs().total_cmp(&m[y][c].abs()))
            .unwrap();
        m.swap(p, c);
        b.swap(p, c);
        for r in c + 1..n {
            let f = m[r][c] / m[c][c];
            for k in c..n {
                m[r][k] -= f * m[c][k];
            }
            b[r] -= f * b[c];
        }
    }
    let mut x = vec![0.0; n];
    for r in (0..n).rev() {
        let s: f64 = (r + 1..n).map(|k| m[r][k] * x[k]).sum();
        x[r] = (b[r] - s) / m[r][r];
    }
    x
}

/// Full Katz matrix `(I - aA)^{-1} - I`, one column solve at a time.
pub fn katz_dense(n: usize, cycle: bool, a: f64) -> Vec<Vec<f64>> {
    let k = kernel(n, cycle, a);
    let mut out = vec![vec![0.0; n]; n];
    for c in 0..n {
        let mut e = vec![0.0; n];
        e[c] = 1.0;
        let x = solve(k.clone(), e);
        for r in 0..n {
            out[r][c] = x[r] - if r == c { 1.0 } else { 0.0 };
        }
    }
    out
}

pub fn spectral_radius(n: usize, cycle: bool) -> f64 {
    if cycle {
        2.0
    } else {
        2.0 * (std::f64::consts::PI / (n as f64 + 1.0)).cos()
    }
}

/// `{0.02 k}` below `bound`.
pub fn grid(bound: f64) -> Vec<f64> {
    (1..)
        .map(|k| k as f64 * 0.02)
        .take_while(|a| *a < bound)
        .collect()
}

/// The sign-carrying factor of the path gap polynomial.
pub fn p_tilde(n: usize, j: usize, a: f64) -> f64 {
    let nj = n - j;
    let m = nj.div_ceil(2);
    dm(nj as isize - 1, a) - a * dm(m as isize - 1, a) * dm((n - m - j) as isize - 1, a)
}

pub fn c_const(a: f64) -> f64 {
    2.0 / (1.0 + (1.0 - 4.0 * a * a).sqrt())
}

pub fn path_limit(i: usize, j: usize, a: f64) -> f64 {
    let diag = if i == j { 1.0 } else { 0.0 };
    a.powi((j - i) as i32) * d(i - 1, a) * c_const(a).powi(j as i32) - diag
}

pub fn cycle_limit(r: usize, a: f64) -> f64 {
    let x = a * c_const(a);
    x.powi(r as i32) / (1.0 - 4.0 * a * a).sqrt()
}

pub fn rel(a: f64, b: f64) -> f64 {
    if a == b {
        0.0
    } else {
        (a - b).abs() / a.abs().max(b.abs())
    }
}
