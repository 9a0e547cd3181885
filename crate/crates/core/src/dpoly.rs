//! The polynomial family `d_n(alpha) = sum_m (-1)^m C(n-m, m) alpha^(2m)`.
//!
//! `d_n(alpha)` is the determinant of `I - alpha A` for the path on `n`
//! vertices, and everything else in the crate is built from it: path and
//! cycle Katz entries, the cycle determinant `D_n`, the large-`n` limits and
//! the gap polynomials used for ranking cut-offs.
//!
//! [`d_recursive`] is the evaluator used by the rest of the crate.
//! [`d_closed`] sums the binomial expansion directly and only exists as an
//! independent cross-check.

use crate::dd::DoubleDouble;
use crate::error::{Error, Result};

/// Golden ratio conjugate `(sqrt(5) - 1) / 2`.
pub const PHI_SMALL: f64 = 0.618_033_988_749_894_9;
/// Golden ratio `(sqrt(5) + 1) / 2`.
pub const PHI_LARGE: f64 = 1.618_033_988_749_895;

/// Which polynomial a [`PolyEval`] holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolyKind {
    /// `d_n`
    Path,
    /// `D_n = d_{n-1} - 2 alpha^n - 2 alpha^2 d_{n-2}`
    CycleDenominator,
}

/// A polynomial value at one `(n, alpha)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolyEval {
    pub kind: PolyKind,
    pub n: usize,
    pub alpha: f64,
    pub value: f64,
}

impl PolyEval {
    pub fn path(n: usize, alpha: f64) -> Self {
        Self {
            kind: PolyKind::Path,
            n,
            alpha,
            value: d_recursive(n, alpha),
        }
    }

    pub fn cycle_denominator(n: usize, alpha: f64) -> Result<Self> {
        Ok(Self {
            kind: PolyKind::CycleDenominator,
            n,
            alpha,
            value: cycle_denominator(n, alpha)?,
        })
    }
}

/// The limit of `d_{n+k} / d_n` as `n` grows, for `alpha` in `(0, 1/2)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RatioConstant {
    pub alpha: f64,
    pub k: i32,
    pub value: f64,
}

impl RatioConstant {
    pub fn new(k: i32, alpha: f64) -> Result<Self> {
        Ok(Self {
            alpha,
            k,
            value: ratio_constant(k, alpha)?,
        })
    }
}

/// Exact `C(a, b)` or `None` on `u128` overflow.
fn binomial_u128(a: u64, b: u64) -> Option<u128> {
    let b = b.min(a - b);
    let mut c: u128 = 1;
    for i in 1..=b {
        // c * (a - b + i) is divisible by i at every step.
        c = c.checked_mul((a - b + i) as u128)? / i as u128;
    }
    Some(c)
}

fn binomial_f64(a: u64, b: u64) -> f64 {
    let b = b.min(a - b);
    (1..=b).fold(1.0, |c, i| c * (a - b + i) as f64 / i as f64)
}

/// `d_n(alpha)` summed term by term from the binomial expansion.
///
/// The alternating sum cancels heavily near `alpha = 1/2` (term magnitudes
/// reach ~1e8 at `n = 100` while the result is ~1e-22), so the terms are
/// formed and accumulated in double-double arithmetic, ascending in `m`.
pub fn d_closed(n: usize, alpha: f64) -> f64 {
    let x = DoubleDouble::from_f64(alpha) * DoubleDouble::from_f64(alpha);
    let mut acc = DoubleDouble::ZERO;
    let mut power = DoubleDouble::ONE;
    for m in 0..=n / 2 {
        let (a, b) = ((n - m) as u64, m as u64);
        let coeff = match binomial_u128(a, b) {
            Some(c) => DoubleDouble::from_u128(c),
            None => DoubleDouble::from_f64(binomial_f64(a, b)),
        };
        let term = coeff * power;
        acc = if m % 2 == 0 { acc + term } else { acc - term };
        power = power * x;
    }
    acc.to_f64()
}

/// `d_n(alpha)` from `d_n = d_{n-1} - alpha^2 d_{n-2}`, `d_0 = d_1 = 1`.
pub fn d_recursive(n: usize, alpha: f64) -> f64 {
    let a2 = alpha * alpha;
    let (mut prev, mut cur) = (1.0, 1.0);
    for _ in 1..n {
        let next = cur - a2 * prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// `[d_0, d_1, ..., d_max]` at one `alpha`, by the same recursion.
pub fn d_table(max: usize, alpha: f64) -> Vec<f64> {
    let a2 = alpha * alpha;
    let mut t = Vec::with_capacity(max + 1);
    t.push(1.0);
    if max >= 1 {
        t.push(1.0);
    }
    for k in 2..=max {
        let v = t[k - 1] - a2 * t[k - 2];
        t.push(v);
    }
    t
}

/// `d_n(1/2) = (n + 1) / 2^n`.
pub fn d_special_half(n: usize) -> f64 {
    (n as f64 + 1.0) * 0.5f64.powi(n as i32)
}

/// `d_n(1/sqrt 5) = ((1 + phi)^(n+1) - phi^(n+1)) / sqrt(5)^n`.
pub fn d_special_root5(n: usize) -> f64 {
    let e = n as i32 + 1;
    (PHI_LARGE.powi(e) - PHI_SMALL.powi(e)) / 5f64.sqrt().powi(n as i32)
}

/// `D_n(alpha) = d_{n-1} - 2 alpha^n - 2 alpha^2 d_{n-2}`, the determinant
/// of `I - alpha A` on the cycle with `n >= 3` vertices.
pub fn cycle_denominator(n: usize, alpha: f64) -> Result<f64> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!(
            "cycle denominator needs n >= 3, got {n}"
        )));
    }
    let t = d_table(n - 1, alpha);
    Ok(cycle_denominator_from(&t, n, alpha))
}

pub(crate) fn cycle_denominator_from(t: &[f64], n: usize, alpha: f64) -> f64 {
    t[n - 1] - 2.0 * alpha.powi(n as i32) - 2.0 * alpha * alpha * t[n - 2]
}

/// `D_n` through its even/odd factorisation:
/// `D_{2l} = (1 - 4 alpha^2) d_{l-1}^2` and
/// `D_{2l+1} = (1 - 2 alpha)(alpha^{2l} + (1 + 2 alpha) d_l d_{l-1})`.
pub fn cycle_denominator_parity(n: usize, alpha: f64) -> Result<f64> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!(
            "parity form needs n >= 3, got {n}"
        )));
    }
    let l = n / 2;
    let t = d_table(l, alpha);
    Ok(if n.is_multiple_of(2) {
        (1.0 - 4.0 * alpha * alpha) * t[l - 1] * t[l - 1]
    } else {
        (1.0 - 2.0 * alpha) * (alpha.powi(2 * l as i32) + (1.0 + 2.0 * alpha) * t[l] * t[l - 1])
    })
}

/// `FR_n = (Phi^(n+1) - phi^(n+1)) / (sqrt 5 (Phi^n - phi^n))`, a lower
/// bound on `d_n / d_{n-1}` below `alpha = 1/sqrt 5`.
pub fn fib_ratio(n: usize) -> Result<f64> {
    if n == 0 {
        return Err(Error::InvalidArgument("FR_n is undefined at n = 0".into()));
    }
    let n = n as i32;
    let num = PHI_LARGE.powi(n + 1) - PHI_SMALL.powi(n + 1);
    let den = 5f64.sqrt() * (PHI_LARGE.powi(n) - PHI_SMALL.powi(n));
    Ok(num / den)
}

/// `((1 + sqrt(1 - 4 alpha^2)) / 2)^k`, the limit of `d_{n+k} / d_n`.
/// Negative `k` is allowed.
pub fn ratio_constant(k: i32, alpha: f64) -> Result<f64> {
    if !(alpha > 0.0 && alpha < 0.5) {
        return Err(Error::InadmissibleAlpha { alpha, bound: 0.5 });
    }
    Ok(((1.0 + (1.0 - 4.0 * alpha * alpha).sqrt()) / 2.0).powi(k))
}
