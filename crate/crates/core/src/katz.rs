//! Katz similarity `K = (I - alpha A)^{-1} - I` on paths and cycles.
//!
//! Closed forms:
//!
//! * path, `i <= j`: `alpha^(j-i) d_{i-1} d_{n-j} / d_n` (minus 1 on the
//!   diagonal);
//! * cycle, `k = min(j - i, n - j + i) >= 1`:
//!   `(alpha^k d_{n-k-1} + alpha^(n-k) d_{k-1}) / D_n`;
//! * cycle diagonal: `d_{n-1} / D_n - 1`, the `(1,1)` cofactor of
//!   `I - alpha A` being the path determinant `d_{n-1}`.
//!
//! Cycles with fewer than five vertices are answered by the dense inverse.

use crate::dpoly::{cycle_denominator_from, d_table, ratio_constant};
use crate::error::{Error, Result};
use crate::graphs::{graph_distance, Alpha, Family, GraphSpec, VertexPair};
use crate::linalg::DenseMatrix;

/// Smallest cycle served by the closed form.
pub const CYCLE_CLOSED_FORM_MIN_N: usize = 5;

/// Hard cap on the number of walk-length terms in [`katz_oracle_series`].
pub const SERIES_MAX_TERMS: usize = 100_000;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KatzEntry {
    pub graph: GraphSpec,
    pub pair: VertexPair,
    pub alpha: Alpha,
    pub value: f64,
}

impl KatzEntry {
    pub fn new(graph: GraphSpec, pair: VertexPair, alpha: f64) -> Result<Self> {
        let a = Alpha::new(&graph, alpha)?;
        let value = katz(&graph, pair, alpha)?;
        Ok(Self {
            graph,
            pair,
            alpha: a,
            value,
        })
    }
}

/// Large-`n` limit of a Katz entry. `i` is only meaningful on paths, where
/// the limit depends on the distance to the end of the path.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KatzLimit {
    pub offset: usize,
    pub i: Option<usize>,
    pub alpha: f64,
    pub value: f64,
}

/// Closed-form entry for either family.
pub fn katz(g: &GraphSpec, p: VertexPair, alpha: f64) -> Result<f64> {
    match g.family() {
        Family::Path => katz_path(g.n(), p.i, p.j, alpha),
        Family::Cycle => katz_cycle(g.n(), p.i, p.j, alpha),
    }
}

fn validated(
    family: Family,
    n: usize,
    i: usize,
    j: usize,
    alpha: f64,
) -> Result<(GraphSpec, VertexPair)> {
    let g = GraphSpec::new(family, n)?;
    let p = g.pair(i, j)?;
    Alpha::new(&g, alpha)?;
    Ok((g, p))
}

/// `K_{P_n}(alpha)_{i,j}`.
pub fn katz_path(n: usize, i: usize, j: usize, alpha: f64) -> Result<f64> {
    let (_, p) = validated(Family::Path, n, i, j, alpha)?;
    let t = d_table(n, alpha);
    Ok(path_entry(&t, n, p, alpha))
}

pub(crate) fn path_entry(t: &[f64], n: usize, p: VertexPair, alpha: f64) -> f64 {
    let v = alpha.powi((p.j - p.i) as i32) * t[p.i - 1] * t[n - p.j] / t[n];
    if p.i == p.j {
        v - 1.0
    } else {
        v
    }
}

/// `K_{C_n}(alpha)_{i,j}`.
pub fn katz_cycle(n: usize, i: usize, j: usize, alpha: f64) -> Result<f64> {
    let (g, p) = validated(Family::Cycle, n, i, j, alpha)?;
    if n < CYCLE_CLOSED_FORM_MIN_N {
        let k = katz_oracle_inverse(&g, alpha)?;
        return Ok(k[(p.i - 1, p.j - 1)]);
    }
    let t = d_table(n - 1, alpha);
    let k = graph_distance(&g, p)?;
    Ok(cycle_entry(&t, n, k, alpha))
}

/// Entry at cycle distance `k`; `t` must hold `d_0..=d_{n-1}`.
pub(crate) fn cycle_entry(t: &[f64], n: usize, k: usize, alpha: f64) -> f64 {
    let den = cycle_denominator_from(t, n, alpha);
    if k == 0 {
        return t[n - 1] / den - 1.0;
    }
    let num = alpha.powi(k as i32) * t[n - k - 1] + alpha.powi((n - k) as i32) * t[k - 1];
    num / den
}

fn katz_kernel(g: &GraphSpec, alpha: f64) -> Result<DenseMatrix> {
    Alpha::new(g, alpha)?;
    let n = g.n();
    let mut m = DenseMatrix::identity(n);
    for v in 0..n {
        for u in g.neighbours(v) {
            m[(v, u)] -= alpha;
        }
    }
    Ok(m)
}

/// `(I - alpha A)^{-1} - I` by dense Gauss-Jordan elimination. Entry
/// `(r, c)` of the result belongs to vertices `r + 1` and `c + 1`.
pub fn katz_oracle_inverse(g: &GraphSpec, alpha: f64) -> Result<DenseMatrix> {
    let mut inv = katz_kernel(g, alpha)?.inverse()?;
    for v in 0..g.n() {
        inv[(v, v)] -= 1.0;
    }
    Ok(inv)
}

/// Partial sums of `sum_{t>=1} alpha^t A^t`, stopping once the newest term
/// satisfies `max|alpha^t A^t| / (1 - alpha rho) < tol`, which bounds the
/// remaining tail.
pub fn katz_oracle_series(g: &GraphSpec, alpha: f64, tol: f64) -> Result<DenseMatrix> {
    let a = Alpha::new(g, alpha)?;
    if !(tol > 0.0) {
        return Err(Error::InvalidArgument(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    let n = g.n();
    let tail_factor = 1.0 / (1.0 - alpha * a.rho());
    let mut term = DenseMatrix::identity(n);
    let mut sum = DenseMatrix::zeros(n);
    for _ in 0..SERIES_MAX_TERMS {
        let mut next = DenseMatrix::zeros(n);
        for r in 0..n {
            for u in g.neighbours(r) {
                for c in 0..n {
                    next[(r, c)] += alpha * term[(u, c)];
                }
            }
        }
        sum.add_scaled(&next, 1.0);
        if next.max_abs() * tail_factor < tol {
            return Ok(sum);
        }
        term = next;
    }
    Err(Error::SeriesDidNotConverge(SERIES_MAX_TERMS))
}

fn check_below_half(alpha: f64) -> Result<()> {
    if !(alpha > 0.0 && alpha < 0.5) {
        return Err(Error::InadmissibleAlpha { alpha, bound: 0.5 });
    }
    Ok(())
}

/// `lim_{n -> inf} K_{P_n}(alpha)_{i,j} = alpha^(j-i) d_{i-1} c^j` with
/// `c = 2 / (1 + sqrt(1 - 4 alpha^2))`; on the diagonal the `-1` carries over.
pub fn katz_limit_path(i: usize, j: usize, alpha: f64) -> Result<KatzLimit> {
    check_below_half(alpha)?;
    let p = VertexPair::new(i, j);
    if p.i == 0 {
        return Err(Error::InvalidArgument("vertex labels start at 1".into()));
    }
    let t = d_table(p.i - 1, alpha);
    let v = alpha.powi((p.j - p.i) as i32) * t[p.i - 1] * ratio_constant(-(p.j as i32), alpha)?;
    Ok(KatzLimit {
        offset: p.j - p.i,
        i: Some(p.i),
        alpha,
        value: if p.i == p.j { v - 1.0 } else { v },
    })
}

/// `lim_{n -> inf} K_{C_n}(alpha)_{i,j}` for `|j - i| = r >= 1`:
/// `alpha^r c^(r-2) (1 - alpha^4 c^4) / (1 - 4 alpha^2)`, the same expression
/// for even and odd `r`.
pub fn katz_limit_cycle(offset: usize, alpha: f64) -> Result<KatzLimit> {
    check_below_half(alpha)?;
    if offset == 0 {
        return Err(Error::InvalidArgument(
            "cycle limit needs offset >= 1".into(),
        ));
    }
    let c = ratio_constant(-1, alpha)?;
    let r = offset as i32;
    let ac = alpha * c;
    let value = alpha.powi(r) * c.powi(r - 2) * (1.0 - ac.powi(4)) / (1.0 - 4.0 * alpha * alpha);
    Ok(KatzLimit {
        offset,
        i: None,
        alpha,
        value,
    })
}

/// `K_n - K_inf` kept as sign and natural log of the magnitude, since the
/// difference drops below the double range long before `n` gets large.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LimitGap {
    pub sign: f64,
    pub ln_abs: f64,
}

impl LimitGap {
    /// The gap as a double; underflows to zero when it is below ~1e-308.
    pub fn value(&self) -> f64 {
        self.sign * self.ln_abs.exp()
    }

    pub fn log10_abs(&self) -> f64 {
        self.ln_abs / std::f64::consts::LN_10
    }
}

/// `x = alpha c = (1 - sqrt(1 - 4 alpha^2)) / (2 alpha)`, the decay rate of
/// the infinite-line resolvent.
fn decay_rate(alpha: f64) -> f64 {
    2.0 * alpha / (1.0 + (1.0 - 4.0 * alpha * alpha).sqrt())
}

/// `K_{P_n}(alpha)_{i,j} - lim` without cancellation:
/// `-alpha^(j-i) d_{i-1} c^j x^(2(n-j+1)) (1 - x^(2j)) / (1 - x^(2(n+1)))`.
pub fn limit_gap_path(n: usize, i: usize, j: usize, alpha: f64) -> Result<LimitGap> {
    check_below_half(alpha)?;
    let g = GraphSpec::path(n)?;
    let p = g.pair(i, j)?;
    let x = decay_rate(alpha);
    let x2 = x * x;
    let lead = alpha.powi((p.j - p.i) as i32) * d_table(p.i - 1, alpha)[p.i - 1];
    let ln_abs = lead.ln()
        + (p.j as f64) * (x / alpha).ln()
        + 2.0 * (n - p.j + 1) as f64 * x.ln()
        + (-x2.powi(p.j as i32)).ln_1p()
        - (-x2.powi(n as i32 + 1)).ln_1p();
    Ok(LimitGap { sign: -1.0, ln_abs })
}

/// `K_{C_n}(alpha)` at cycle distance `k` minus its limit:
/// `x^(n-k) (1 + x^(2k)) / (sqrt(1 - 4 alpha^2) (1 - x^n))`.
pub fn limit_gap_cycle(n: usize, offset: usize, alpha: f64) -> Result<LimitGap> {
    check_below_half(alpha)?;
    GraphSpec::cycle(n)?;
    if offset == 0 || offset > n / 2 {
        return Err(Error::InvalidArgument(format!(
            "offset must lie in 1..={} for C_{n}, got {offset}",
            n / 2
        )));
    }
    let x = decay_rate(alpha);
    let s = (1.0 - 4.0 * alpha * alpha).sqrt();
    let ln_abs = (n - offset) as f64 * x.ln() + x.powi(2 * offset as i32).ln_1p()
        - s.ln()
        - (-x.powi(n as i32)).ln_1p();
    Ok(LimitGap { sign: 1.0, ln_abs })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dpoly::d_recursive;

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / a.abs().max(b.abs())
    }

    #[test]
    fn path_examples_against_inverse() {
        let g = GraphSpec::path(3).unwrap();
        let k = katz_oracle_inverse(&g, 0.3).unwrap();
        let v = katz_path(3, 1, 2, 0.3).unwrap();
        assert!(rel(v, 0.3 / 0.82) < 1e-15);
        assert!(rel(v, k[(0, 1)]) < 1e-14);
        let d = katz_path(3, 1, 1, 0.3).unwrap();
        assert!(rel(d, 0.91 / 0.82 - 1.0) < 1e-14);
        assert!(rel(d, k[(0, 0)]) < 1e-13);
    }

    #[test]
    fn path_endpoint_pair() {
        for n in 2..20 {
            let a = 0.37;
            let v = katz_path(n, 1, n, a).unwrap();
            assert!(rel(v, a.powi(n as i32 - 1) / d_recursive(n, a)) < 1e-14);
        }
    }

    #[test]
    fn path_rejects_bad_input() {
        assert!(matches!(
            katz_path(10, 1, 2, 0.6),
            Err(Error::InadmissibleAlpha { .. })
        ));
        assert!(matches!(
            katz_path(10, 0, 2, 0.2),
            Err(Error::VertexOutOfRange { .. })
        ));
        assert!(matches!(
            katz_path(10, 3, 11, 0.2),
            Err(Error::VertexOutOfRange { .. })
        ));
        assert!(katz_path(1, 1, 1, 0.2).is_err());
        // Past 1/2 but still admissible on a short path.
        assert!(katz_path(5, 1, 2, 0.55).is_ok());
    }

    #[test]
    fn cycle_examples() {
        let v = katz_cycle(5, 1, 2, 0.2).unwrap();
        assert!(rel(v, 0.1856 / 0.80736) < 1e-14);
        let k = katz_oracle_inverse(&GraphSpec::cycle(5).unwrap(), 0.2).unwrap();
        assert!(rel(v, k[(0, 1)]) < 1e-13);
        assert!((v - 0.229885).abs() < 1e-6);

        // Antipode on an even cycle: both numerator terms share alpha^k.
        let (n, a) = (12usize, 0.3f64);
        let kk = 6usize;
        let sym = a.powi(kk as i32) * (d_recursive(n - kk - 1, a) + d_recursive(kk - 1, a))
            / crate::dpoly::cycle_denominator(n, a).unwrap();
        assert!(rel(katz_cycle(n, 2, 8, a).unwrap(), sym) < 1e-14);

        // Odd cycle: the two farthest classes coincide.
        assert_eq!(
            katz_cycle(15, 1, 9, 0.3).unwrap(),
            katz_cycle(15, 1, 8, 0.3).unwrap()
        );
    }

    #[test]
    fn cycle_diagonal_and_small_cycles() {
        for n in 3..12 {
            let g = GraphSpec::cycle(n).unwrap();
            let k = katz_oracle_inverse(&g, 0.41).unwrap();
            for p in g.pairs().chain((1..=n).map(|v| VertexPair::new(v, v))) {
                let v = katz_cycle(n, p.i, p.j, 0.41).unwrap();
                assert!(rel(v, k[(p.i - 1, p.j - 1)]) < 1e-12, "C_{n} {p}");
            }
        }
        assert!(katz_cycle(6, 1, 2, 0.5).is_err());
    }

    #[test]
    fn inverse_oracle_small_cases() {
        let k = katz_oracle_inverse(&GraphSpec::path(2).unwrap(), 0.4).unwrap();
        assert!(rel(k[(0, 1)], 0.4 / 0.84) < 1e-14);
        assert!((k[(0, 1)] - 0.476190).abs() < 1e-6);
        let k = katz_oracle_inverse(&GraphSpec::cycle(3).unwrap(), 0.25).unwrap();
        assert!(rel(k[(0, 1)], k[(0, 2)]) < 1e-14);
        assert!(rel(k[(0, 1)], k[(1, 2)]) < 1e-14);
    }

    #[test]
    fn series_oracle_agrees() {
        let g = GraphSpec::path(3).unwrap();
        let s = katz_oracle_series(&g, 0.3, 1e-12).unwrap();
        let k = katz_oracle_inverse(&g, 0.3).unwrap();
        for r in 0..3 {
            for c in 0..3 {
                assert!((s[(r, c)] - k[(r, c)]).abs() < 1e-11);
            }
        }
        let s = katz_oracle_series(&GraphSpec::cycle(5).unwrap(), 0.2, 1e-13).unwrap();
        assert!((s[(0, 1)] - katz_cycle(5, 1, 2, 0.2).unwrap()).abs() < 1e-12);

        // First-order behaviour for tiny alpha.
        let g = GraphSpec::cycle(7).unwrap();
        let s = katz_oracle_series(&g, 1e-6, 1e-20).unwrap();
        let a = g.adjacency();
        for r in 0..7 {
            for c in 0..7 {
                assert!((s[(r, c)] - 1e-6 * a[(r, c)]).abs() < 1e-11);
            }
        }
        assert!(katz_oracle_series(&g, 0.2, 0.0).is_err());
    }

    #[test]
    fn series_cap_is_reported() {
        let g = GraphSpec::cycle(4).unwrap();
        let r = katz_oracle_series(&g, 0.5 - 1e-9, 1e-300);
        assert!(matches!(r, Err(Error::SeriesDidNotConverge(_))));
    }

    #[test]
    fn path_limit_examples() {
        let l = katz_limit_path(1, 2, 0.3).unwrap();
        assert!(rel(l.value, 0.3 * (10.0f64 / 9.0).powi(2)) < 1e-14);
        let diag = katz_limit_path(1, 1, 0.3).unwrap().value;
        assert!((diag - katz_path(400, 1, 1, 0.3).unwrap()).abs() < 1e-12);
        let l = katz_limit_path(2, 5, 0.2).unwrap().value;
        assert!((katz_path(300, 2, 5, 0.2).unwrap() - l).abs() <= 1e-8);
        assert!(katz_limit_path(1, 2, 0.5).is_err());
    }

    #[test]
    fn cycle_limit_examples() {
        let c: f64 = 10.0 / 9.0;
        let expect = 0.09 * (1.0 - 0.0081 * c.powi(4)) / 0.64;
        assert!(rel(katz_limit_cycle(2, 0.3).unwrap().value, expect) < 1e-14);
        let even = katz_limit_cycle(2, 0.2).unwrap().value;
        assert!((katz_cycle(400, 1, 3, 0.2).unwrap() - even).abs() <= 1e-8);
        let odd = katz_limit_cycle(3, 0.2).unwrap().value;
        assert!((katz_cycle(401, 1, 4, 0.2).unwrap() - odd).abs() <= 1e-8);
        assert!(katz_limit_cycle(0, 0.2).is_err());
    }

    #[test]
    fn literal_odd_offset_display_is_off_by_two_powers() {
        // The odd-offset display read with |j - i| = 2m + 1 equals the limit
        // at offset 2m - 1, not 2m + 1.
        let a: f64 = 0.2;
        let c = ratio_constant(-1, a).unwrap();
        let m = 1;
        let literal =
            a.powi(2 * m - 1) * c.powi(2 * m - 3) * (1.0 - (a * c).powi(4)) / (1.0 - 4.0 * a * a);
        let big = katz_cycle(401, 1, 4, a).unwrap();
        assert!((big - literal).abs() > 1e-3);
        assert!(rel(literal, katz_limit_cycle(1, a).unwrap().value) < 1e-14);
    }

    #[test]
    fn gaps_match_naive_difference() {
        for &a in &[0.1, 0.3, 0.45, 0.49] {
            for n in [6usize, 10, 20, 40] {
                for &(i, j) in &[(1usize, 2usize), (2, 5), (3, 3)] {
                    let naive =
                        katz_path(n, i, j, a).unwrap() - katz_limit_path(i, j, a).unwrap().value;
                    let gap = limit_gap_path(n, i, j, a).unwrap().value();
                    if naive.abs() > 1e-11 {
                        assert!(
                            rel(naive, gap) < 1e-4,
                            "path n={n} ({i},{j}) a={a}: {naive} vs {gap}"
                        );
                    } else {
                        assert!(gap.abs() < 2e-11);
                    }
                }
                for k in 1..=3 {
                    let naive =
                        katz_cycle(n, 1, 1 + k, a).unwrap() - katz_limit_cycle(k, a).unwrap().value;
                    let gap = limit_gap_cycle(n, k, a).unwrap().value();
                    if naive.abs() > 1e-11 {
                        assert!(
                            rel(naive, gap) < 1e-4,
                            "cycle n={n} k={k} a={a}: {naive} vs {gap}"
                        );
                    } else {
                        assert!(gap.abs() < 2e-11);
                    }
                }
            }
        }
        assert!(limit_gap_cycle(10, 6, 0.2).is_err());
    }

    #[test]
    fn entry_record() {
        let g = GraphSpec::cycle(8).unwrap();
        let e = KatzEntry::new(g, VertexPair::new(3, 1), 0.25).unwrap();
        assert_eq!(e.pair, VertexPair::new(1, 3));
        assert_eq!(e.value, katz_cycle(8, 1, 3, 0.25).unwrap());
        assert!(KatzEntry::new(g, VertexPair::new(1, 3), 0.5).is_err());
    }
}
