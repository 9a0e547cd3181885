//! Property sweeps behind `katzlab verify`.
//!
//! Each suite checks one identity, bound or ordering property over a fixed
//! deterministic grid and reports how many cases it ran, the worst error (or
//! smallest margin) it saw, and whether it passed. The `d_n` evaluator used
//! by the polynomial suites is injectable so that a deliberately broken
//! evaluator can be shown to fail.

use std::fmt;

use crate::dpoly::{
    cycle_denominator, cycle_denominator_parity, d_closed, d_recursive, d_special_half,
    d_special_root5, fib_ratio, ratio_constant,
};
use crate::graphs::{
    laplacian_pseudoinverse, resistance, resistance_from_pinv, spectral_radius, Family, GraphSpec,
};
use crate::katz::{
    katz, katz_cycle, katz_limit_cycle, katz_limit_path, katz_oracle_inverse, katz_oracle_series,
    katz_path, limit_gap_cycle, limit_gap_path,
};
use crate::linalg::DenseMatrix;
use crate::ordering::{agreement, cutoff_root, cycle_numerator_gap, p_gap, GapPoly};
use crate::INV_SQRT5;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Level {
    Quick,
    Full,
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Level::Quick => "quick",
            Level::Full => "full",
        })
    }
}

/// `{0.01 k : k = 1..49}` plus the probes `1/sqrt 5` and `0.499`.
pub fn alpha_grid() -> Vec<f64> {
    let mut g: Vec<f64> = (1..=49).map(|k| k as f64 / 100.0).collect();
    g.push(INV_SQRT5);
    g.push(0.499);
    g.sort_by(f64::total_cmp);
    g
}

/// `{0.02 k}` restricted to `(0, bound)`.
pub fn coarse_grid(bound: f64) -> Vec<f64> {
    (1..)
        .map(|k| k as f64 * 0.02)
        .take_while(|a| *a < bound)
        .collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteReport {
    pub id: &'static str,
    pub title: &'static str,
    pub cases: usize,
    /// Worst relative/absolute error, or for inequality suites the largest
    /// violation ratio (negative when everything holds with room to spare).
    pub worst: f64,
    pub tolerance: f64,
    pub passed: bool,
    /// First failing case, if any.
    pub failure: Option<String>,
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}] {:<20} {:<58} cases={:<7} worst={:<11.3e} tol={:<9.1e}",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.title,
            self.cases,
            self.worst,
            self.tolerance
        )?;
        if let Some(msg) = &self.failure {
            write!(f, "\n       first failure: {msg}")?;
        }
        Ok(())
    }
}

struct Tracker {
    cases: usize,
    worst: f64,
    tol: f64,
    failure: Option<String>,
}

impl Tracker {
    fn new(tol: f64) -> Self {
        Self {
            cases: 0,
            worst: f64::NEG_INFINITY,
            tol,
            failure: None,
        }
    }

    /// Record an error value; fails when it exceeds the tolerance or is NaN.
    fn error(&mut self, err: f64, ctx: impl FnOnce() -> String) {
        self.cases += 1;
        if err > self.worst || err.is_nan() {
            self.worst = err;
        }
        if !(err <= self.tol) && self.failure.is_none() {
            self.failure = Some(format!("{} (error {err:e})", ctx()));
        }
    }

    /// Record a boolean outcome.
    fn holds(&mut self, ok: bool, ctx: impl FnOnce() -> String) {
        self.cases += 1;
        if self.worst == f64::NEG_INFINITY {
            self.worst = 0.0;
        }
        if !ok {
            self.worst = 1.0;
            if self.failure.is_none() {
                self.failure = Some(ctx());
            }
        }
    }

    fn finish(self, id: &'static str, title: &'static str) -> SuiteReport {
        SuiteReport {
            id,
            title,
            cases: self.cases,
            worst: if self.cases == 0 { 0.0 } else { self.worst },
            tolerance: self.tol,
            passed: self.failure.is_none(),
            failure: self.failure,
        }
    }
}

fn rel_err(a: f64, b: f64) -> f64 {
    if a == b {
        return 0.0;
    }
    (a - b).abs() / a.abs().max(b.abs())
}

type DEval = fn(usize, f64) -> f64;

/// Ordered list of suite ids and titles.
pub const SUITES: &[(&str, &str)] = &[
    (
        "d-recursion",
        "closed form of d_n equals its two-term recursion",
    ),
    ("d-splitting", "d_n = d_k d_{n-k} - a^2 d_{k-1} d_{n-k-1}"),
    ("d-product", "d_k d_n - d_{k-1} d_{n+1} = a^{2k} d_{n-k}"),
    ("d-bounds", "d_{n-1} > d_n > d_{n-1}/2 > 0 on (0, 1/2)"),
    (
        "d-special",
        "d_n at 1/2 and 1/sqrt5 match their closed forms",
    ),
    (
        "d-ratio-limit",
        "d_{n+k}/d_n tends to ((1+sqrt(1-4a^2))/2)^k",
    ),
    ("d-vanishing", "a^n/d_n <= 2a/(n+1)"),
    ("d-fib-bound", "d_n >= FR_n d_{n-1} below 1/sqrt5"),
    ("path-determinant", "det(I - aA) on P_n equals d_n"),
    ("cycle-determinant", "det(I - aA) on C_n equals D_n"),
    ("cycle-parity", "even/odd factorisation of D_n"),
    (
        "katz-closed-form",
        "closed-form Katz equals dense inverse (off-diagonal)",
    ),
    ("katz-series", "truncated walk series equals dense inverse"),
    (
        "resistance-oracle",
        "closed-form resistance equals Laplacian pseudoinverse",
    ),
    (
        "cycle-ordering",
        "cycles: Katz, resistance, distance rank identically",
    ),
    (
        "path-ordering",
        "paths: Katz and resistance agree below 1/sqrt5",
    ),
    (
        "shift-monotone",
        "K_{i,i+k} <= K_{i+1,i+k+1} toward the centre",
    ),
    ("cycle-numerator", "Delta_{n,k} > 0 and decreasing in k"),
    ("gap-sign", "sign of p_j equals sign of p~_j"),
    ("gap-endpoints", "p~ at 1/2 and 1/sqrt5"),
    (
        "cutoff-roots",
        "cut-off roots inside (1/sqrt5, 1/2), decreasing in n",
    ),
    ("katz-limits", "Katz entries converge to the large-n limits"),
];

pub struct Verifier {
    level: Level,
    d: DEval,
}

impl Verifier {
    pub fn new(level: Level) -> Self {
        Self {
            level,
            d: d_recursive,
        }
    }

    /// Use a different `d_n` evaluator in the polynomial suites.
    pub fn with_evaluator(level: Level, d: DEval) -> Self {
        Self { level, d }
    }

    fn pick(&self, quick: usize, full: usize) -> usize {
        match self.level {
            Level::Quick => quick,
            Level::Full => full,
        }
    }

    pub fn run_all(&self) -> Vec<SuiteReport> {
        SUITES
            .iter()
            .filter_map(|(id, _)| self.run_suite(id))
            .collect()
    }

    pub fn run_suite(&self, id: &str) -> Option<SuiteReport> {
        let (id, title) = *SUITES.iter().find(|(s, _)| *s == id)?;
        let t = match id {
            "d-recursion" => self.d_recursion(),
            "d-splitting" => self.d_splitting(),
            "d-product" => self.d_product(),
            "d-bounds" => self.d_bounds(),
            "d-special" => self.d_special(),
            "d-ratio-limit" => self.d_ratio_limit(),
            "d-vanishing" => self.d_vanishing(),
            "d-fib-bound" => self.d_fib_bound(),
            "path-determinant" => self.path_determinant(),
            "cycle-determinant" => self.cycle_determinant(),
            "cycle-parity" => self.cycle_parity(),
            "katz-closed-form" => self.katz_closed_form(),
            "katz-series" => self.katz_series(),
            "resistance-oracle" => self.resistance_oracle(),
            "cycle-ordering" => self.cycle_ordering(),
            "path-ordering" => self.path_ordering(),
            "shift-monotone" => self.shift_monotone(),
            "cycle-numerator" => self.cycle_numerator(),
            "gap-sign" => self.gap_sign(),
            "gap-endpoints" => self.gap_endpoints(),
            "cutoff-roots" => self.cutoff_roots(),
            "katz-limits" => self.katz_limits(),
            _ => unreachable!(),
        };
        Some(t.finish(id, title))
    }

    /// `d_k` with `d_{-1} = 0`, the value the recursion run backwards gives.
    fn dm(&self, k: isize, a: f64) -> f64 {
        if k < 0 {
            0.0
        } else {
            (self.d)(k as usize, a)
        }
    }

    fn d_recursion(&self) -> Tracker {
        let mut t = Tracker::new(1e-12);
        for a in alpha_grid() {
            for n in 0..=self.pick(30, 100) {
                let c = d_closed(n, a);
                let err = (c - (self.d)(n, a)).abs() / c.abs().max(1.0);
                t.error(err, || format!("n = {n}, alpha = {a}"));
            }
        }
        t
    }

    fn d_splitting(&self) -> Tracker {
        let mut t = Tracker::new(1e-12);
        for a in alpha_grid() {
            for n in 1..=self.pick(30, 60) as isize {
                for k in 1..=n {
                    let rhs = self.dm(k, a) * self.dm(n - k, a)
                        - a * a * self.dm(k - 1, a) * self.dm(n - k - 1, a);
                    t.error((self.dm(n, a) - rhs).abs(), || {
                        format!("n = {n}, k = {k}, alpha = {a}")
                    });
                }
            }
        }
        t
    }

    fn d_product(&self) -> Tracker {
        let mut t = Tracker::new(1e-12);
        for a in alpha_grid() {
            for n in 1..=self.pick(30, 60) as isize {
                for k in 1..=n {
                    let lhs = self.dm(k, a) * self.dm(n, a) - self.dm(k - 1, a) * self.dm(n + 1, a);
                    let rhs = a.powi(2 * k as i32) * self.dm(n - k, a);
                    t.error((lhs - rhs).abs(), || {
                        format!("n = {n}, k = {k}, alpha = {a}")
                    });
                }
            }
        }
        t
    }

    fn d_bounds(&self) -> Tracker {
        let mut t = Tracker::new(0.0);
        for a in alpha_grid() {
            for n in 2..=self.pick(30, 100) {
                let (prev, cur) = ((self.d)(n - 1, a), (self.d)(n, a));
                t.holds(prev > cur && cur > prev / 2.0 && prev / 2.0 > 0.0, || {
                    format!("n = {n}, alpha = {a}: d_(n-1) = {prev:e}, d_n = {cur:e}")
                });
            }
        }
        t
    }

    fn d_special(&self) -> Tracker {
        let mut t = Tracker::new(1e-12);
        for n in 0..=self.pick(30, 100) {
            t.error(rel_err((self.d)(n, 0.5), d_special_half(n)), || {
                format!("alpha = 1/2, n = {n}")
            });
            t.error(rel_err((self.d)(n, INV_SQRT5), d_special_root5(n)), || {
                format!("alpha = 1/sqrt5, n = {n}")
            });
        }
        t
    }

    fn d_ratio_limit(&self) -> Tracker {
        let mut t = Tracker::new(1e-8);
        let n = 400;
        for a in [0.1, 0.3, 0.45] {
            for k in 1..=3 {
                let ratio = (self.d)(n + k, a) / (self.d)(n, a);
                let limit = ratio_constant(k as i32, a).unwrap_or(f64::NAN);
                t.error((ratio - limit).abs(), || format!("k = {k}, alpha = {a}"));
            }
        }
        t
    }

    fn d_vanishing(&self) -> Tracker {
        // Error is (lhs - rhs) / rhs, so <= 0 means the bound holds.
        let mut t = Tracker::new(0.0);
        for a in alpha_grid() {
            for n in 1..=self.pick(60, 200) {
                let lhs = a.powi(n as i32) / (self.d)(n, a);
                let rhs = 2.0 * a / (n as f64 + 1.0);
                t.error((lhs - rhs) / rhs, || format!("n = {n}, alpha = {a}"));
            }
        }
        t
    }

    fn d_fib_bound(&self) -> Tracker {
        // FR_1 = 1 makes n = 1 an equality; allow round-off there.
        let mut t = Tracker::new(1e-14);
        for a in alpha_grid().into_iter().filter(|a| *a < INV_SQRT5) {
            for n in 1..=self.pick(30, 100) {
                let bound = fib_ratio(n).unwrap_or(f64::NAN) * (self.d)(n - 1, a);
                let cur = (self.d)(n, a);
                t.error((bound - cur) / cur, || format!("n = {n}, alpha = {a}"));
            }
        }
        t
    }

    fn path_determinant(&self) -> Tracker {
        let mut t = Tracker::new(1e-11);
        for n in 2..=self.pick(20, 40) {
            let g = GraphSpec::path(n).expect("n >= 2");
            for a in alpha_grid() {
                let det = kernel(&g, a).determinant().unwrap_or(f64::NAN);
                t.error(rel_err(det, (self.d)(n, a)), || {
                    format!("P_{n}, alpha = {a}")
                });
            }
        }
        t
    }

    fn cycle_determinant(&self) -> Tracker {
        let mut t = Tracker::new(1e-11);
        for n in 3..=self.pick(20, 40) {
            let g = GraphSpec::cycle(n).expect("n >= 3");
            for a in alpha_grid() {
                let det = kernel(&g, a).determinant().unwrap_or(f64::NAN);
                let closed =
                    (self.d)(n - 1, a) - 2.0 * a.powi(n as i32) - 2.0 * a * a * (self.d)(n - 2, a);
                t.error(rel_err(det, closed), || format!("C_{n}, alpha = {a}"));
            }
        }
        t
    }

    fn cycle_parity(&self) -> Tracker {
        let mut t = Tracker::new(1e-12);
        for n in 3..=self.pick(30, 100) {
            for a in alpha_grid() {
                let (x, y) = (
                    cycle_denominator(n, a).unwrap_or(f64::NAN),
                    cycle_denominator_parity(n, a).unwrap_or(f64::NAN),
                );
                t.error(rel_err(x, y), || format!("n = {n}, alpha = {a}"));
            }
        }
        t
    }

    fn katz_closed_form(&self) -> Tracker {
        let mut t = Tracker::new(1e-10);
        for family in [Family::Path, Family::Cycle] {
            for n in 5..=self.pick(20, 40) {
                let g = GraphSpec::new(family, n).expect("n >= 5");
                for a in coarse_grid(1.0 / spectral_radius(&g)) {
                    let k = match katz_oracle_inverse(&g, a) {
                        Ok(k) => k,
                        Err(e) => {
                            t.holds(false, || format!("{g}, alpha = {a}: {e}"));
                            continue;
                        }
                    };
                    let worst = g
                        .pairs()
                        .map(|p| rel_err(katz(&g, p, a).unwrap_or(f64::NAN), k[(p.i - 1, p.j - 1)]))
                        .fold(0.0, f64::max);
                    t.error(worst, || format!("{g}, alpha = {a}"));
                }
            }
        }
        t
    }

    fn katz_series(&self) -> Tracker {
        let mut t = Tracker::new(1e-10);
        for family in [Family::Path, Family::Cycle] {
            for n in 5..=self.pick(12, 20) {
                let g = GraphSpec::new(family, n).expect("n >= 5");
                for a in coarse_grid(0.45) {
                    let (s, k) =
                        match (katz_oracle_series(&g, a, 1e-12), katz_oracle_inverse(&g, a)) {
                            (Ok(s), Ok(k)) => (s, k),
                            _ => {
                                t.holds(false, || format!("{g}, alpha = {a}: oracle failed"));
                                continue;
                            }
                        };
                    t.error(max_abs_diff(&s, &k), || format!("{g}, alpha = {a}"));
                }
            }
        }
        t
    }

    fn resistance_oracle(&self) -> Tracker {
        let mut t = Tracker::new(1e-10);
        for family in [Family::Path, Family::Cycle] {
            for n in 3..=self.pick(20, 40) {
                let g = GraphSpec::new(family, n).expect("n >= 3");
                let lp = match laplacian_pseudoinverse(&g) {
                    Ok(lp) => lp,
                    Err(e) => {
                        t.holds(false, || format!("{g}: {e}"));
                        continue;
                    }
                };
                for p in g.pairs() {
                    let r = resistance(&g, p).unwrap_or(f64::NAN);
                    t.error((r - resistance_from_pinv(&lp, p)).abs(), || {
                        format!("{g}, pair {p}")
                    });
                }
            }
        }
        t
    }

    fn cycle_ordering(&self) -> Tracker {
        let mut t = Tracker::new(0.0);
        for n in 5..=self.pick(15, 30) {
            let g = GraphSpec::cycle(n).expect("n >= 5");
            for a in coarse_grid(0.5) {
                let ok = agreement(&g, a).map(|r| r.all_concordant() && r.all_ties_match());
                t.holds(ok == Ok(true), || format!("C_{n}, alpha = {a}: {ok:?}"));
            }
        }
        t
    }

    fn path_ordering(&self) -> Tracker {
        let mut t = Tracker::new(0.0);
        for n in 3..=self.pick(15, 30) {
            let g = GraphSpec::path(n).expect("n >= 3");
            for a in coarse_grid(INV_SQRT5) {
                let ok = agreement(&g, a).map(|r| r.katz_vs_resistance.concordant);
                t.holds(ok == Ok(true), || format!("P_{n}, alpha = {a}"));
            }
        }
        let g = GraphSpec::path(10).expect("n >= 2");
        let w = agreement(&g, 0.46)
            .ok()
            .and_then(|r| r.katz_vs_resistance.witness);
        t.holds(
            w.is_some_and(|w| {
                let dk = w.preferred_by_first.j - w.preferred_by_first.i;
                let dr = w.preferred_by_second.j - w.preferred_by_second.i;
                dk == dr + 1
            }),
            || format!("P_10, alpha = 0.46: expected a distance (k+1, k) inversion, got {w:?}"),
        );
        t
    }

    fn shift_monotone(&self) -> Tracker {
        let mut t = Tracker::new(0.0);
        let grid: Vec<f64> = alpha_grid().into_iter().filter(|a| *a < 0.5).collect();
        for n in 3..=self.pick(20, 30) {
            let g = GraphSpec::path(n).expect("n >= 3");
            for &a in &grid {
                for k in 1..n {
                    for i in 1.. {
                        if i + k + 1 > n || n < k + 2 * i + 1 {
                            break;
                        }
                        let x = katz(&g, g.pair(i, i + k).expect("in range"), a);
                        let y = katz(&g, g.pair(i + 1, i + k + 1).expect("in range"), a);
                        let ok = matches!((x, y), (Ok(x), Ok(y)) if x <= y * (1.0 + 1e-14));
                        t.holds(ok, || format!("P_{n}, i = {i}, k = {k}, alpha = {a}"));
                    }
                }
                // distance monotonicity from the end vertex
                let row: Vec<f64> = (2..=n)
                    .map(|j| katz_path(n, 1, j, a).unwrap_or(f64::NAN))
                    .collect();
                t.holds(row.windows(2).all(|w| w[1] < w[0]), || {
                    format!("P_{n}, alpha = {a}: row 1 not decreasing")
                });
            }
        }
        t
    }

    fn cycle_numerator(&self) -> Tracker {
        let mut t = Tracker::new(0.0);
        for n in 5..=self.pick(30, 60) {
            for a in coarse_grid(0.5) {
                for k in 1..n / 2 {
                    let here = cycle_numerator_gap(n, k, a);
                    t.holds(matches!(here, Ok(v) if v > 0.0), || {
                        format!("n = {n}, k = {k}, alpha = {a}")
                    });
                    if k + 1 < n / 2 {
                        let next = cycle_numerator_gap(n, k + 1, a);
                        let ok = matches!((here, next), (Ok(x), Ok(y)) if x >= y);
                        t.holds(ok, || {
                            format!("n = {n}, k = {k}, alpha = {a}: not decreasing")
                        });
                    }
                }
            }
        }
        t
    }

    fn gap_sign(&self) -> Tracker {
        let mut t = Tracker::new(0.0);
        for n in 3..=self.pick(20, 30) {
            let bound = 1.0 / spectral_radius(&GraphSpec::path(n).expect("n >= 3"));
            for j in 1..=3.min(n - 2) {
                let gp = GapPoly::new(n, j).expect("n - j >= 2");
                for a in coarse_grid(bound) {
                    let p = p_gap(n, j, a).unwrap_or(f64::NAN);
                    let q = gp.p_tilde(a);
                    t.holds(p.signum() == q.signum(), || {
                        format!("n = {n}, j = {j}, alpha = {a}: {p:e} vs {q:e}")
                    });
                }
            }
        }
        t
    }

    fn gap_endpoints(&self) -> Tracker {
        let mut t = Tracker::new(1e-12);
        let max_nj = self.pick(30, 50);
        for j in 1..=3 {
            let mut prev: [Option<f64>; 2] = [None, None];
            for nj in 2..=max_nj {
                let gp = GapPoly::new(nj + j, j).expect("n - j >= 2");
                let half = gp.p_tilde(0.5);
                if nj == 4 {
                    t.error(half.abs(), || format!("p~(1/2) at n - j = 4, j = {j}"));
                } else if nj > 4 {
                    t.holds(half < 0.0, || {
                        format!("p~(1/2) = {half:e} at n - j = {nj}, j = {j}")
                    });
                }
                let root5 = gp.p_tilde(INV_SQRT5);
                t.holds(root5 > 0.0, || {
                    format!("p~(1/sqrt5) = {root5:e} at n - j = {nj}, j = {j}")
                });
                t.error((root5 - gp.p_tilde_at_inv_sqrt5()).abs(), || {
                    format!("closed form at 1/sqrt5, n - j = {nj}, j = {j}")
                });
                let slot = &mut prev[nj % 2];
                if let Some(p) = *slot {
                    t.holds(root5 < p, || {
                        format!("p~(1/sqrt5) not decreasing at n - j = {nj}, j = {j}")
                    });
                }
                *slot = Some(root5);
            }
        }
        t
    }

    fn cutoff_roots(&self) -> Tracker {
        let mut t = Tracker::new(1e-4);
        let n_hi = self.pick(31, 56);
        let mut roots = Vec::new();
        for n in 6..=n_hi {
            match cutoff_root(n, 1, 1e-15) {
                Ok(r) => {
                    t.holds(r.root > INV_SQRT5 && r.root < 0.5, || {
                        format!("n = {n}: root {} outside", r.root)
                    });
                    if let Some(&(_, prev)) = roots.last() {
                        t.holds(r.root < prev, || {
                            format!("n = {n}: root {} not below {prev}", r.root)
                        });
                    }
                    roots.push((n, r.root));
                }
                Err(e) => t.holds(false, || format!("n = {n}: {e}")),
            }
        }
        let find = |m: usize| roots.iter().find(|(n, _)| *n == m).map(|(_, r)| *r);
        if let (Some(r20), Some(r30)) = (find(20), find(30)) {
            t.holds(r30 < r20, || "root(30) is not below root(20)".into());
            t.error((r30 - r20).abs(), || "|root(30) - root(20)|".into());
        }
        t
    }

    fn katz_limits(&self) -> Tracker {
        let mut t = Tracker::new(1e-8);
        let ns = [10usize, 20, 40, 80, 160, 320];
        for a in [0.1, 0.3, 0.45] {
            for (i, j) in [(1usize, 2usize), (2, 5), (3, 3)] {
                let limit = katz_limit_path(i, j, a)
                    .map(|l| l.value)
                    .unwrap_or(f64::NAN);
                let exact = katz_path(320, i, j, a).unwrap_or(f64::NAN);
                t.error((exact - limit).abs(), || {
                    format!("path ({i},{j}), alpha = {a}")
                });
                let gaps: Vec<f64> = ns
                    .iter()
                    .map(|&n| {
                        limit_gap_path(n, i, j, a)
                            .map(|g| g.ln_abs)
                            .unwrap_or(f64::NAN)
                    })
                    .collect();
                t.holds(gaps.windows(2).all(|w| w[1] < w[0]), || {
                    format!("path ({i},{j}), alpha = {a}: gaps not decreasing")
                });
            }
            for k in 1..=3 {
                let limit = katz_limit_cycle(k, a).map(|l| l.value).unwrap_or(f64::NAN);
                for n in [320usize, 321] {
                    let exact = katz_cycle(n, 1, 1 + k, a).unwrap_or(f64::NAN);
                    t.error((exact - limit).abs(), || {
                        format!("C_{n} offset {k}, alpha = {a}")
                    });
                }
                let gaps: Vec<f64> = ns
                    .iter()
                    .map(|&n| {
                        limit_gap_cycle(n, k, a)
                            .map(|g| g.ln_abs)
                            .unwrap_or(f64::NAN)
                    })
                    .collect();
                t.holds(gaps.windows(2).all(|w| w[1] < w[0]), || {
                    format!("cycle offset {k}, alpha = {a}: gaps not decreasing")
                });
            }
        }
        t
    }
}

fn kernel(g: &GraphSpec, a: f64) -> DenseMatrix {
    let mut m = DenseMatrix::identity(g.n());
    m.add_scaled(&g.adjacency(), -a);
    m
}

fn max_abs_diff(a: &DenseMatrix, b: &DenseMatrix) -> f64 {
    let n = a.order();
    let mut worst: f64 = 0.0;
    for r in 0..n {
        for c in 0..n {
            worst = worst.max((a[(r, c)] - b[(r, c)]).abs());
        }
    }
    worst
}
