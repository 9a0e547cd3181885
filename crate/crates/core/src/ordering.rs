//! Ranking vertex pairs under Katz similarity, resistance and distance,
//! deciding whether two rankings agree, and locating the cut-off values of
//! the decay parameter where path rankings start to disagree.
//!
//! On a path the tightest competition between distance classes `j` and
//! `j + 1` is between the end pair `(1, 1 + j)` and the central pair
//! `(m, m + j + 1)` with `m = ceil((n - j) / 2)`. Their Katz difference is
//! the gap polynomial `p_j`; dividing out the positive factor
//! `alpha^j / d_n` leaves `p~_j = d_{n-j-1} - alpha d_{m-1} d_{n-m-j-1}`,
//! which has the same sign and is what the root finder works with.

use std::cmp::Ordering;
use std::fmt;

use crate::dpoly::{d_table, PHI_LARGE, PHI_SMALL};
use crate::error::{Error, Result};
use crate::graphs::Family;
use crate::graphs::{graph_distance, resistance, Alpha, GraphSpec, VertexPair};
use crate::katz::{katz, katz_oracle_inverse, path_entry, CYCLE_CLOSED_FORM_MIN_N};
use crate::INV_SQRT5;

/// Relative tolerance under which two scores fall in the same tie class.
pub const TIE_REL_TOL: f64 = 1e-11;

/// Initial inward nudge of both bracket endpoints.
pub const BRACKET_NUDGE: f64 = 1e-12;

/// Iteration cap for [`cutoff_root`].
pub const MAX_BISECTIONS: usize = 200;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Metric {
    Katz(f64),
    Resistance,
    Distance,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MetricKind {
    Katz,
    Resistance,
    Distance,
}

impl Metric {
    pub fn kind(&self) -> MetricKind {
        match self {
            Metric::Katz(_) => MetricKind::Katz,
            Metric::Resistance => MetricKind::Resistance,
            Metric::Distance => MetricKind::Distance,
        }
    }
}

impl fmt::Display for MetricKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MetricKind::Katz => "katz",
            MetricKind::Resistance => "resistance",
            MetricKind::Distance => "distance",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RankedPair {
    pub pair: VertexPair,
    pub score: f64,
    /// Position of the tie class, 0 for the most similar pairs.
    pub class: usize,
}

/// All `n(n-1)/2` pairs `i < j`, most similar first: Katz descending,
/// resistance and distance ascending. Ties (relative gap at most
/// [`TIE_REL_TOL`]) share a class and are ordered by `(i, j)`.
#[derive(Debug, Clone, PartialEq)]
pub struct PairRanking {
    pub graph: GraphSpec,
    pub metric: Metric,
    pub entries: Vec<RankedPair>,
}

impl PairRanking {
    pub fn class_count(&self) -> usize {
        self.entries.last().map_or(0, |e| e.class + 1)
    }

    /// Class of every pair, indexed in lexicographic pair order.
    fn classes_by_pair(&self) -> Vec<usize> {
        let mut v: Vec<(VertexPair, usize)> =
            self.entries.iter().map(|e| (e.pair, e.class)).collect();
        v.sort_unstable_by_key(|(p, _)| *p);
        v.into_iter().map(|(_, c)| c).collect()
    }
}

fn same_class(a: f64, b: f64) -> bool {
    (a - b).abs() <= TIE_REL_TOL * a.abs().max(b.abs())
}

fn metric_scores(g: &GraphSpec, metric: Metric) -> Result<Vec<(VertexPair, f64)>> {
    match metric {
        Metric::Katz(alpha) => {
            Alpha::new(g, alpha)?;
            if g.family() == Family::Cycle && g.n() < CYCLE_CLOSED_FORM_MIN_N {
                let k = katz_oracle_inverse(g, alpha)?;
                return Ok(g.pairs().map(|p| (p, k[(p.i - 1, p.j - 1)])).collect());
            }
            if g.family() == Family::Path {
                let t = d_table(g.n(), alpha);
                return Ok(g
                    .pairs()
                    .map(|p| (p, path_entry(&t, g.n(), p, alpha)))
                    .collect());
            }
            g.pairs().map(|p| Ok((p, katz(g, p, alpha)?))).collect()
        }
        Metric::Resistance => g.pairs().map(|p| Ok((p, resistance(g, p)?))).collect(),
        Metric::Distance => g
            .pairs()
            .map(|p| Ok((p, graph_distance(g, p)? as f64)))
            .collect(),
    }
}

/// Rank all pairs of `g` under `metric`.
pub fn rank_pairs(g: &GraphSpec, metric: Metric) -> Result<PairRanking> {
    let sign = if matches!(metric, Metric::Katz(_)) {
        -1.0
    } else {
        1.0
    };
    let mut scored = metric_scores(g, metric)?;
    scored.sort_by(|a, b| (sign * a.1).total_cmp(&(sign * b.1)).then(a.0.cmp(&b.0)));

    let mut entries = Vec::with_capacity(scored.len());
    let mut class = 0;
    for (idx, &(pair, score)) in scored.iter().enumerate() {
        if idx > 0 && !same_class(scored[idx - 1].1, score) {
            class += 1;
        }
        entries.push(RankedPair { pair, score, class });
    }
    entries.sort_by(|a, b| a.class.cmp(&b.class).then(a.pair.cmp(&b.pair)));
    Ok(PairRanking {
        graph: *g,
        metric,
        entries,
    })
}

/// Two pairs ranked in opposite strict order by two metrics: the first
/// metric strictly prefers `preferred_by_first`, the second strictly
/// prefers `preferred_by_second`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Witness {
    pub metrics: (MetricKind, MetricKind),
    pub preferred_by_first: VertexPair,
    pub preferred_by_second: VertexPair,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} prefers {} but {} prefers {}",
            self.metrics.0, self.preferred_by_first, self.metrics.1, self.preferred_by_second
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Comparison {
    /// No pair of pairs is strictly ordered one way by the first ranking and
    /// strictly the other way by the second.
    pub concordant: bool,
    /// Both rankings induce the same tie classes.
    pub ties_match: bool,
    /// An inversion with the smallest class gap under the second ranking.
    pub witness: Option<Witness>,
}

/// Compare two rankings of the same graph.
pub fn compare(a: &PairRanking, b: &PairRanking) -> Comparison {
    assert_eq!(a.graph, b.graph, "rankings of different graphs");
    let ca = a.classes_by_pair();
    let cb = b.classes_by_pair();

    let mut joint: Vec<(usize, usize)> = ca.iter().copied().zip(cb.iter().copied()).collect();
    joint.sort_unstable();
    joint.dedup();

    // Sorted by a-class: concordant iff b-classes never step backwards
    // across a-class boundaries.
    let mut concordant = true;
    let mut max_prev_b: Option<usize> = None;
    let mut idx = 0;
    while idx < joint.len() {
        let class_a = joint[idx].0;
        let group: Vec<usize> = joint[idx..]
            .iter()
            .take_while(|(x, _)| *x == class_a)
            .map(|(_, y)| *y)
            .collect();
        let (lo, hi) = (group[0], *group.last().unwrap());
        if let Some(m) = max_prev_b {
            if lo < m {
                concordant = false;
            }
        }
        max_prev_b = Some(max_prev_b.map_or(hi, |m| m.max(hi)));
        idx += group.len();
    }

    // Same partition iff (a, b) class pairs are a bijection.
    let a_classes = joint
        .iter()
        .map(|x| x.0)
        .collect::<std::collections::BTreeSet<_>>()
        .len();
    let b_classes = joint
        .iter()
        .map(|x| x.1)
        .collect::<std::collections::BTreeSet<_>>()
        .len();
    let ties_match = joint.len() == a_classes && joint.len() == b_classes;

    let witness = if concordant {
        None
    } else {
        find_witness(a, b, &ca, &cb)
    };
    Comparison {
        concordant,
        ties_match,
        witness,
    }
}

fn find_witness(a: &PairRanking, b: &PairRanking, ca: &[usize], cb: &[usize]) -> Option<Witness> {
    let pairs: Vec<VertexPair> = a.graph.pairs().collect();
    let mut best: Option<(usize, usize, usize)> = None;
    for p in 0..pairs.len() {
        for q in 0..pairs.len() {
            if ca[p] < ca[q] && cb[q] < cb[p] {
                let gap = cb[p] - cb[q];
                if best.is_none_or(|(g, _, _)| gap < g) {
                    best = Some((gap, p, q));
                }
            }
        }
    }
    best.map(|(_, p, q)| Witness {
        metrics: (a.metric.kind(), b.metric.kind()),
        preferred_by_first: pairs[p],
        preferred_by_second: pairs[q],
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct AgreementReport {
    pub katz_vs_resistance: Comparison,
    pub katz_vs_distance: Comparison,
    pub resistance_vs_distance: Comparison,
}

impl AgreementReport {
    pub fn all_concordant(&self) -> bool {
        self.katz_vs_resistance.concordant
            && self.katz_vs_distance.concordant
            && self.resistance_vs_distance.concordant
    }

    pub fn all_ties_match(&self) -> bool {
        self.katz_vs_resistance.ties_match
            && self.katz_vs_distance.ties_match
            && self.resistance_vs_distance.ties_match
    }

    /// First inversion found, checking Katz against resistance first.
    pub fn witness(&self) -> Option<Witness> {
        self.katz_vs_resistance
            .witness
            .or(self.katz_vs_distance.witness)
            .or(self.resistance_vs_distance.witness)
    }
}

/// Pairwise comparison of the three rankings of `g` at `alpha`.
pub fn agreement(g: &GraphSpec, alpha: f64) -> Result<AgreementReport> {
    let k = rank_pairs(g, Metric::Katz(alpha))?;
    let r = rank_pairs(g, Metric::Resistance)?;
    let d = rank_pairs(g, Metric::Distance)?;
    Ok(AgreementReport {
        katz_vs_resistance: compare(&k, &r),
        katz_vs_distance: compare(&k, &d),
        resistance_vs_distance: compare(&r, &d),
    })
}

/// Gap polynomial indices on `P_n`: distance classes `j` and `j + 1`, with
/// the central pair starting at `m = ceil((n - j) / 2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GapPoly {
    pub n: usize,
    pub j: usize,
    pub m: usize,
}

impl GapPoly {
    pub fn new(n: usize, j: usize) -> Result<Self> {
        if j < 1 || n < j + 2 {
            return Err(Error::InvalidArgument(format!(
                "gap polynomial needs j >= 1 and n - j >= 2, got n = {n}, j = {j}"
            )));
        }
        Ok(Self {
            n,
            j,
            m: (n - j).div_ceil(2),
        })
    }

    /// `min_i K_{i,i+j} - max_i K_{i,i+j+1}` on `P_n`.
    pub fn p(&self, alpha: f64) -> Result<f64> {
        let g = GraphSpec::path(self.n)?;
        Alpha::new(&g, alpha)?;
        let t = d_table(self.n, alpha);
        let near = path_entry(&t, self.n, VertexPair::new(1, 1 + self.j), alpha);
        let far = path_entry(
            &t,
            self.n,
            VertexPair::new(self.m, self.m + self.j + 1),
            alpha,
        );
        Ok(near - far)
    }

    /// `d_{n-j-1} - alpha d_{m-1} d_{n-m-j-1}`, same sign as [`GapPoly::p`].
    pub fn p_tilde(&self, alpha: f64) -> f64 {
        let t = d_table(self.n - self.j - 1, alpha);
        t[self.n - self.j - 1] - alpha * t[self.m - 1] * t[self.n - self.m - self.j - 1]
    }

    /// Value of `p~` at `alpha = 1/sqrt 5` from the golden-ratio closed form.
    pub fn p_tilde_at_inv_sqrt5(&self) -> f64 {
        let e = (2 * self.m + self.j) as i32 - self.n as i32;
        let nj = (self.n - self.j) as i32;
        (PHI_LARGE.powi(e) + PHI_SMALL.powi(e) - 2.0 * PHI_SMALL.powi(nj))
            / 5f64.sqrt().powi(nj - 1)
    }

    /// Value of `p~` at `alpha = 1/2`: `(n - j - m (n - m - j)) / 2^(n-j-1)`.
    pub fn p_tilde_at_half(&self) -> f64 {
        let nj = (self.n - self.j) as f64;
        let m = self.m as f64;
        (nj - m * (nj - m)) / 2f64.powi((self.n - self.j - 1) as i32)
    }
}

pub fn p_gap(n: usize, j: usize, alpha: f64) -> Result<f64> {
    GapPoly::new(n, j)?.p(alpha)
}

pub fn p_tilde(n: usize, j: usize, alpha: f64) -> Result<f64> {
    Ok(GapPoly::new(n, j)?.p_tilde(alpha))
}

/// A bracketed root of `p~_j` on `P_n`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CutoffResult {
    pub n: usize,
    pub j: usize,
    /// Initial bracket, after any endpoint adjustment.
    pub bracket_lo: f64,
    pub bracket_hi: f64,
    pub root: f64,
    pub iterations: usize,
    /// `|p~(root)|`.
    pub residual: f64,
    /// Distance of `bracket_lo` above `1/sqrt 5`.
    pub left_shift: f64,
}

/// Bisection for the root of `p~_j` on `P_n` between `1/sqrt 5` and `1/2`.
///
/// Both endpoints start [`BRACKET_NUDGE`] inside. For long paths the root
/// lies closer to `1/sqrt 5` than that nudge, so while `p~` at the left end
/// is not positive the nudge shrinks tenfold, down to `1/sqrt 5` itself,
/// where `p~` is positive for every `n`. Stops when the bracket is at most
/// `tol` wide or cannot be split further in doubles.
pub fn cutoff_root(n: usize, j: usize, tol: f64) -> Result<CutoffResult> {
    let gp = GapPoly::new(n, j)?;
    if !(tol > 0.0) {
        return Err(Error::InvalidArgument(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    let hi0 = 0.5 - BRACKET_NUDGE;
    let f_hi = gp.p_tilde(hi0);

    let mut shift = BRACKET_NUDGE;
    let (mut lo0, mut f_lo) = (INV_SQRT5 + shift, gp.p_tilde(INV_SQRT5 + shift));
    while f_lo <= 0.0 && shift > 0.0 {
        shift = if shift > 1e-17 { shift / 10.0 } else { 0.0 };
        lo0 = INV_SQRT5 + shift;
        f_lo = gp.p_tilde(lo0);
    }
    if !(f_lo > 0.0 && f_hi < 0.0) {
        return Err(Error::BracketFailure {
            n,
            j,
            lo: lo0,
            hi: hi0,
            f_lo,
            f_hi,
        });
    }

    let (mut lo, mut hi) = (lo0, hi0);
    let mut iterations = 0;
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if iterations == MAX_BISECTIONS {
            return Err(Error::NoConvergence(MAX_BISECTIONS));
        }
        iterations += 1;
        let f = gp.p_tilde(mid);
        match f.partial_cmp(&0.0) {
            Some(Ordering::Greater) => lo = mid,
            Some(Ordering::Less) => hi = mid,
            _ => {
                lo = mid;
                hi = mid;
            }
        }
    }
    let root = 0.5 * (lo + hi);
    Ok(CutoffResult {
        n,
        j,
        bracket_lo: lo0,
        bracket_hi: hi0,
        root,
        iterations,
        residual: gp.p_tilde(root).abs(),
        left_shift: shift,
    })
}

/// [`cutoff_root`] for every `n` in `n_range`; each row keeps its own
/// outcome.
pub fn cutoff_table(
    j: usize,
    n_range: std::ops::RangeInclusive<usize>,
    tol: f64,
) -> Result<Vec<Result<CutoffResult>>> {
    if let Some(bad) = n_range.clone().find(|&n| n < j + 5) {
        return Err(Error::InvalidArgument(format!(
            "cut-off roots need n - j >= 5, got n = {bad}, j = {j}"
        )));
    }
    Ok(n_range.map(|n| cutoff_root(n, j, tol)).collect())
}

/// `Delta_{n,k}`: the Katz numerator at cycle distance `k` minus the one at
/// `k + 1`, i.e. `alpha^k d_{n-k-1} + alpha^(n-k) d_{k-1}
/// - alpha^(k+1) d_{n-k-2} - alpha^(n-k-1) d_k`.
pub fn cycle_numerator_gap(n: usize, k: usize, alpha: f64) -> Result<f64> {
    if k < 1 || k >= n / 2 {
        return Err(Error::InvalidArgument(format!(
            "need 1 <= k < floor(n/2), got n = {n}, k = {k}"
        )));
    }
    if !(alpha > 0.0 && alpha < 0.5) {
        return Err(Error::InadmissibleAlpha { alpha, bound: 0.5 });
    }
    let t = d_table(n, alpha);
    let p = |e: usize| alpha.powi(e as i32);
    Ok(p(k) * t[n - k - 1] + p(n - k) * t[k - 1] - p(k + 1) * t[n - k - 2] - p(n - k - 1) * t[k])
}
