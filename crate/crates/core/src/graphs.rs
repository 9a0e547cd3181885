//! Path and cycle graphs, their admissible decay parameters, graph distance
//! and effective resistance.
//!
//! Vertices are labelled `1..=n` everywhere in the public API.

use std::f64::consts::PI;
use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::{DenseMatrix, MAX_DENSE};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Path,
    Cycle,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Path => f.write_str("path"),
            Family::Cycle => f.write_str("cycle"),
        }
    }
}

/// `P_n` (edges `{i, i+1}`) or `C_n` (additionally `{n, 1}`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GraphSpec {
    family: Family,
    n: usize,
}

impl GraphSpec {
    pub fn new(family: Family, n: usize) -> Result<Self> {
        let min = match family {
            Family::Path => 2,
            Family::Cycle => 3,
        };
        if n < min {
            return Err(Error::InvalidGraph(format!(
                "{family} graph needs at least {min} vertices, got {n}"
            )));
        }
        Ok(Self { family, n })
    }

    pub fn path(n: usize) -> Result<Self> {
        Self::new(Family::Path, n)
    }

    pub fn cycle(n: usize) -> Result<Self> {
        Self::new(Family::Cycle, n)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Validated, normalised pair `i <= j`.
    pub fn pair(&self, i: usize, j: usize) -> Result<VertexPair> {
        let p = VertexPair::new(i, j);
        self.check_pair(p)?;
        Ok(p)
    }

    pub fn check_pair(&self, p: VertexPair) -> Result<()> {
        if p.i == 0 || p.j > self.n {
            return Err(Error::VertexOutOfRange {
                i: p.i,
                j: p.j,
                n: self.n,
            });
        }
        Ok(())
    }

    /// All pairs `i < j` in lexicographic order.
    pub fn pairs(&self) -> impl Iterator<Item = VertexPair> + '_ {
        (1..=self.n).flat_map(move |i| (i + 1..=self.n).map(move |j| VertexPair { i, j }))
    }

    /// 0-based neighbours of the 0-based vertex `v`.
    pub(crate) fn neighbours(&self, v: usize) -> impl Iterator<Item = usize> {
        let n = self.n;
        let (prev, next) = match self.family {
            Family::Path => (v.checked_sub(1), (v + 1 < n).then_some(v + 1)),
            Family::Cycle => (Some((v + n - 1) % n), Some((v + 1) % n)),
        };
        prev.into_iter().chain(next)
    }

    pub fn adjacency(&self) -> DenseMatrix {
        let mut a = DenseMatrix::zeros(self.n);
        for v in 0..self.n {
            for u in self.neighbours(v) {
                a[(v, u)] = 1.0;
            }
        }
        a
    }

    /// `L = D - A`.
    pub fn laplacian(&self) -> DenseMatrix {
        let mut l = self.adjacency();
        for v in 0..self.n {
            let deg: f64 = l.row(v).iter().sum();
            for u in 0..self.n {
                l[(v, u)] = -l[(v, u)];
            }
            l[(v, v)] = deg;
        }
        l
    }
}

impl fmt::Display for GraphSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::Path => write!(f, "P_{}", self.n),
            Family::Cycle => write!(f, "C_{}", self.n),
        }
    }
}

/// Unordered vertex pair stored with `i <= j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexPair {
    pub i: usize,
    pub j: usize,
}

impl VertexPair {
    pub fn new(a: usize, b: usize) -> Self {
        Self {
            i: a.min(b),
            j: a.max(b),
        }
    }
}

impl fmt::Display for VertexPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.i, self.j)
    }
}

/// A decay parameter checked against `0 < alpha < 1/rho(A)` for one graph.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Alpha {
    value: f64,
    rho: f64,
}

impl Alpha {
    pub fn new(g: &GraphSpec, value: f64) -> Result<Self> {
        let rho = spectral_radius(g);
        let bound = 1.0 / rho;
        if !(value > 0.0 && value < bound) {
            return Err(Error::InadmissibleAlpha {
                alpha: value,
                bound,
            });
        }
        Ok(Self { value, rho })
    }

    /// Like [`Alpha::new`] but also requires `alpha < 1/2`, the range where
    /// the `d_n` bounds and large-`n` limits hold.
    pub fn below_half(g: &GraphSpec, value: f64) -> Result<Self> {
        let a = Self::new(g, value)?;
        if value >= 0.5 {
            return Err(Error::InadmissibleAlpha {
                alpha: value,
                bound: 0.5,
            });
        }
        Ok(a)
    }

    pub fn value(&self) -> f64 {
        self.value
    }

    pub fn rho(&self) -> f64 {
        self.rho
    }

    pub fn bound(&self) -> f64 {
        1.0 / self.rho
    }
}

/// `2 cos(pi / (n + 1))` for paths, `2` for cycles.
pub fn spectral_radius(g: &GraphSpec) -> f64 {
    match g.family {
        Family::Path => 2.0 * (PI / (g.n as f64 + 1.0)).cos(),
        Family::Cycle => 2.0,
    }
}

/// Shortest-path length.
pub fn graph_distance(g: &GraphSpec, p: VertexPair) -> Result<usize> {
    g.check_pair(p)?;
    let diff = p.j - p.i;
    Ok(match g.family {
        Family::Path => diff,
        Family::Cycle => diff.min(g.n - diff),
    })
}

/// Effective resistance with unit edge resistors: `j - i` on paths and
/// `k (n - k) / n` on cycles, the two arcs of lengths `k` and `n - k` being
/// in parallel.
pub fn resistance(g: &GraphSpec, p: VertexPair) -> Result<f64> {
    let k = graph_distance(g, p)? as f64;
    Ok(match g.family {
        Family::Path => k,
        Family::Cycle => k * (g.n as f64 - k) / g.n as f64,
    })
}

/// Moore-Penrose pseudoinverse of the Laplacian via
/// `L^+ = (L + J/n)^{-1} - J/n`, valid for connected graphs.
pub fn laplacian_pseudoinverse(g: &GraphSpec) -> Result<DenseMatrix> {
    let n = g.n;
    if n > MAX_DENSE {
        return Err(Error::TooLarge { n, max: MAX_DENSE });
    }
    let shift = 1.0 / n as f64;
    let mut m = g.laplacian();
    for r in 0..n {
        for c in 0..n {
            m[(r, c)] += shift;
        }
    }
    let mut inv = m.inverse()?;
    for r in 0..n {
        for c in 0..n {
            inv[(r, c)] -= shift;
        }
    }
    Ok(inv)
}

/// `L^+_ii + L^+_jj - 2 L^+_ij` from a dense pseudoinverse.
pub fn resistance_oracle(g: &GraphSpec, p: VertexPair) -> Result<f64> {
    g.check_pair(p)?;
    let lp = laplacian_pseudoinverse(g)?;
    Ok(resistance_from_pinv(&lp, p))
}

pub fn resistance_from_pinv(lp: &DenseMatrix, p: VertexPair) -> f64 {
    let (a, b) = (p.i - 1, p.j - 1);
    lp[(a, a)] + lp[(b, b)] - 2.0 * lp[(a, b)]
}
