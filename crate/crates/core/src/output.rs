//! CSV tables behind the `scatter`, `cutoff` and `converge` commands.
//!
//! Every table is assembled in memory after all inputs have been validated,
//! so nothing touches the filesystem on a bad argument. Floats are written
//! in scientific notation with 17 significant digits, lines end in `\n`,
//! and a header row is always present.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graphs::{graph_distance, resistance, Alpha, Family, GraphSpec};
use crate::katz::{
    katz, katz_cycle, katz_limit_cycle, katz_limit_path, katz_path, limit_gap_cycle, limit_gap_path,
};
use crate::ordering::cutoff_root;
use crate::INV_SQRT5;

pub const DEFAULT_SCATTER_ALPHAS: [f64; 3] = [0.2, 0.3, 0.46];
pub const DEFAULT_CONVERGE_NS: [usize; 6] = [10, 20, 40, 80, 160, 320];

/// Fixed 17-significant-digit scientific notation.
pub fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

/// One row per `(alpha, i, j)` with `i < j`: alpha ascending, then pairs in
/// lexicographic order.
pub fn scatter_csv(g: &GraphSpec, alphas: &[f64]) -> Result<String> {
    if alphas.is_empty() {
        return Err(Error::InvalidArgument(
            "at least one alpha is required".into(),
        ));
    }
    for &a in alphas {
        Alpha::new(g, a)?;
    }
    let mut sorted = alphas.to_vec();
    sorted.sort_by(f64::total_cmp);

    let mut out = String::from("alpha,i,j,distance,resistance,katz\n");
    for a in sorted {
        for p in g.pairs() {
            let _ = writeln!(
                out,
                "{},{},{},{},{},{}",
                fmt_f64(a),
                p.i,
                p.j,
                graph_distance(g, p)?,
                fmt_f64(resistance(g, p)?),
                fmt_f64(katz(g, p, a)?)
            );
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq)]
pub struct CutoffTable {
    pub csv: String,
    /// Roots strictly decrease in `n` over the successful rows.
    pub monotone_decreasing: bool,
    pub failures: usize,
}

/// Cut-off roots for `n_lo..=n_hi`. Rows whose bracket fails are kept with
/// a status instead of aborting the table.
pub fn cutoff_csv(j: usize, n_lo: usize, n_hi: usize, tol: f64) -> Result<CutoffTable> {
    if j < 1 {
        return Err(Error::InvalidArgument("j must be at least 1".into()));
    }
    if n_lo < j + 5 {
        return Err(Error::InvalidArgument(format!(
            "n - j must be >= 5 (got n-lo = {n_lo}, j = {j})"
        )));
    }
    if n_hi < n_lo {
        return Err(Error::InvalidArgument(format!(
            "n-hi ({n_hi}) is below n-lo ({n_lo})"
        )));
    }
    if !(tol > 0.0) {
        return Err(Error::InvalidArgument(format!(
            "tolerance must be positive, got {tol}"
        )));
    }

    let mut csv = String::from("n,j,root,root_minus_inv_sqrt5,iterations,residual,status\n");
    let mut roots = Vec::new();
    let mut failures = 0;
    for n in n_lo..=n_hi {
        match cutoff_root(n, j, tol) {
            Ok(r) => {
                roots.push(r.root);
                let _ = writeln!(
                    csv,
                    "{n},{j},{},{},{},{},ok",
                    fmt_f64(r.root),
                    fmt_f64(r.root - INV_SQRT5),
                    r.iterations,
                    fmt_f64(r.residual)
                );
            }
            Err(Error::BracketFailure { .. }) => {
                failures += 1;
                let _ = writeln!(csv, "{n},{j},,,,,bracket_failure");
            }
            Err(Error::NoConvergence(_)) => {
                failures += 1;
                let _ = writeln!(csv, "{n},{j},,,,,no_convergence");
            }
            Err(e) => return Err(e),
        }
    }
    let monotone_decreasing = roots.windows(2).all(|w| w[1] < w[0]);
    let _ = writeln!(csv, "# monotone_decreasing={monotone_decreasing}");
    Ok(CutoffTable {
        csv,
        monotone_decreasing,
        failures,
    })
}

/// Which entry `cmd_converge` follows.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConvergeTarget {
    Path { i: usize, j: usize },
    Cycle { offset: usize },
}

/// `K_n` against its limit for each `n`, plus a final `inf` row holding the
/// limit itself. `abs_gap` is the exact distance to the limit, evaluated
/// without cancellation.
pub fn converge_csv(target: ConvergeTarget, alpha: f64, ns: &[usize]) -> Result<String> {
    if ns.is_empty() {
        return Err(Error::InvalidArgument("n list is empty".into()));
    }
    let limit = match target {
        ConvergeTarget::Path { i, j } => katz_limit_path(i, j, alpha)?.value,
        ConvergeTarget::Cycle { offset } => katz_limit_cycle(offset, alpha)?.value,
    };
    // Validate every row before producing any output.
    for &n in ns {
        match target {
            ConvergeTarget::Path { i, j } => {
                let g = GraphSpec::new(Family::Path, n)?;
                g.pair(i, j)?;
                Alpha::new(&g, alpha)?;
            }
            ConvergeTarget::Cycle { offset } => {
                let g = GraphSpec::new(Family::Cycle, n)?;
                if 2 * offset > n {
                    return Err(Error::InvalidArgument(format!(
                        "offset {offset} exceeds floor(n/2) for n = {n}"
                    )));
                }
                Alpha::new(&g, alpha)?;
            }
        }
    }

    let mut out = String::from("n,katz_exact,limit_value,abs_gap\n");
    for &n in ns {
        let (exact, gap) = match target {
            ConvergeTarget::Path { i, j } => {
                (katz_path(n, i, j, alpha)?, limit_gap_path(n, i, j, alpha)?)
            }
            ConvergeTarget::Cycle { offset } => (
                katz_cycle(n, 1, 1 + offset, alpha)?,
                limit_gap_cycle(n, offset, alpha)?,
            ),
        };
        let _ = writeln!(
            out,
            "{n},{},{},{}",
            fmt_f64(exact),
            fmt_f64(limit),
            fmt_f64(gap.value().abs())
        );
    }
    let _ = writeln!(
        out,
        "inf,{},{},{}",
        fmt_f64(limit),
        fmt_f64(limit),
        fmt_f64(0.0)
    );
    Ok(out)
}
