use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("vertex pair ({i}, {j}) out of range for a graph on {n} vertices")]
    VertexOutOfRange { i: usize, j: usize, n: usize },

    #[error("alpha = {alpha} is outside the admissible interval (0, {bound})")]
    InadmissibleAlpha { alpha: f64, bound: f64 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("matrix is singular at pivot column {0}")]
    Singular(usize),

    #[error("matrix of order {n} exceeds the dense oracle limit {max}")]
    TooLarge { n: usize, max: usize },

    #[error("Katz series did not converge within {0} terms")]
    SeriesDidNotConverge(usize),

    #[error("no sign change on [{lo}, {hi}] for n = {n}, j = {j} (p({lo}) = {f_lo:e}, p({hi}) = {f_hi:e})")]
    BracketFailure {
        n: usize,
        j: usize,
        lo: f64,
        hi: f64,
        f_lo: f64,
        f_hi: f64,
    },

    #[error("bisection did not converge within {0} iterations")]
    NoConvergence(usize),
}
