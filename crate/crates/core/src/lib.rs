//! Katz similarity, effective resistance and graph distance on path and
//! cycle graphs.
//!
//! The crate evaluates the exact closed forms for both graph families, keeps
//! dense brute-force oracles next to them for cross-checking, and studies
//! when the three metrics rank vertex pairs identically. The central object
//! is the tridiagonal determinant family `d_n(alpha)` in [`dpoly`].

#![forbid(unsafe_code)]
// `!(x > 0.0)` is used on purpose so NaN inputs are rejected too.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

mod dd;
pub mod dpoly;
pub mod error;
pub mod graphs;
pub mod katz;
pub mod linalg;
pub mod ordering;
pub mod output;
pub mod verify;

pub use error::{Error, Result};
pub use graphs::{Alpha, Family, GraphSpec, VertexPair};

/// `1/sqrt(5)`, the lower end of the cut-off bracket.
pub const INV_SQRT5: f64 = 0.447_213_595_499_957_9;
