//! Exact enumerative combinatorics for the numerator polynomials of the
//! expected one-dimensional earth mover's distance.
//!
//! The crate is organised bottom-up:
//!
//! - [`arith`]: big-integer and rational primitives (binomials, factorials).
//! - [`partitions`]: Young diagrams inside rectangles and symmetric-difference sums.
//! - [`poly`]: integer polynomials, the `N_pq` / `W_pq` families and shape checks
//!   (palindromic, unimodal, real-rooted via Sturm chains).
//! - [`emd`]: weak compositions, the 1-D EMD, and its expected value.
//! - [`wiener`]: the Hasse diagram of `Par(a×b)` and its Wiener index.
//!
//! Everything is exact. Brute-force routines take explicit caps and refuse
//! work beyond them instead of running unbounded.

pub mod arith;
pub mod emd;
mod error;
pub mod partitions;
pub mod poly;
pub mod wiener;

pub use error::{Error, Result};

/// Default limit on the number of ordered pairs a brute-force sum may visit.
pub const DEFAULT_MAX_PAIRS: u64 = 100_000_000;
/// Default limit on the vertex count of a Hasse diagram.
pub const DEFAULT_MAX_VERTICES: u64 = 100_000;
/// Default limit on `n` for the power-set symmetric-difference sum.
pub const DEFAULT_MAX_SUBSET_N: u32 = 12;
