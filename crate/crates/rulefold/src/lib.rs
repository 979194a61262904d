//! Accelerated simulation of one-dimensional two-color cellular automata.
//!
//! A local rule of radius `r` can be composed with itself `k` times to give a
//! rule of radius `k*r` that advances `k` generations per application. The
//! composite is materialized once as a lookup table of `2^(2kr+1)` bits at a
//! build cost of `k^2 * 2^(2kr)` window evaluations; afterwards every row
//! update is a linear walk over the rule's colored De Bruijn graph. Trading
//! table memory for fold count removes a log factor from the quadratic cost
//! of reaching generation `n`.
//!
//! Module map:
//!
//! - [`rule`]: rule tables, Wolfram numbering, algebraic reference forms
//! - [`compose`]: k-fold self-composition and its cost model
//! - [`debruijn`]: colored De Bruijn graphs, DOT export, walk stepping
//! - [`engine`]: configurations and the interchangeable row-update kernels
//! - [`planner`]: optimal fold count via the Lambert W break-even solution
//! - [`bench`]: timing campaigns, quadratic scaling fits, crossover points
//! - [`verify`]: composition-equivalence checking against the naive update

pub mod bench;
pub mod bitrow;
pub mod compose;
pub mod debruijn;
pub mod engine;
mod error;
pub mod planner;
pub mod rule;
pub mod verify;

pub use bitrow::BitRow;
pub use error::Error;

pub type Result<T> = std::result::Result<T, Error>;
