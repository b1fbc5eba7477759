//! Exact, brute-force-checked verification of the connections between
//! covers of ℤ by residue classes and subset sums in fields.
//!
//! Runnable walkthroughs of each capability live in `examples/`:
//!
//! ```bash
//! cargo run --example residue_systems
//! ```

pub mod arith;
pub mod cli;
pub mod error;
pub mod poly;
pub mod residue;
pub mod subsets;
pub mod subsetsum;
pub mod zerosum;

pub use error::{Error, Result, Violation, ViolationCode};
