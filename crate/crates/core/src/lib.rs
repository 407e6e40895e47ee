//! Fatgraph Magnus expansions and groupoid lifts of the Johnson homomorphisms.

pub mod algebra;
pub mod cli;
pub mod cocycle;
pub mod error;
pub mod fatgraph;
pub mod johnson;
pub mod loops;
pub mod magnus;
pub mod twist;

pub use error::{Error, Result};
