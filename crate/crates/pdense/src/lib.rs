//! p-mean densest subgraph toolkit.
//!
//! Finds vertex sets that maximize the generalized (power) mean of induced
//! degrees. The crate provides density metrics over the whole p range
//! (including the min-degree and max-degree limits), two greedy peeling
//! engines, an exact solver built on submodular minimization, generators for
//! structured worst-case graph families, and a CLI that reports results as
//! JSON or CSV.

#![forbid(unsafe_code)]

pub mod cli;
pub mod error;
pub mod exact;
pub mod families;
pub mod graph;
pub mod metrics;
mod minnorm;
pub mod peel;

pub use error::{Error, Result};
pub use graph::{parse_edge_list, parse_node_set, Graph, NodeSet, ParseOutcome};
pub use metrics::PValue;
