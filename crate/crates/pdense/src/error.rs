use std::path::PathBuf;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("edge list contains no edges")]
    NoEdges,

    #[error("node index {node} out of range for graph with {n} nodes")]
    NodeOutOfRange { node: u32, n: u32 },

    #[error("unknown node label `{label}` at line {line}")]
    UnknownLabel { line: usize, label: String },

    #[error("node set is empty")]
    EmptySet,

    #[error("node {node} is not in the given set")]
    NodeNotInSet { node: u32 },

    #[error("graph has no nodes")]
    EmptyGraph,

    #[error("invalid p = {p}: {reason}")]
    InvalidP { p: String, reason: String },

    #[error("invalid value: {0}")]
    InvalidValue(String),

    #[error("{what} undefined: {reason}")]
    Undefined { what: &'static str, reason: String },

    #[error("invalid node set: {0}")]
    InvalidSet(String),

    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),

    #[error("invalid tolerance {0}: must be positive and finite")]
    InvalidTolerance(f64),

    #[error("brute force limited to {cap} nodes, graph has {n}")]
    BruteForceCap { cap: u32, n: u32 },

    #[error("min-norm solver did not converge within {iterations} iterations (gap {gap:.3e})")]
    NonConvergence { iterations: usize, gap: f64 },

    #[error("no peel prefix has a defined objective for the requested p")]
    AllPrefixesUndefined,

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("io error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    /// CLI exit code: 2 for input/domain problems, 3 for numeric failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::NonConvergence { .. } => 3,
            _ => 2,
        }
    }
}
