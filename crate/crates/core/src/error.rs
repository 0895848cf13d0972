use thiserror::Error;

/// Largest order supported anywhere in the crate (short-form graph6 limit).
pub const MAX_VERTICES: usize = 62;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex index {index} out of range for a graph of order {n}")]
    VertexOutOfRange { index: usize, n: usize },

    #[error("self-loop at vertex v_{}", .0 + 1)]
    SelfLoop(usize),

    #[error("order {0} exceeds the supported maximum of {MAX_VERTICES}")]
    TooLarge(usize),

    #[error("graph must have at least one vertex")]
    Empty,

    #[error("{family} requires parameter >= {min}, got {got}")]
    BelowFamilyMinimum {
        family: &'static str,
        min: usize,
        got: usize,
    },

    #[error("invalid graph6 string: {0}")]
    Graph6(String),

    #[error("graph is disconnected: v_{} cannot reach v_{}", .u + 1, .v + 1)]
    Disconnected { u: usize, v: usize },

    #[error("invariants need at least two vertices")]
    TrivialGraph,

    #[error("vertices v_{} and v_{} are not adjacent", .0 + 1, .1 + 1)]
    NotAdjacent(usize, usize),

    #[error("hitting-set instance is infeasible: set #{index} ({label}) is empty")]
    Infeasible { index: usize, label: String },

    #[error("set #{index} is not contained in the universe of size {universe}")]
    OutsideUniverse { index: usize, universe: usize },

    #[error("graph source is empty")]
    EmptyStream,

    #[error("builtin enumeration supports 2 <= n <= 7, got {0}")]
    EnumerationRange(usize),

    #[error("stream line {line}: {message}")]
    Stream { line: usize, message: String },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
