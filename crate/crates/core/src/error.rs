use thiserror::Error;

use crate::graph::Edge;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("self-loop at vertex v{0}")]
    SelfLoop(usize),

    #[error("vertex v{vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("edge {0} is not an edge of the graph")]
    MissingEdge(Edge),

    #[error("invalid parameter {name}={value}: {reason}")]
    InvalidParameter {
        name: &'static str,
        value: i64,
        reason: String,
    },

    #[error("invalid bipartition: {0}")]
    InvalidBipartition(String),

    #[error("invalid cycle: {0}")]
    InvalidCycle(String),

    #[error("DIMACS line {line}: {message}")]
    Dimacs { line: usize, message: String },

    #[error("instance has {n} vertices, above the solver cap of {cap}")]
    OverCap { n: usize, cap: usize },

    #[error("search budget of {budget} nodes exhausted (best cut so far {best_cut})")]
    BudgetExhausted { budget: u64, best_cut: usize },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(name: &'static str, value: i64, reason: impl Into<String>) -> Error {
    Error::InvalidParameter {
        name,
        value,
        reason: reason.into(),
    }
}
