use thiserror::Error;

use crate::graph::Edge;

#[derive(Debug, Error)]
pub enum Error {
    #[error("graph is disconnected: vertex {v} is unreachable from vertex {u}")]
    Disconnected { u: usize, v: usize },

    #[error("({}, {}) is not an edge of the graph", .0.u, .0.v)]
    NotAnEdge(Edge),

    #[error("invalid edge ({0}, {1}): {2}")]
    InvalidEdge(usize, usize, &'static str),

    #[error("k must be at least 3, got {0}")]
    InvalidK(usize),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("budget of {budget} exhausted after {explored} steps{}", interval_note(.lower, .upper))]
    BudgetExceeded {
        budget: u64,
        explored: u64,
        lower: Option<usize>,
        upper: Option<usize>,
    },

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("bad family spec '{0}'")]
    BadSpec(String),

    #[error("inequality chain violated: {0}")]
    DualityViolation(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

fn interval_note(lower: &Option<usize>, upper: &Option<usize>) -> String {
    match (lower, upper) {
        (Some(l), Some(u)) => format!(" (optimum in [{l}, {u}])"),
        (Some(l), None) => format!(" (optimum >= {l})"),
        (None, Some(u)) => format!(" (optimum <= {u})"),
        (None, None) => String::new(),
    }
}

pub type Result<T> = std::result::Result<T, Error>;
