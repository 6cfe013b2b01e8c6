use thiserror::Error;

use crate::graph::MAX_VERTICES;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex count {0} is outside the supported range 1..={MAX_VERTICES}")]
    Order(usize),

    #[error("{family}: parameter {value} is out of range ({expected})")]
    Parameter {
        family: &'static str,
        value: usize,
        expected: &'static str,
    },

    #[error("vertex {vertex} does not exist in a graph of order {order}")]
    Vertex { vertex: usize, order: usize },

    #[error("a vertex selection must not be empty")]
    EmptySelection,

    #[error("self-loop at vertex {0}")]
    Loop(usize),

    #[error("malformed graph6 string: {0}")]
    Graph6(String),

    #[error("{0}")]
    Precondition(String),

    #[error("exhaustive scope of {requested} vertices exceeds the limit of {limit}")]
    Scope { requested: usize, limit: usize },

    #[error("internal inconsistency: {0}")]
    Inconsistent(String),

    #[error("malformed polynomial text: {0}")]
    PolyParse(String),

    #[error("fixture catalog: {0}")]
    Fixture(String),
}
