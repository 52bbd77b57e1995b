use thiserror::Error;

use crate::family::Family;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("order {n} is outside the domain of {family} (requires n >= {min})")]
    InvalidOrder {
        family: Family,
        n: usize,
        min: usize,
    },

    #[error("graph must have at least one vertex")]
    EmptyGraph,

    #[error("vertex {vertex} is out of range for a graph on {num_vertices} vertices")]
    VertexOutOfRange { vertex: String, num_vertices: usize },

    #[error("invalid vertex spec `{0}`")]
    InvalidVertexSpec(String),

    #[error("invalid edge {{{u}, {v}}}: {reason}")]
    InvalidEdge {
        u: usize,
        v: usize,
        reason: &'static str,
    },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("count overflow while computing {0}")]
    Overflow(&'static str),

    #[error("oracle budget exceeded: no dominating set with at most {cap} vertices")]
    BudgetExceeded { cap: usize },

    #[error("unknown predicate `{0}`")]
    UnknownPredicate(String),

    #[error("unknown engine `{0}`")]
    UnknownEngine(String),

    #[error("engine `{engine}` does not support {family} with n = {n}")]
    Unsupported {
        engine: &'static str,
        family: Family,
        n: usize,
    },

    #[error("graph has no two-row strip structure")]
    NotStrip,
}

impl Error {
    pub(crate) fn out_of_range(vertex: impl ToString, num_vertices: usize) -> Self {
        Error::VertexOutOfRange {
            vertex: vertex.to_string(),
            num_vertices,
        }
    }
}
