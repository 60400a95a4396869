use thiserror::Error;

use crate::Vertex;

/// Errors produced by graph construction, analysis and generation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("loop edge at vertex {0}")]
    LoopEdge(Vertex),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(Vertex, Vertex),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("vertex set is over a universe of {found} vertices, expected {expected}")]
    UniverseMismatch { expected: usize, found: usize },
    #[error("vertex set is empty")]
    EmptySet,
    #[error("both sides of a cut or partition must be nonempty")]
    EmptySide,
    #[error("source and target are the same vertex {0}")]
    SameVertex(Vertex),
    #[error("graph has {0} vertices, at least 2 are required")]
    TooSmall(usize),
    #[error("graph has {n} vertices, enumeration cap is {cap}")]
    TooLarge { n: usize, cap: usize },
    #[error("V2 is not contained in S")]
    V2NotInS,
    #[error("target connectivity must be at least 1")]
    InvalidK,
    #[error("infeasible request: {0}")]
    Infeasible(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
