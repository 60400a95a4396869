//! Edge connectivity of simple undirected graphs, and certification that
//! adjoining a graph `G1` to a `k`-edge-connected graph `G2` keeps the result
//! `k`-edge-connected.
//!
//! Vertices are dense ids `0..n`. Everything here is a pure function over
//! immutable values.

pub mod connectivity;
mod dist;
mod error;
pub mod expansion;
pub mod format;
pub mod generators;
mod graph;
mod vertex_set;

pub use dist::Dist;
pub use error::{Error, Result};
pub use graph::{Cut, Edge, Graph, InducedSubgraph};
pub use vertex_set::VertexSet;

/// A vertex id in `0..n`.
pub type Vertex = usize;
