//! Exact edge connectivity.
//!
//! Three independent routes are provided and cross-checked in tests:
//! unit-capacity max flow from a fixed source ([`edge_connectivity`]),
//! maximum-adjacency-ordering global min cut ([`global_min_cut`]) and
//! exhaustive cut enumeration ([`brute_force_edge_connectivity`]).

mod brute;
mod flow;
mod stoer_wagner;

pub use brute::{brute_force_edge_connectivity, enumerate_cuts, CutIter, DEFAULT_ENUM_CAP};
pub use flow::{edge_connectivity, local_edge_connectivity, FlowResult};
pub use stoer_wagner::global_min_cut;

use crate::Cut;

/// `k'(G)` together with a cut achieving it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConnectivityResult {
    pub kprime: usize,
    pub witness: Cut,
}
