//! Seeded instance generation: random graphs, clique gadgets, expansion
//! instances for the property suites, and a search for instances with
//! prescribed statistics.

mod gadget;
mod random;
mod search;

pub use gadget::{build_gadget, CliqueRef, GadgetSide, GadgetSpec};
pub use random::{random_expansion_instance, random_graph};
pub use search::{
    instance_search, measure, FoundInstance, InstanceStats, SearchOutcome, TargetKind, TargetStats,
    FIGURE_IDS,
};
