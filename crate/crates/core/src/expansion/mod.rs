//! Expansion of a graph `G2` by an adjoined graph `G1`.
//!
//! Given a split of `V(G)` into `V1` and `V2`, this module computes the
//! contracted distance (where `V2` behaves as a single point), the boundary
//! and interior sets of `V1`, the functional `Φ`, and uses them to check the
//! small-cut conclusions for cuts with `V2 ⊆ S` and to certify that `G` is
//! `k`-edge-connected.

mod certificate;
mod metric;
mod profile;
mod theorem;

pub use certificate::{certify, AlternativeStatus, Certificate, HypothesisStatus, Verdict};
pub use metric::{contracted_distance, contracted_metric, ContractedMetric};
pub use profile::{boundary, expansion_profile, interior, phi, ExpansionProfile};
pub use theorem::{verify_theorem, Conclusions, SizeChain, TheoremChecker, TheoremReport};

use crate::{Error, Graph, InducedSubgraph, Result, VertexSet};

/// A split of `V(G)` into nonempty `V1` and `V2` with their induced subgraphs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    v1: VertexSet,
    v2: VertexSet,
    g1: InducedSubgraph,
    g2: InducedSubgraph,
}

impl Partition {
    pub fn v1(&self) -> &VertexSet {
        &self.v1
    }

    pub fn v2(&self) -> &VertexSet {
        &self.v2
    }

    pub fn g1(&self) -> &InducedSubgraph {
        &self.g1
    }

    pub fn g2(&self) -> &InducedSubgraph {
        &self.g2
    }

    pub fn n(&self) -> usize {
        self.v1.universe()
    }
}

/// Builds the partition with `V2 = v2` and `V1` its complement.
pub fn make_partition(g: &Graph, v2: VertexSet) -> Result<Partition> {
    v2.check_universe(g.n())?;
    let v1 = v2.complement();
    if v1.is_empty() || v2.is_empty() {
        return Err(Error::EmptySide);
    }
    Ok(Partition {
        g1: g.induced_subgraph(&v1)?,
        g2: g.induced_subgraph(&v2)?,
        v1,
        v2,
    })
}

fn check_partition(g: &Graph, p: &Partition) -> Result<()> {
    p.v1.check_universe(g.n())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_examples() {
        let k4 = Graph::complete(4);
        let p = make_partition(&k4, VertexSet::from_vertices(4, [0, 1]).unwrap()).unwrap();
        assert_eq!(p.g1().graph(), &Graph::complete(2));
        assert_eq!(p.g2().graph(), &Graph::complete(2));
        assert_eq!(p.g1().id_map(), &[2, 3]);

        let p3 = Graph::path(3);
        let p = make_partition(&p3, VertexSet::from_vertices(3, [1]).unwrap()).unwrap();
        assert_eq!(p.g1().graph(), &Graph::empty(2));

        assert_eq!(
            make_partition(&p3, VertexSet::full(3)),
            Err(Error::EmptySide)
        );
        assert_eq!(
            make_partition(&p3, VertexSet::empty(3)),
            Err(Error::EmptySide)
        );
    }
}
