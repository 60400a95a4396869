use super::{check_partition, Partition};
use crate::{Graph, Result, Vertex, VertexSet};

/// Boundary and interior sets of `V1`, `Φ` and the relevant minimum degrees.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpansionProfile {
    /// `|[x, V2]|` indexed by vertex. Entries for members of `V2` count
    /// their neighbours inside `V2`.
    pub cross_degree: Vec<usize>,
    /// `∂¹V1`
    pub boundary1: VertexSet,
    /// `∂²V1`
    pub boundary2: VertexSet,
    /// `i²V1`
    pub interior2: VertexSet,
    pub phi: usize,
    /// Minimum of `deg_G` over `V1`.
    pub k_min_v1: usize,
    /// Minimum of `deg_G` over all of `V(G)`.
    pub k_min_all: usize,
}

fn cross_degrees(g: &Graph, p: &Partition) -> Vec<usize> {
    (0..g.n()).map(|x| g.edges_into(x, p.v2())).collect()
}

fn boundary_from(cross: &[usize], p: &Partition, j: usize) -> VertexSet {
    let mut set = VertexSet::empty(p.n());
    for x in p.v1().iter().filter(|&x| cross[x] >= j) {
        set.insert(x);
    }
    set
}

/// `∂ʲV1 = {x ∈ V1 : |[x, V2]| >= j}`.
pub fn boundary(g: &Graph, p: &Partition, j: usize) -> Result<VertexSet> {
    check_partition(g, p)?;
    Ok(boundary_from(&cross_degrees(g, p), p, j))
}

/// `iʲV1 = V1 ∖ ∂ʲV1`.
pub fn interior(g: &Graph, p: &Partition, j: usize) -> Result<VertexSet> {
    Ok(p.v1().difference(&boundary(g, p, j)?))
}

fn phi_from(g: &Graph, p: &Partition, cross: &[usize], interior2: &VertexSet) -> usize {
    p.v1()
        .iter()
        .map(|x: Vertex| g.edges_into(x, interior2).max(1).min(cross[x]))
        .sum()
}

/// `Φ = Σ_{x ∈ V1} min(max(1, |[x, i²V1]|), |[x, V2]|)`.
pub fn phi(g: &Graph, p: &Partition) -> Result<usize> {
    check_partition(g, p)?;
    let cross = cross_degrees(g, p);
    let interior2 = p.v1().difference(&boundary_from(&cross, p, 2));
    Ok(phi_from(g, p, &cross, &interior2))
}

pub fn expansion_profile(g: &Graph, p: &Partition) -> Result<ExpansionProfile> {
    check_partition(g, p)?;
    let cross = cross_degrees(g, p);
    let boundary1 = boundary_from(&cross, p, 1);
    let boundary2 = boundary_from(&cross, p, 2);
    let interior2 = p.v1().difference(&boundary2);
    let phi = phi_from(g, p, &cross, &interior2);
    Ok(ExpansionProfile {
        boundary1,
        boundary2,
        interior2,
        phi,
        k_min_v1: g.min_degree_over(p.v1()).expect("V1 nonempty"),
        k_min_all: g.min_degree().expect("graph nonempty"),
        cross_degree: cross,
    })
}
