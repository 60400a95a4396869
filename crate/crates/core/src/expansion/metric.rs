use super::{check_partition, Partition};
use crate::{Dist, Graph, Result, Vertex, VertexSet};

/// The full contracted-distance table of a partitioned graph.
///
/// For `x, y ∈ V1`, `δ(x, y) = min(d_G1(x, y), d_G(x, V2) + d_G(y, V2))`;
/// when `y ∈ V2`, `δ(x, y) = d_G(x, V2)`, so two vertices of `V2` are at
/// contracted distance 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContractedMetric {
    n: usize,
    delta: Vec<Dist>,
    d_to_v2: Vec<Dist>,
    diameter: Dist,
}

impl ContractedMetric {
    pub fn get(&self, x: Vertex, y: Vertex) -> Dist {
        self.delta[x * self.n + y]
    }

    /// `δ(x, A) = min over a in A of δ(x, a)`; `Infinite` for empty `A`.
    pub fn to_set(&self, x: Vertex, a: &VertexSet) -> Dist {
        a.iter()
            .map(|y| self.get(x, y))
            .min()
            .unwrap_or(Dist::Infinite)
    }

    pub fn distance_to_v2(&self, x: Vertex) -> Dist {
        self.d_to_v2[x]
    }

    /// Maximum of `δ` over all pairs (the contracted diameter).
    pub fn diameter(&self) -> Dist {
        self.diameter
    }

    pub fn n(&self) -> usize {
        self.n
    }
}

/// Combines `d_G1(x, y)` with the two distances to `V2`.
fn combine(d_g1: Dist, dx: Dist, dy: Dist) -> Dist {
    d_g1.min(dx + dy)
}

pub fn contracted_metric(g: &Graph, p: &Partition) -> Result<ContractedMetric> {
    check_partition(g, p)?;
    let n = g.n();
    let d_to_v2 = g.bfs_from_set(p.v2())?;
    let mut delta = vec![Dist::ZERO; n * n];
    let g1 = p.g1();
    let in_v1: Vec<Vertex> = p.v1().to_vec();
    for x in 0..n {
        if p.v2().contains(x) {
            for y in 0..n {
                delta[x * n + y] = if p.v2().contains(y) {
                    Dist::ZERO
                } else {
                    d_to_v2[y]
                };
            }
        }
    }
    for (lx, &x) in in_v1.iter().enumerate() {
        let local = g1.graph().bfs(lx)?;
        for y in 0..n {
            delta[x * n + y] = match g1.from_parent(y) {
                Some(ly) => combine(local[ly], d_to_v2[x], d_to_v2[y]),
                None => d_to_v2[x],
            };
        }
    }
    let diameter = delta.iter().copied().max().unwrap_or(Dist::ZERO);
    Ok(ContractedMetric {
        n,
        delta,
        d_to_v2,
        diameter,
    })
}

/// A single `δ(x, y)`, computed without building the full table.
pub fn contracted_distance(g: &Graph, p: &Partition, x: Vertex, y: Vertex) -> Result<Dist> {
    check_partition(g, p)?;
    g.neighbors(x)?;
    g.neighbors(y)?;
    let d_to_v2 = g.bfs_from_set(p.v2())?;
    Ok(match (p.g1().from_parent(x), p.g1().from_parent(y)) {
        (Some(lx), Some(ly)) => {
            let d_g1 = p.g1().graph().distance(lx, ly)?;
            combine(d_g1, d_to_v2[x], d_to_v2[y])
        }
        (Some(_), None) => d_to_v2[x],
        (None, _) => d_to_v2[y],
    })
}
