use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::connectivity::edge_connectivity;
use crate::expansion::{contracted_metric, make_partition, Partition};
use crate::{Edge, Error, Graph, Result, Vertex, VertexSet};

fn sample_edges(
    rng: &mut ChaCha8Rng,
    vertices: &[Vertex],
    p: f64,
    out: &mut Vec<(Vertex, Vertex)>,
) {
    for (i, &u) in vertices.iter().enumerate() {
        for &v in &vertices[i + 1..] {
            if rng.gen_bool(p) {
                out.push((u, v));
            }
        }
    }
}

/// `G(n, p)`: each of the `n(n-1)/2` pairs is an edge independently with
/// probability `p`. Deterministic for a fixed seed.
///
/// Panics unless `0 <= p <= 1`.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Graph {
    assert!(
        (0.0..=1.0).contains(&p),
        "edge probability {p} outside [0, 1]"
    );
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    let vertices: Vec<Vertex> = (0..n).collect();
    sample_edges(&mut rng, &vertices, p, &mut edges);
    Graph::new(n, edges).expect("sampled pairs are distinct")
}

/// Random `G` on `n2 + n1` vertices with `V2 = 0..n2` and `k'(G2) >= k`.
///
/// `V1` gets random internal and cross edges. Most seeds then top up every
/// `V1` degree to `k` and add edges until the contracted diameter is at most
/// 2, so that the expansion hypotheses hold often without always holding.
pub fn random_expansion_instance(
    n1: usize,
    n2: usize,
    k: usize,
    seed: u64,
) -> Result<(Graph, Partition)> {
    if n2 <= k {
        return Err(Error::Infeasible(format!(
            "G2 on {n2} vertices cannot be {k}-edge-connected"
        )));
    }
    if n1 == 0 {
        return Err(Error::EmptySide);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = n1 + n2;
    let side2: Vec<Vertex> = (0..n2).collect();
    let side1: Vec<Vertex> = (n2..n).collect();

    let base = rng.gen_range(0.4..0.9);
    let mut g2_edges = Vec::new();
    for attempt in 0.. {
        let p = f64::min(1.0, base + 0.1 * attempt as f64);
        g2_edges.clear();
        sample_edges(&mut rng, &side2, p, &mut g2_edges);
        let g2 = Graph::new(n2, g2_edges.iter().copied())?;
        if n2 < 2 || edge_connectivity(&g2)?.kprime >= k {
            break;
        }
    }

    let mut edges: std::collections::BTreeSet<Edge> =
        g2_edges.iter().map(|&(u, v)| Edge::new(u, v)).collect();
    let internal_p = rng.gen_range(0.2..0.9);
    let cross_p = rng.gen_range(0.02..0.6);
    for (i, &x) in side1.iter().enumerate() {
        for &y in &side1[i + 1..] {
            if rng.gen_bool(internal_p) {
                edges.insert(Edge::new(x, y));
            }
        }
        for &y in &side2 {
            if rng.gen_bool(cross_p) {
                edges.insert(Edge::new(x, y));
            }
        }
    }

    let degree = |edges: &std::collections::BTreeSet<Edge>, x: Vertex| {
        edges.iter().filter(|e| e.u() == x || e.v() == x).count()
    };
    if rng.gen_bool(0.85) {
        for &x in &side1 {
            while degree(&edges, x) < k {
                let pool = if rng.gen_bool(0.5) { &side2 } else { &side1 };
                let candidates: Vec<Vertex> = (0..n)
                    .filter(|&y| y != x && pool.contains(&y) && !edges.contains(&Edge::new(x, y)))
                    .collect();
                let Some(&y) = candidates.choose(&mut rng) else {
                    continue;
                };
                edges.insert(Edge::new(x, y));
            }
        }
    }

    let v2 = VertexSet::from_vertices(n, side2.iter().copied())?;
    if rng.gen_bool(0.7) {
        loop {
            let g = Graph::new(n, edges.iter().map(Edge::endpoints))?;
            let p = make_partition(&g, v2.clone())?;
            let metric = contracted_metric(&g, &p)?;
            if metric.diameter().at_most(2) {
                break;
            }
            let far: Vec<(Vertex, Vertex)> = side1
                .iter()
                .flat_map(|&x| (0..n).map(move |y| (x, y)))
                .filter(|&(x, y)| !metric.get(x, y).at_most(2))
                .collect();
            let &(x, y) = far.choose(&mut rng).expect("diameter above 2");
            // δ(x, y) > 2 means x is not adjacent to y, nor to V2 when y ∈ V2
            let y = if v2.contains(y) {
                *side2.choose(&mut rng).unwrap()
            } else {
                y
            };
            edges.insert(Edge::new(x, y));
        }
    }

    let g = Graph::new(n, edges.iter().map(Edge::endpoints))?;
    let p = make_partition(&g, v2)?;
    Ok((g, p))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn extreme_probabilities() {
        assert_eq!(random_graph(6, 0.0, 1).edge_count(), 0);
        assert_eq!(random_graph(6, 1.0, 1), Graph::complete(6));
    }

    #[test]
    fn seeded_determinism() {
        assert_eq!(random_graph(8, 0.5, 7), random_graph(8, 0.5, 7));
        assert_ne!(random_graph(12, 0.5, 7), random_graph(12, 0.5, 8));
    }

    #[test]
    fn expansion_instance_g2_is_k_connected() {
        let (g, p) = random_expansion_instance(3, 5, 3, 1).unwrap();
        assert_eq!(g.n(), 8);
        assert!(edge_connectivity(p.g2().graph()).unwrap().kprime >= 3);
        assert_eq!(p.v2().to_vec(), vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn minimal_g2_is_complete() {
        for seed in 0..20 {
            let (_, p) = random_expansion_instance(1, 4, 3, seed).unwrap();
            assert_eq!(p.g2().graph(), &Graph::complete(4));
        }
    }

    #[test]
    fn infeasible_sizes() {
        assert!(matches!(
            random_expansion_instance(2, 3, 3, 0),
            Err(Error::Infeasible(_))
        ));
        assert_eq!(
            random_expansion_instance(0, 4, 3, 0).unwrap_err(),
            Error::EmptySide
        );
    }

    #[test]
    fn expansion_instances_are_deterministic() {
        for seed in 0..10 {
            assert_eq!(
                random_expansion_instance(4, 5, 2, seed).unwrap(),
                random_expansion_instance(4, 5, 2, seed).unwrap()
            );
        }
    }
}
