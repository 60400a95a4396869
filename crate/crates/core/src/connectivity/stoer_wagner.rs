use std::cmp::Reverse;
use std::collections::{BTreeMap, BinaryHeap};

use crate::{Cut, Error, Graph, Result, Vertex, VertexSet};

/// Global minimum cut by repeated maximum-adjacency ordering and merging of
/// the last two vertices (Stoer-Wagner). Deterministic: heap ties are broken
/// by the smaller vertex id.
pub fn global_min_cut(g: &Graph) -> Result<Cut> {
    let n = g.n();
    if n < 2 {
        return Err(Error::TooSmall(n));
    }
    let mut weight: Vec<BTreeMap<Vertex, u64>> = vec![BTreeMap::new(); n];
    for e in g.edges() {
        weight[e.u()].insert(e.v(), 1);
        weight[e.v()].insert(e.u(), 1);
    }
    let mut members: Vec<Vec<Vertex>> = (0..n).map(|v| vec![v]).collect();
    let mut active: Vec<Vertex> = (0..n).collect();
    let mut best: Option<(u64, Vec<Vertex>)> = None;

    while active.len() > 1 {
        let mut key = vec![0u64; n];
        let mut added = vec![false; n];
        let mut heap: BinaryHeap<(u64, Reverse<Vertex>)> =
            active.iter().map(|&v| (0, Reverse(v))).collect();
        let mut order = Vec::with_capacity(active.len());
        while let Some((k, Reverse(x))) = heap.pop() {
            if added[x] || k != key[x] {
                continue;
            }
            added[x] = true;
            order.push(x);
            for (&y, &w) in &weight[x] {
                if !added[y] {
                    key[y] += w;
                    heap.push((key[y], Reverse(y)));
                }
            }
        }
        let last = order[order.len() - 1];
        let prev = order[order.len() - 2];
        if best.as_ref().is_none_or(|(b, _)| key[last] < *b) {
            best = Some((key[last], members[last].clone()));
        }

        let moved = std::mem::take(&mut members[last]);
        members[prev].extend(moved);
        let last_edges = std::mem::take(&mut weight[last]);
        for (y, w) in last_edges {
            weight[y].remove(&last);
            if y != prev {
                *weight[prev].entry(y).or_insert(0) += w;
                *weight[y].entry(prev).or_insert(0) += w;
            }
        }
        active.retain(|&v| v != last);
    }

    let (_, side) = best.expect("at least one phase");
    g.edge_cut(&VertexSet::from_vertices(n, side)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_values() {
        let k5 = global_min_cut(&Graph::complete(5)).unwrap();
        assert_eq!(k5.size(), 4);
        assert_eq!(global_min_cut(&Graph::path(4)).unwrap().size(), 1);
        assert_eq!(global_min_cut(&Graph::cycle(7)).unwrap().size(), 2);
        assert_eq!(global_min_cut(&Graph::empty(3)).unwrap().size(), 0);
        assert_eq!(global_min_cut(&Graph::empty(1)), Err(Error::TooSmall(1)));
    }

    #[test]
    fn witness_revalidates() {
        let g = Graph::new(
            6,
            [
                (0, 1),
                (1, 2),
                (2, 0),
                (3, 4),
                (4, 5),
                (5, 3),
                (2, 3),
                (0, 5),
            ],
        )
        .unwrap();
        let c = global_min_cut(&g).unwrap();
        assert_eq!(c.size(), 2);
        assert!(c.is_valid_in(&g));
    }
}
