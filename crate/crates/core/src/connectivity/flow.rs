use std::collections::VecDeque;

use super::ConnectivityResult;
use crate::{Edge, Error, Graph, Result, Vertex, VertexSet};

/// A maximum family of pairwise edge-disjoint `u`-`v` paths.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlowResult {
    pub value: usize,
    /// Each path is a vertex sequence from `u` to `v`.
    pub paths: Vec<Vec<Vertex>>,
}

impl FlowResult {
    /// Checks that every path is a walk in `g` from `u` to `v` and that no
    /// edge is used twice across all paths.
    pub fn is_valid_witness(&self, g: &Graph, u: Vertex, v: Vertex) -> bool {
        let mut used = std::collections::HashSet::new();
        self.paths.len() == self.value
            && self.paths.iter().all(|p| {
                p.first() == Some(&u)
                    && p.last() == Some(&v)
                    && p.windows(2)
                        .all(|w| g.has_edge(w[0], w[1]) && used.insert(Edge::new(w[0], w[1])))
            })
    }
}

/// Unit-capacity residual network for an undirected graph.
///
/// Edge `i` owns arcs `2i` (u to v) and `2i + 1` (v to u), each with
/// capacity 1. Pushing along one arc raises the residual of its twin, so
/// the net flow `1 - residual[2i]` on each edge stays in `{-1, 0, 1}`.
pub(crate) struct UnitFlowNetwork<'g> {
    graph: &'g Graph,
    head: Vec<Vertex>,
    residual: Vec<u8>,
    out_arcs: Vec<Vec<usize>>,
}

impl<'g> UnitFlowNetwork<'g> {
    pub(crate) fn new(graph: &'g Graph) -> Self {
        let m = graph.edge_count();
        let mut head = Vec::with_capacity(2 * m);
        let mut out_arcs = vec![Vec::new(); graph.n()];
        for (i, e) in graph.edges().iter().enumerate() {
            head.push(e.v());
            head.push(e.u());
            out_arcs[e.u()].push(2 * i);
            out_arcs[e.v()].push(2 * i + 1);
        }
        UnitFlowNetwork {
            graph,
            head,
            residual: vec![1; 2 * m],
            out_arcs,
        }
    }

    fn reset(&mut self) {
        self.residual.iter_mut().for_each(|r| *r = 1);
    }

    /// Runs shortest augmenting paths from `s` to `t` until no path remains
    /// or the flow reaches `limit`.
    pub(crate) fn max_flow(&mut self, s: Vertex, t: Vertex, limit: usize) -> usize {
        self.reset();
        let n = self.graph.n();
        let mut value = 0;
        let mut parent_arc = vec![usize::MAX; n];
        while value < limit {
            parent_arc.iter_mut().for_each(|p| *p = usize::MAX);
            let mut seen = vec![false; n];
            seen[s] = true;
            let mut queue = VecDeque::from([s]);
            'bfs: while let Some(x) = queue.pop_front() {
                for &a in &self.out_arcs[x] {
                    let y = self.head[a];
                    if self.residual[a] > 0 && !seen[y] {
                        seen[y] = true;
                        parent_arc[y] = a;
                        if y == t {
                            break 'bfs;
                        }
                        queue.push_back(y);
                    }
                }
            }
            if !seen[t] {
                break;
            }
            let mut y = t;
            while y != s {
                let a = parent_arc[y];
                self.residual[a] -= 1;
                self.residual[a ^ 1] += 1;
                y = self.head[a ^ 1];
            }
            value += 1;
        }
        value
    }

    /// Vertices reachable from `s` in the residual network.
    pub(crate) fn source_side(&self, s: Vertex) -> VertexSet {
        let mut side = VertexSet::empty(self.graph.n());
        side.insert(s);
        let mut stack = vec![s];
        while let Some(x) = stack.pop() {
            for &a in &self.out_arcs[x] {
                let y = self.head[a];
                if self.residual[a] > 0 && side.insert(y) {
                    stack.push(y);
                }
            }
        }
        side
    }

    /// Splits the current flow into `value` edge-disjoint paths. Cycles met
    /// while walking are cut out of the path and dropped.
    fn decompose(&self, s: Vertex, t: Vertex, value: usize) -> Vec<Vec<Vertex>> {
        let n = self.graph.n();
        let mut flow_out: Vec<Vec<Vertex>> = vec![Vec::new(); n];
        for (i, e) in self.graph.edges().iter().enumerate() {
            match self.residual[2 * i] {
                0 => flow_out[e.u()].push(e.v()),
                2 => flow_out[e.v()].push(e.u()),
                _ => {}
            }
        }
        let mut position = vec![usize::MAX; n];
        let mut paths = Vec::with_capacity(value);
        for _ in 0..value {
            let mut path = vec![s];
            position[s] = 0;
            let mut x = s;
            while x != t {
                let y = flow_out[x].pop().expect("flow conservation");
                if position[y] != usize::MAX {
                    for &z in &path[position[y] + 1..] {
                        position[z] = usize::MAX;
                    }
                    path.truncate(position[y] + 1);
                } else {
                    position[y] = path.len();
                    path.push(y);
                }
                x = y;
            }
            for &z in &path {
                position[z] = usize::MAX;
            }
            paths.push(path);
        }
        paths
    }
}

/// Maximum number of pairwise edge-disjoint paths between `u` and `v`,
/// with the paths themselves.
pub fn local_edge_connectivity(g: &Graph, u: Vertex, v: Vertex) -> Result<FlowResult> {
    g.neighbors(u)?;
    g.neighbors(v)?;
    if u == v {
        return Err(Error::SameVertex(u));
    }
    let mut net = UnitFlowNetwork::new(g);
    let value = net.max_flow(u, v, usize::MAX);
    let paths = net.decompose(u, v, value);
    Ok(FlowResult { value, paths })
}

/// `k'(G)` as the minimum over `v != 0` of the local edge connectivity
/// between vertex 0 and `v`. The witness is the residual source side of
/// the minimizing flow.
pub fn edge_connectivity(g: &Graph) -> Result<ConnectivityResult> {
    if g.n() < 2 {
        return Err(Error::TooSmall(g.n()));
    }
    let mut net = UnitFlowNetwork::new(g);
    let mut best: Option<(usize, VertexSet)> = None;
    for t in 1..g.n() {
        let limit = best.as_ref().map_or(usize::MAX, |(b, _)| *b);
        let value = net.max_flow(0, t, limit);
        if value < limit {
            best = Some((value, net.source_side(0)));
            if value == 0 {
                break;
            }
        }
    }
    let (kprime, side) = best.expect("n >= 2 runs at least one flow");
    let witness = g.edge_cut(&side)?;
    debug_assert_eq!(witness.size(), kprime);
    Ok(ConnectivityResult { kprime, witness })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_graph_pairs() {
        let k4 = Graph::complete(4);
        let r = local_edge_connectivity(&k4, 0, 1).unwrap();
        assert_eq!(r.value, 3);
        assert!(r.is_valid_witness(&k4, 0, 1));
    }

    #[test]
    fn bowtie_shares_a_vertex_not_an_edge() {
        // triangles 0-1-2 and 2-3-4 sharing vertex 2
        let g = Graph::new(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        let r = local_edge_connectivity(&g, 0, 4).unwrap();
        assert_eq!(r.value, 2);
        assert!(r.is_valid_witness(&g, 0, 4));
    }

    #[test]
    fn disconnected_pair() {
        let g = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        let r = local_edge_connectivity(&g, 0, 3).unwrap();
        assert_eq!(
            r,
            FlowResult {
                value: 0,
                paths: vec![]
            }
        );
        assert_eq!(local_edge_connectivity(&g, 1, 1), Err(Error::SameVertex(1)));
        assert!(local_edge_connectivity(&g, 0, 9).is_err());
    }

    #[test]
    fn bridge_is_the_witness() {
        let mut edges: Vec<(usize, usize)> = Vec::new();
        for base in [0, 4] {
            for a in 0..4 {
                for b in a + 1..4 {
                    edges.push((base + a, base + b));
                }
            }
        }
        edges.push((3, 4));
        let g = Graph::new(8, edges).unwrap();
        let r = edge_connectivity(&g).unwrap();
        assert_eq!(r.kprime, 1);
        assert_eq!(r.witness.crossing_edges(), &[Edge::new(3, 4)]);
        assert!(r.witness.is_valid_in(&g));
    }

    #[test]
    fn families() {
        for n in 2..=8 {
            assert_eq!(
                edge_connectivity(&Graph::complete(n)).unwrap().kprime,
                n - 1
            );
        }
        for n in 3..=10 {
            assert_eq!(edge_connectivity(&Graph::cycle(n)).unwrap().kprime, 2);
        }
        assert_eq!(edge_connectivity(&Graph::empty(3)).unwrap().kprime, 0);
        assert_eq!(
            edge_connectivity(&Graph::empty(1)).unwrap_err(),
            Error::TooSmall(1)
        );
    }

    #[test]
    fn flow_that_must_reroute() {
        // augmenting along 0-1-2-3 first forces a later path to cancel 1-2
        let g = Graph::new(6, [(0, 1), (1, 2), (2, 3), (0, 4), (4, 2), (1, 5), (5, 3)]).unwrap();
        let r = local_edge_connectivity(&g, 0, 3).unwrap();
        assert_eq!(r.value, 2);
        assert!(r.is_valid_witness(&g, 0, 3));
    }
}
