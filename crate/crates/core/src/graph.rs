//! Simple undirected graphs and the primitives the rest of the crate is built
//! on: degrees, neighbourhoods, edge brackets `[A, B]`, induced subgraphs,
//! breadth-first distances and edge cuts.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use crate::{Dist, Error, Result, Vertex, VertexSet};

/// An undirected edge, stored with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    u: Vertex,
    v: Vertex,
}

impl Edge {
    /// Normalizes the endpoint order. Does not reject loops; [`Graph::new`] does.
    pub fn new(a: Vertex, b: Vertex) -> Self {
        Edge {
            u: a.min(b),
            v: a.max(b),
        }
    }

    pub fn u(&self) -> Vertex {
        self.u
    }

    pub fn v(&self) -> Vertex {
        self.v
    }

    pub fn endpoints(&self) -> (Vertex, Vertex) {
        (self.u, self.v)
    }

    pub fn crosses(&self, side: &VertexSet) -> bool {
        side.contains(self.u) != side.contains(self.v)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

/// A simple undirected graph on the vertices `0..n`.
///
/// Immutable once built; every constructor validates that there are no
/// loops, no repeated edges and no endpoints outside `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    adj: Vec<Vec<Vertex>>,
}

impl Graph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (Vertex, Vertex)>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            for x in [a, b] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if a == b {
                return Err(Error::LoopEdge(a));
            }
            if !set.insert(Edge::new(a, b)) {
                return Err(Error::DuplicateEdge(a.min(b), a.max(b)));
            }
        }
        Ok(Self::from_edge_set(n, set))
    }

    fn from_edge_set(n: usize, set: BTreeSet<Edge>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for e in &set {
            adj[e.u].push(e.v);
            adj[e.v].push(e.u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph {
            n,
            edges: set.into_iter().collect(),
            adj,
        }
    }

    pub fn empty(n: usize) -> Self {
        Self::from_edge_set(n, BTreeSet::new())
    }

    /// The complete graph `K_n`.
    pub fn complete(n: usize) -> Self {
        let set = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| Edge::new(u, v)))
            .collect();
        Self::from_edge_set(n, set)
    }

    /// The cycle `C_n`; requires `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a simple cycle needs at least 3 vertices");
        let set = (0..n).map(|i| Edge::new(i, (i + 1) % n)).collect();
        Self::from_edge_set(n, set)
    }

    /// The path `P_n` on `n` vertices.
    pub fn path(n: usize) -> Self {
        let set = (1..n).map(|i| Edge::new(i - 1, i)).collect();
        Self::from_edge_set(n, set)
    }

    /// The star `K_{1,leaves}` with center 0.
    pub fn star(leaves: usize) -> Self {
        let set = (1..=leaves).map(|i| Edge::new(0, i)).collect();
        Self::from_edge_set(leaves + 1, set)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in increasing order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        }
    }

    /// Sorted neighbour list of `v`.
    pub fn neighbors(&self, v: Vertex) -> Result<&[Vertex]> {
        self.check_vertex(v)?;
        Ok(&self.adj[v])
    }

    pub fn neighborhood(&self, v: Vertex) -> Result<VertexSet> {
        VertexSet::from_vertices(self.n, self.neighbors(v)?.iter().copied())
    }

    pub fn degree(&self, v: Vertex) -> Result<usize> {
        Ok(self.neighbors(v)?.len())
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.adj.iter().map(Vec::len).min()
    }

    /// Minimum degree in `self` over the members of `set`.
    pub fn min_degree_over(&self, set: &VertexSet) -> Option<usize> {
        set.iter().map(|v| self.adj[v].len()).min()
    }

    pub fn has_edge(&self, a: Vertex, b: Vertex) -> bool {
        a < self.n && self.adj[a].binary_search(&b).is_ok()
    }

    /// `|[v, A]|`: the number of neighbours of `v` inside `set`.
    pub fn edges_into(&self, v: Vertex, set: &VertexSet) -> usize {
        self.adj[v].iter().filter(|&&w| set.contains(w)).count()
    }

    /// `[A, B]`: every edge with one endpoint in `a` and the other in `b`.
    /// Symmetric in its arguments; an edge inside `A ∩ B` qualifies.
    pub fn bracket(&self, a: &VertexSet, b: &VertexSet) -> Result<Vec<Edge>> {
        a.check_universe(self.n)?;
        b.check_universe(self.n)?;
        Ok(self
            .edges
            .iter()
            .filter(|e| {
                (a.contains(e.u) && b.contains(e.v)) || (a.contains(e.v) && b.contains(e.u))
            })
            .copied()
            .collect())
    }

    /// The subgraph `G(A)` with compacted ids.
    pub fn induced_subgraph(&self, a: &VertexSet) -> Result<InducedSubgraph> {
        a.check_universe(self.n)?;
        if a.is_empty() {
            return Err(Error::EmptySet);
        }
        let to_parent = a.to_vec();
        let mut from_parent = vec![None; self.n];
        for (i, &v) in to_parent.iter().enumerate() {
            from_parent[v] = Some(i);
        }
        let set = self
            .edges
            .iter()
            .filter_map(|e| Some(Edge::new(from_parent[e.u]?, from_parent[e.v]?)))
            .collect();
        Ok(InducedSubgraph {
            graph: Self::from_edge_set(to_parent.len(), set),
            to_parent,
            from_parent,
        })
    }

    /// Breadth-first distances from every vertex of `sources`.
    pub fn bfs_from_set(&self, sources: &VertexSet) -> Result<Vec<Dist>> {
        sources.check_universe(self.n)?;
        if sources.is_empty() {
            return Err(Error::EmptySet);
        }
        let mut dist = vec![Dist::Infinite; self.n];
        let mut queue = VecDeque::new();
        for s in sources.iter() {
            dist[s] = Dist::ZERO;
            queue.push_back((s, 0u32));
        }
        while let Some((x, d)) = queue.pop_front() {
            for &y in &self.adj[x] {
                if dist[y] == Dist::Infinite {
                    dist[y] = Dist::Finite(d + 1);
                    queue.push_back((y, d + 1));
                }
            }
        }
        Ok(dist)
    }

    pub fn bfs(&self, source: Vertex) -> Result<Vec<Dist>> {
        self.check_vertex(source)?;
        self.bfs_from_set(&VertexSet::from_vertices(self.n, [source])?)
    }

    pub fn distance(&self, v: Vertex, w: Vertex) -> Result<Dist> {
        self.check_vertex(w)?;
        Ok(self.bfs(v)?[w])
    }

    /// `d(v, A) = min over w in A of d(v, w)`.
    pub fn distance_to_set(&self, v: Vertex, a: &VertexSet) -> Result<Dist> {
        self.check_vertex(v)?;
        Ok(self.bfs_from_set(a)?[v])
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.bfs(0).is_ok_and(|d| d.iter().all(|x| x.is_finite()))
    }

    /// Largest pairwise distance; `Infinite` when disconnected, 0 for `n <= 1`.
    pub fn diameter(&self) -> Dist {
        (0..self.n)
            .map(|v| {
                self.bfs(v)
                    .expect("vertex in range")
                    .into_iter()
                    .max()
                    .unwrap_or(Dist::ZERO)
            })
            .max()
            .unwrap_or(Dist::ZERO)
    }

    /// The edge cut `[S, S̄]`.
    pub fn edge_cut(&self, s: &VertexSet) -> Result<Cut> {
        s.check_universe(self.n)?;
        if s.is_empty() || s.len() == self.n {
            return Err(Error::EmptySide);
        }
        let crossing = self
            .edges
            .iter()
            .filter(|e| e.crosses(s))
            .copied()
            .collect();
        Ok(Cut {
            s_side: s.clone(),
            crossing,
        })
    }
}

/// `G(A)` together with the maps between its compact ids and the parent's.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedSubgraph {
    graph: Graph,
    to_parent: Vec<Vertex>,
    from_parent: Vec<Option<Vertex>>,
}

impl InducedSubgraph {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// Compact id to parent id.
    pub fn id_map(&self) -> &[Vertex] {
        &self.to_parent
    }

    pub fn to_parent(&self, local: Vertex) -> Vertex {
        self.to_parent[local]
    }

    pub fn from_parent(&self, v: Vertex) -> Option<Vertex> {
        self.from_parent.get(v).copied().flatten()
    }
}

/// An edge cut `[S, S̄]` with both sides nonempty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cut {
    s_side: VertexSet,
    crossing: Vec<Edge>,
}

impl Cut {
    pub fn s_side(&self) -> &VertexSet {
        &self.s_side
    }

    pub fn complement(&self) -> VertexSet {
        self.s_side.complement()
    }

    pub fn crossing_edges(&self) -> &[Edge] {
        &self.crossing
    }

    pub fn size(&self) -> usize {
        self.crossing.len()
    }

    /// Recomputes `[S, S̄]` in `g` and compares it with the stored edges.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        g.edge_cut(&self.s_side)
            .is_ok_and(|c| c.crossing == self.crossing)
    }
}
