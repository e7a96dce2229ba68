//! Simple undirected graphs with index vertices and sorted adjacency sets.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use crate::{Error, Result};

/// A set of vertex indices.
pub type VertexSet = BTreeSet<usize>;

/// A deduplicated set of canonical edges.
pub type EdgeSet = BTreeSet<Edge>;

/// An undirected edge stored with `u < v`.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    u: usize,
    v: usize,
}

impl Edge {
    /// Builds the canonical edge between two distinct vertices.
    pub fn new(a: usize, b: usize) -> Result<Edge> {
        if a == b {
            return Err(Error::SelfLoop(a));
        }
        Ok(Edge {
            u: a.min(b),
            v: a.max(b),
        })
    }

    pub fn u(&self) -> usize {
        self.u
    }

    pub fn v(&self) -> usize {
        self.v
    }

    pub fn endpoints(&self) -> (usize, usize) {
        (self.u, self.v)
    }

    pub fn touches(&self, x: usize) -> bool {
        self.u == x || self.v == x
    }

    /// The endpoint opposite to `x`; panics if `x` is not an endpoint.
    pub fn other(&self, x: usize) -> usize {
        if x == self.u {
            self.v
        } else {
            assert_eq!(x, self.v, "vertex {x} is not an endpoint of {self:?}");
            self.u
        }
    }

    /// True when the two edges share an endpoint.
    pub fn adjacent(&self, other: &Edge) -> bool {
        self.touches(other.u) || self.touches(other.v)
    }
}

impl fmt::Debug for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

/// Simple undirected graph on vertices `0..n`.
///
/// No loops, no parallel edges; the adjacency sets stay symmetric under
/// every constructor and every derived-graph operation. Values are
/// immutable once built: operations return new graphs.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<BTreeSet<usize>>,
    m: usize,
}

impl Graph {
    /// An edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Graph {
        Graph {
            adj: vec![BTreeSet::new(); n],
            m: 0,
        }
    }

    /// Builds a graph from an edge list, ignoring duplicates.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::new(n);
        for &(a, b) in edges {
            g.add_edge(a, b)?;
        }
        Ok(g)
    }

    /// Inserts an edge; duplicate insertions are no-ops.
    pub fn add_edge(&mut self, a: usize, b: usize) -> Result<()> {
        let n = self.n();
        if a >= n {
            return Err(Error::VertexOutOfRange { vertex: a, n });
        }
        if b >= n {
            return Err(Error::VertexOutOfRange { vertex: b, n });
        }
        if a == b {
            return Err(Error::SelfLoop(a));
        }
        if self.adj[a].insert(b) {
            self.adj[b].insert(a);
            self.m += 1;
        }
        Ok(())
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges.
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.n() && self.adj[a].contains(&b)
    }

    pub fn contains(&self, e: &Edge) -> bool {
        self.has_edge(e.u(), e.v())
    }

    /// Degree of `v`.
    pub fn degree(&self, v: usize) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.adj[v].len())
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(|s| s.len()).collect()
    }

    /// Maximum degree; 0 for graphs without edges.
    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(|s| s.len()).max().unwrap_or(0)
    }

    /// Minimum degree; 0 for the empty graph.
    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(|s| s.len()).min().unwrap_or(0)
    }

    pub fn is_regular(&self) -> bool {
        self.max_degree() == self.min_degree()
    }

    /// Vertices of maximum degree. Requires at least one edge.
    pub fn core(&self) -> Result<VertexSet> {
        if self.m == 0 {
            return Err(Error::EdgelessGraph);
        }
        let delta = self.max_degree();
        Ok((0..self.n())
            .filter(|&v| self.adj[v].len() == delta)
            .collect())
    }

    /// Neighbors of `v` in ascending order.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().copied()
    }

    /// All edges in canonical ascending order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, nbrs)| {
            nbrs.iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| Edge { u, v })
        })
    }

    pub fn edge_set(&self) -> EdgeSet {
        self.edges().collect()
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n() {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n(),
            });
        }
        Ok(())
    }

    fn check_vertex_set(&self, s: &VertexSet) -> Result<()> {
        match s.iter().next_back() {
            Some(&v) => self.check_vertex(v),
            None => Ok(()),
        }
    }

    /// Subgraph induced by `s`, together with the map from new indices
    /// back to the original vertices (position `i` holds the old index
    /// of new vertex `i`; the map is ascending).
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<(Graph, Vec<usize>)> {
        self.check_vertex_set(s)?;
        let from_sub: Vec<usize> = s.iter().copied().collect();
        let mut to_sub = vec![usize::MAX; self.n()];
        for (new, &old) in from_sub.iter().enumerate() {
            to_sub[old] = new;
        }
        let mut g = Graph::new(from_sub.len());
        for (new_u, &old_u) in from_sub.iter().enumerate() {
            for old_v in self.adj[old_u].iter().copied() {
                if old_v > old_u && s.contains(&old_v) {
                    g.add_edge(new_u, to_sub[old_v]).expect("induced edge");
                }
            }
        }
        Ok((g, from_sub))
    }

    /// The graph with every vertex kept and the edges of `s` removed.
    pub fn remove_edges(&self, s: &EdgeSet) -> Result<Graph> {
        let mut g = self.clone();
        for e in s {
            if !g.has_edge(e.u(), e.v()) {
                return Err(Error::MissingEdge(e.u(), e.v()));
            }
            g.adj[e.u()].remove(&e.v());
            g.adj[e.v()].remove(&e.u());
            g.m -= 1;
        }
        Ok(g)
    }

    /// Subgraph induced by all vertices except `v`.
    pub fn remove_vertex(&self, v: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        let rest: VertexSet = (0..self.n()).filter(|&u| u != v).collect();
        Ok(self.induced_subgraph(&rest)?.0)
    }

    pub fn is_connected(&self) -> bool {
        let n = self.n();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = queue.pop_front() {
            for w in self.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == n
    }

    /// Connected components ordered by their smallest vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        self.components_avoiding(&VertexSet::new())
    }

    /// Connected components of the graph minus `removed`, ordered by
    /// smallest vertex.
    pub fn components_avoiding(&self, removed: &VertexSet) -> Vec<VertexSet> {
        let n = self.n();
        let mut seen = vec![false; n];
        for &v in removed {
            if v < n {
                seen[v] = true;
            }
        }
        let mut comps = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut comp = VertexSet::new();
            let mut queue = VecDeque::from([start]);
            seen[start] = true;
            while let Some(v) = queue.pop_front() {
                comp.insert(v);
                for w in self.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            comps.push(comp);
        }
        comps
    }

    /// Proper 2-colorability of the vertices.
    pub fn is_bipartite(&self) -> bool {
        let n = self.n();
        let mut color = vec![usize::MAX; n];
        for start in 0..n {
            if color[start] != usize::MAX {
                continue;
            }
            color[start] = 0;
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for w in self.neighbors(v) {
                    if color[w] == usize::MAX {
                        color[w] = color[v] ^ 1;
                        queue.push_back(w);
                    } else if color[w] == color[v] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Length of a shortest odd cycle, or `None` for bipartite graphs.
    ///
    /// One BFS per root; an edge joining two vertices on the same BFS
    /// level closes an odd walk of length `2*level + 1`, and the minimum
    /// of those over all roots is attained exactly on a shortest odd
    /// cycle.
    pub fn odd_girth(&self) -> Option<usize> {
        let n = self.n();
        let mut best: Option<usize> = None;
        let mut dist = vec![usize::MAX; n];
        for root in 0..n {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            dist[root] = 0;
            let mut queue = VecDeque::from([root]);
            while let Some(v) = queue.pop_front() {
                for w in self.neighbors(v) {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[v] + 1;
                        queue.push_back(w);
                    }
                }
            }
            for e in self.edges() {
                let (du, dv) = (dist[e.u()], dist[e.v()]);
                if du != usize::MAX && du == dv {
                    let len = 2 * du + 1;
                    if best.is_none_or(|b| len < b) {
                        best = Some(len);
                    }
                }
            }
        }
        best
    }

    /// Number of edges with one endpoint in `s` and the other in `t`.
    pub fn e_between(&self, s: &VertexSet, t: &VertexSet) -> Result<usize> {
        self.check_vertex_set(s)?;
        self.check_vertex_set(t)?;
        if s.intersection(t).next().is_some() {
            return Err(Error::OverlappingSets);
        }
        let mut count = 0;
        for &v in s {
            count += self.adj[v].iter().filter(|w| t.contains(w)).count();
        }
        Ok(count)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={}, edges={:?})", self.n(), self.m(), self.edge_set())
    }
}
