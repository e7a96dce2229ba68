//! Maximum matching in general graphs via Edmonds' blossom algorithm.
//!
//! The search keeps the classic contracted-blossom state: `base` maps
//! each vertex to the base of its current pseudo-vertex, `parent` stores
//! the alternating forest, and odd cycles found during the BFS are
//! contracted by re-basing every member onto the cycle's least common
//! ancestor. Augmenting paths are explored from free vertices in
//! ascending index order and neighbors are scanned in ascending order,
//! so the returned matching is deterministic for a given graph.

use std::collections::{BTreeMap, VecDeque};

use crate::graph::{Edge, EdgeSet, Graph, VertexSet};
use crate::{Error, Result};

const NONE: usize = usize::MAX;

/// A set of pairwise vertex-disjoint edges of a specific graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    edges: EdgeSet,
    partner: BTreeMap<usize, usize>,
}

impl Matching {
    /// Validates disjointness and membership in `g`.
    pub fn new(g: &Graph, edges: EdgeSet) -> Result<Matching> {
        let mut partner = BTreeMap::new();
        for e in &edges {
            if !g.contains(e) {
                return Err(Error::MissingEdge(e.u(), e.v()));
            }
            if partner.insert(e.u(), e.v()).is_some() || partner.insert(e.v(), e.u()).is_some() {
                return Err(Error::NotAMatching);
            }
        }
        Ok(Matching { edges, partner })
    }

    pub fn empty() -> Matching {
        Matching {
            edges: EdgeSet::new(),
            partner: BTreeMap::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn edges(&self) -> &EdgeSet {
        &self.edges
    }

    pub fn into_edges(self) -> EdgeSet {
        self.edges
    }

    pub fn covers(&self, v: usize) -> bool {
        self.partner.contains_key(&v)
    }

    pub fn covers_all(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| self.covers(*v))
    }

    /// The vertex matched with `v`, if any.
    pub fn partner(&self, v: usize) -> Option<usize> {
        self.partner.get(&v).copied()
    }

    /// The matching edge at `v`, if any.
    pub fn edge_at(&self, v: usize) -> Option<Edge> {
        self.partner(v).map(|w| Edge::new(v, w).expect("matched pair"))
    }

    pub fn contains(&self, e: &Edge) -> bool {
        self.edges.contains(e)
    }
}

struct BlossomState<'a> {
    g: &'a Graph,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    in_queue: Vec<bool>,
    in_blossom: Vec<bool>,
}

impl<'a> BlossomState<'a> {
    fn new(g: &'a Graph) -> Self {
        let n = g.n();
        BlossomState {
            g,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            in_queue: vec![false; n],
            in_blossom: vec![false; n],
        }
    }

    /// Least common ancestor of the tree positions of `a` and `b`,
    /// walking matched-parent steps over blossom bases.
    fn lca(&self, a: usize, b: usize) -> usize {
        let n = self.g.n();
        let mut marked = vec![false; n];
        let mut v = self.base[a];
        loop {
            marked[v] = true;
            if self.mate[v] == NONE {
                break;
            }
            v = self.base[self.parent[self.mate[v]]];
        }
        let mut w = self.base[b];
        while !marked[w] {
            w = self.base[self.parent[self.mate[w]]];
        }
        w
    }

    /// Marks the blossom path from `v` down to base `b`, rethreading
    /// parents through `child` so later augmentations can traverse the
    /// contracted cycle in either direction.
    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// One alternating-BFS phase from the free vertex `start`.
    fn try_augment(&mut self, start: usize) -> bool {
        let n = self.g.n();
        self.parent.iter_mut().for_each(|p| *p = NONE);
        self.in_queue.iter_mut().for_each(|q| *q = false);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        let mut queue = VecDeque::from([start]);
        self.in_queue[start] = true;

        while let Some(v) = queue.pop_front() {
            for to in self.g.neighbors(v) {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == start || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    // `to` is an outer vertex: the edge closes an odd
                    // cycle, contract it onto the common ancestor.
                    let cur_base = self.lca(v, to);
                    self.in_blossom.iter_mut().for_each(|b| *b = false);
                    self.mark_path(v, cur_base, to);
                    self.mark_path(to, cur_base, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur_base;
                            if !self.in_queue[i] {
                                self.in_queue[i] = true;
                                queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        self.augment_along(to);
                        return true;
                    }
                    let next = self.mate[to];
                    if !self.in_queue[next] {
                        self.in_queue[next] = true;
                        queue.push_back(next);
                    }
                }
            }
        }
        false
    }

    /// Flips matched/unmatched edges along the alternating path ending
    /// at the free vertex `v`.
    fn augment_along(&mut self, mut v: usize) {
        while v != NONE {
            let pv = self.parent[v];
            let next = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = next;
        }
    }
}

/// A maximum-cardinality matching, deterministic for a given graph.
pub fn maximum_matching(g: &Graph) -> Matching {
    let mut state = BlossomState::new(g);
    for start in 0..g.n() {
        if state.mate[start] == NONE {
            state.try_augment(start);
        }
    }
    let mut edges = EdgeSet::new();
    for (v, &w) in state.mate.iter().enumerate() {
        if w != NONE && v < w {
            edges.insert(Edge::new(v, w).expect("matched pair"));
        }
    }
    Matching::new(g, edges).expect("engine output is a matching")
}

/// True iff every vertex is matched by some matching.
pub fn has_perfect_matching(g: &Graph) -> bool {
    g.n().is_multiple_of(2) && 2 * maximum_matching(g).len() == g.n()
}

/// True iff every vertex-deleted subgraph has a perfect matching.
pub fn is_factor_critical(g: &Graph) -> bool {
    let n = g.n();
    if n.is_multiple_of(2) {
        return false;
    }
    (0..n).all(|v| {
        let h = g.remove_vertex(v).expect("vertex in range");
        has_perfect_matching(&h)
    })
}
