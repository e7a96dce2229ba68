//! Proper edge coloring: a guaranteed Δ+1 construction, exact
//! Δ-colorability for small instances, and the Class-1 core test.

use std::collections::BTreeMap;

use crate::graph::{Edge, Graph};
use crate::{Config, Error, Result};

/// A proper edge coloring with colors `0..num_colors`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeColoring {
    colors: BTreeMap<Edge, usize>,
    num_colors: usize,
}

impl EdgeColoring {
    pub fn color(&self, e: &Edge) -> Option<usize> {
        self.colors.get(e).copied()
    }

    pub fn num_colors(&self) -> usize {
        self.num_colors
    }

    pub fn colors(&self) -> &BTreeMap<Edge, usize> {
        &self.colors
    }

    /// True when every edge of `g` is colored and no two adjacent edges
    /// share a color.
    pub fn is_proper(&self, g: &Graph) -> bool {
        if self.colors.len() != g.m() || !g.edges().all(|e| self.colors.contains_key(&e)) {
            return false;
        }
        let mut seen: Vec<BTreeMap<usize, ()>> = vec![BTreeMap::new(); g.n()];
        for (e, &c) in &self.colors {
            if c >= self.num_colors {
                return false;
            }
            for v in [e.u(), e.v()] {
                if seen[v].insert(c, ()).is_some() {
                    return false;
                }
            }
        }
        true
    }
}

/// Fan-and-chain construction of a proper coloring with at most Δ+1
/// colors (Misra-Gries). Edges are processed in canonical order, so the
/// output is deterministic.
pub fn vizing_coloring(g: &Graph) -> Result<EdgeColoring> {
    if g.m() == 0 {
        return Err(Error::EdgelessGraph);
    }
    let mut mg = MisraGries::new(g);
    mg.run();
    let mut colors = BTreeMap::new();
    let mut max_color = 0;
    for (idx, e) in mg.edges.iter().enumerate() {
        let c = mg.color[idx].expect("all edges colored");
        max_color = max_color.max(c);
        colors.insert(*e, c);
    }
    let coloring = EdgeColoring {
        colors,
        num_colors: max_color + 1,
    };
    debug_assert!(coloring.is_proper(g));
    debug_assert!(coloring.num_colors() <= g.max_degree() + 1);
    Ok(coloring)
}

struct MisraGries {
    edges: Vec<Edge>,
    /// adjacency as (neighbor, edge index), ascending by neighbor
    incident: Vec<Vec<(usize, usize)>>,
    color: Vec<Option<usize>>,
    /// per-vertex incidence count of each color; counts instead of
    /// flags so fan rotations survive their transient duplicates
    used: Vec<Vec<usize>>,
    max_colors: usize,
}

impl MisraGries {
    fn new(g: &Graph) -> Self {
        let edges: Vec<Edge> = g.edges().collect();
        let mut incident = vec![Vec::new(); g.n()];
        for (idx, e) in edges.iter().enumerate() {
            incident[e.u()].push((e.v(), idx));
            incident[e.v()].push((e.u(), idx));
        }
        for list in &mut incident {
            list.sort_unstable();
        }
        let max_colors = g.max_degree() + 1;
        MisraGries {
            color: vec![None; edges.len()],
            used: vec![vec![0; max_colors]; g.n()],
            edges,
            incident,
            max_colors,
        }
    }

    fn free_color(&self, v: usize) -> usize {
        (0..self.max_colors)
            .find(|&c| self.used[v][c] == 0)
            .expect("degree <= Δ leaves a free color among Δ+1")
    }

    fn is_free(&self, v: usize, c: usize) -> bool {
        self.used[v][c] == 0
    }

    fn set_color(&mut self, idx: usize, c: usize) {
        let e = self.edges[idx];
        if let Some(old) = self.color[idx] {
            self.used[e.u()][old] -= 1;
            self.used[e.v()][old] -= 1;
        }
        self.color[idx] = Some(c);
        self.used[e.u()][c] += 1;
        self.used[e.v()][c] += 1;
    }

    /// Maximal fan of `u` starting with the uncolored edge to `v`:
    /// each next edge is colored with a color free at the previous fan
    /// endpoint, every neighbor used at most once.
    fn maximal_fan(&self, u: usize, v: usize) -> Vec<(usize, usize)> {
        let mut fan = vec![(
            v,
            self.incident[u]
                .iter()
                .find(|&&(w, _)| w == v)
                .expect("edge present")
                .1,
        )];
        let mut available: Vec<(usize, usize)> = self.incident[u]
            .iter()
            .copied()
            .filter(|&(w, _)| w != v)
            .collect();
        let mut last = v;
        loop {
            let next = available
                .iter()
                .position(|&(_, idx)| self.color[idx].is_some_and(|c| self.is_free(last, c)));
            match next {
                Some(pos) => {
                    let (w, idx) = available.remove(pos);
                    last = w;
                    fan.push((w, idx));
                }
                None => return fan,
            }
        }
    }

    /// The maximal path from `u` along edges alternately colored
    /// `first` and `second`. Each vertex carries at most one edge per
    /// color, so the walk is forced and cannot revisit an edge.
    fn alternating_path(&self, u: usize, first: usize, second: usize) -> Vec<usize> {
        let mut path = Vec::new();
        let mut cur = u;
        let mut want = first;
        loop {
            let next = self.incident[cur]
                .iter()
                .find(|&&(_, idx)| self.color[idx] == Some(want));
            match next {
                Some(&(w, idx)) => {
                    path.push(idx);
                    cur = w;
                    want = if want == first { second } else { first };
                }
                None => return path,
            }
            assert!(path.len() <= self.edges.len(), "alternating walk cycled");
        }
    }

    fn path_endpoint(&self, start: usize, path: &[usize]) -> usize {
        let mut cur = start;
        for &idx in path {
            cur = self.edges[idx].other(cur);
        }
        cur
    }

    /// Swaps colors `a` and `b` along a precomputed alternating path.
    fn flip(&mut self, path: &[usize], a: usize, b: usize) {
        for &idx in path {
            let old = self.color[idx].expect("path edges are colored");
            self.set_color(idx, if old == a { b } else { a });
        }
    }

    /// Shifts each fan color one position toward the uncolored edge and
    /// finishes the prefix `fan[..=w]` with `color`.
    fn rotate_and_set(&mut self, fan: &[(usize, usize)], w: usize, color: usize) {
        let shifts: Vec<(usize, usize)> = (1..=w)
            .map(|i| (fan[i - 1].1, self.color[fan[i].1].expect("fan edges colored")))
            .collect();
        for (idx, c) in shifts {
            self.set_color(idx, c);
        }
        self.set_color(fan[w].1, color);
    }

    /// Colors edge `idx = (u, v)` via the Vizing fan at `u`.
    ///
    /// With `c` free at `u` and `d` free at the last fan vertex, either
    /// `d` is also free at `u` and the whole fan rotates onto `d`, or
    /// the `d`-edge at `u` sits inside the fan at position `j` (fan
    /// maximality) and one Kempe flip makes room: flip the cd-path from
    /// `u` and rotate to `j-1` unless that path ends at fan vertex
    /// `j-1`, in which case the disjoint cd-path from the last fan
    /// vertex is flipped and the whole fan rotates onto `c`.
    fn color_edge(&mut self, idx: usize) {
        let (u, v) = self.edges[idx].endpoints();
        let fan = self.maximal_fan(u, v);
        let last = fan.last().expect("fan nonempty").0;
        let c = self.free_color(u);
        let d = self.free_color(last);
        if self.is_free(u, d) {
            self.rotate_and_set(&fan, fan.len() - 1, d);
            return;
        }
        let j = fan
            .iter()
            .position(|&(_, eidx)| self.color[eidx] == Some(d))
            .expect("a maximal fan contains the d-edge at u");
        assert!(j >= 1, "the starting edge is uncolored");
        let path_u = self.alternating_path(u, d, c);
        if self.path_endpoint(u, &path_u) != fan[j - 1].0 {
            self.flip(&path_u, c, d);
            self.rotate_and_set(&fan, j - 1, d);
        } else {
            let path_last = self.alternating_path(last, c, d);
            self.flip(&path_last, c, d);
            self.rotate_and_set(&fan, fan.len() - 1, c);
        }
    }

    fn run(&mut self) {
        for idx in 0..self.edges.len() {
            self.color_edge(idx);
        }
    }
}

/// Decides whether `g` admits a proper `k`-edge coloring by
/// backtracking. Edges are tried in decreasing degree-sum order and a
/// fresh color may only be introduced as the next unused index, which
/// breaks color symmetry. `budget = None` searches exhaustively;
/// otherwise `None` is returned when the node budget runs out.
fn k_colorable(g: &Graph, k: usize, budget: Option<u64>) -> Option<bool> {
    if g.m() == 0 {
        return Some(true);
    }
    if k == 0 {
        return Some(false);
    }
    let mut edges: Vec<Edge> = g.edges().collect();
    edges.sort_by_key(|e| {
        std::cmp::Reverse(g.degree(e.u()).unwrap() + g.degree(e.v()).unwrap())
    });
    if k > 127 {
        return Some(true); // Δ+1 ≤ 128 everywhere this is called
    }
    let mut used = vec![0u128; g.n()];
    let mut nodes_left = budget;
    fn rec(
        edges: &[Edge],
        used: &mut Vec<u128>,
        idx: usize,
        max_used: usize,
        k: usize,
        nodes_left: &mut Option<u64>,
    ) -> Option<bool> {
        if idx == edges.len() {
            return Some(true);
        }
        if let Some(n) = nodes_left {
            if *n == 0 {
                return None;
            }
            *n -= 1;
        }
        let (u, v) = edges[idx].endpoints();
        let cap = k.min(max_used + 1);
        for c in 0..cap {
            let bit = 1u128 << c;
            if used[u] & bit == 0 && used[v] & bit == 0 {
                used[u] |= bit;
                used[v] |= bit;
                let sub = rec(edges, used, idx + 1, max_used.max(c + 1), k, nodes_left);
                used[u] &= !bit;
                used[v] &= !bit;
                match sub {
                    Some(true) => return Some(true),
                    Some(false) => {}
                    None => return None,
                }
            }
        }
        Some(false)
    }
    rec(&edges, &mut used, 0, 0, k, &mut nodes_left)
}

/// Exact chromatic index for instances within the configured edge
/// limit. By the Δ/Δ+1 dichotomy only Δ-colorability is decided.
pub fn chromatic_index_exact(g: &Graph, cfg: &Config) -> Result<usize> {
    if g.m() > cfg.exact_coloring_edge_limit {
        return Err(Error::TooLarge {
            what: "edges",
            actual: g.m(),
            limit: cfg.exact_coloring_edge_limit,
        });
    }
    if g.m() == 0 {
        return Ok(0);
    }
    let delta = g.max_degree();
    if k_colorable(g, delta, None).expect("unbudgeted search always decides") {
        Ok(delta)
    } else {
        Ok(delta + 1)
    }
}

/// Three-valued answer for the Class-1 core criterion.
#[derive(Debug, Copy, Clone, PartialEq, Eq)]
pub enum Class1 {
    Yes,
    No,
    Unknown,
}

/// Does the subgraph induced by the maximum-degree vertices admit a
/// proper edge coloring with Δ(g) colors (Δ of the *whole* graph)?
///
/// An edgeless core is vacuously colorable. When the core's own maximum
/// degree is below Δ(g) the Δ+1 construction already fits. Otherwise
/// the exact backtracking decides within the configured limit, and
/// above it a budgeted attempt may report `Unknown` instead of risking
/// a false negative.
pub fn core_is_class1(g: &Graph, cfg: &Config) -> Class1 {
    let Ok(core) = g.core() else {
        return Class1::Yes; // no edge at all: nothing to color
    };
    let delta = g.max_degree();
    let (sub, _) = g.induced_subgraph(&core).expect("core vertices in range");
    if sub.m() == 0 {
        return Class1::Yes;
    }
    if sub.max_degree() < delta {
        return Class1::Yes;
    }
    if sub.m() <= cfg.exact_coloring_edge_limit {
        if k_colorable(&sub, delta, None).expect("unbudgeted") {
            Class1::Yes
        } else {
            Class1::No
        }
    } else {
        let coloring = vizing_coloring(&sub).expect("core has edges");
        if coloring.num_colors() <= delta {
            return Class1::Yes;
        }
        match k_colorable(&sub, delta, Some(cfg.coloring_node_budget)) {
            Some(true) => Class1::Yes,
            Some(false) => Class1::No,
            None => Class1::Unknown,
        }
    }
}
