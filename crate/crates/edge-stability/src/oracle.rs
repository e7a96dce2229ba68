//! Independent brute-force references used to certify the engines.
//!
//! Nothing here calls into the matching, coloring, or stability modules:
//! the whole point of these implementations is that they share no code
//! with what they check.

use crate::graph::Graph;
use crate::{Error, Result};

/// Minimum number of edge removals that lower the maximum degree,
/// found by enumerating edge subsets in increasing cardinality.
///
/// Only edges with an endpoint of maximum degree are enumerated:
/// removing any other edge leaves every maximum-degree vertex intact,
/// so it can never contribute to a success at a given cardinality.
pub fn brute_es(g: &Graph, cfg: &crate::Config) -> Result<usize> {
    if g.m() == 0 {
        return Err(Error::EdgelessGraph);
    }
    if g.m() > cfg.brute_es_edge_limit {
        return Err(Error::TooLarge {
            what: "edges",
            actual: g.m(),
            limit: cfg.brute_es_edge_limit,
        });
    }
    let delta = g.max_degree();
    let candidates: Vec<(usize, usize)> = g
        .edges()
        .filter(|e| {
            g.degree(e.u()).unwrap() == delta || g.degree(e.v()).unwrap() == delta
        })
        .map(|e| e.endpoints())
        .collect();
    let mut degrees = g.degrees();
    for size in 1..=candidates.len() {
        if subsets_drop_delta(&candidates, &mut degrees, delta, 0, size) {
            return Ok(size);
        }
    }
    unreachable!("removing every max-degree-incident edge lowers the maximum degree");
}

fn subsets_drop_delta(
    candidates: &[(usize, usize)],
    degrees: &mut Vec<usize>,
    delta: usize,
    from: usize,
    remaining: usize,
) -> bool {
    if remaining == 0 {
        return degrees.iter().all(|&d| d < delta);
    }
    if candidates.len() - from < remaining {
        return false;
    }
    for i in from..candidates.len() {
        let (u, v) = candidates[i];
        degrees[u] -= 1;
        degrees[v] -= 1;
        let found = subsets_drop_delta(candidates, degrees, delta, i + 1, remaining - 1);
        degrees[u] += 1;
        degrees[v] += 1;
        if found {
            return true;
        }
    }
    false
}

/// Exact independence number by branch and bound.
pub fn brute_alpha(g: &Graph, cfg: &crate::Config) -> Result<usize> {
    if g.n() > cfg.brute_alpha_vertex_limit {
        return Err(Error::TooLarge {
            what: "vertices",
            actual: g.n(),
            limit: cfg.brute_alpha_vertex_limit,
        });
    }
    let n = g.n();
    let mut closed = vec![0u32; n];
    for (v, mask) in closed.iter_mut().enumerate() {
        *mask = 1 << v;
        for w in g.neighbors(v) {
            *mask |= 1 << w;
        }
    }
    let full: u32 = if n == 32 { u32::MAX } else { (1 << n) - 1 };
    let mut best = 0;
    alpha_branch(&closed, full, 0, &mut best);
    Ok(best)
}

fn alpha_branch(closed: &[u32], mut avail: u32, size: usize, best: &mut usize) {
    if size + avail.count_ones() as usize <= *best {
        return;
    }
    if avail == 0 {
        *best = (*best).max(size);
        return;
    }
    let v = avail.trailing_zeros() as usize;
    // Branch: take v (dropping its closed neighborhood) or skip it.
    alpha_branch(closed, avail & !closed[v], size + 1, best);
    avail &= !(1 << v);
    alpha_branch(closed, avail, size, best);
}

/// Exact matching number by include/exclude search over the edge list.
pub fn brute_alpha_prime(g: &Graph, cfg: &crate::Config) -> Result<usize> {
    if g.m() > cfg.brute_alpha_prime_edge_limit {
        return Err(Error::TooLarge {
            what: "edges",
            actual: g.m(),
            limit: cfg.brute_alpha_prime_edge_limit,
        });
    }
    let edges: Vec<(usize, usize)> = g.edges().map(|e| e.endpoints()).collect();
    let mut best = 0;
    alpha_prime_branch(&edges, 0, 0u64, 0, &mut best);
    Ok(best)
}

fn alpha_prime_branch(
    edges: &[(usize, usize)],
    idx: usize,
    used: u64,
    size: usize,
    best: &mut usize,
) {
    if size + (edges.len() - idx) <= *best {
        return;
    }
    if idx == edges.len() {
        *best = (*best).max(size);
        return;
    }
    let (u, v) = edges[idx];
    if used & (1 << u) == 0 && used & (1 << v) == 0 {
        alpha_prime_branch(edges, idx + 1, used | (1 << u) | (1 << v), size + 1, best);
    }
    alpha_prime_branch(edges, idx + 1, used, size, best);
}

/// Exact chromatic index: try Δ colors, then Δ+1, with plain
/// backtracking in edge-list order.
pub fn brute_chromatic_index(g: &Graph, cfg: &crate::Config) -> Result<usize> {
    if g.m() > cfg.brute_chromatic_edge_limit {
        return Err(Error::TooLarge {
            what: "edges",
            actual: g.m(),
            limit: cfg.brute_chromatic_edge_limit,
        });
    }
    if g.m() == 0 {
        return Ok(0);
    }
    let delta = g.max_degree();
    let edges: Vec<(usize, usize)> = g.edges().map(|e| e.endpoints()).collect();
    if color_edges(&edges, &mut vec![0u64; g.n()], 0, delta) {
        return Ok(delta);
    }
    assert!(
        color_edges(&edges, &mut vec![0u64; g.n()], 0, delta + 1),
        "Δ+1 colors always suffice for a simple graph"
    );
    Ok(delta + 1)
}

fn color_edges(edges: &[(usize, usize)], used: &mut Vec<u64>, idx: usize, k: usize) -> bool {
    if idx == edges.len() {
        return true;
    }
    let (u, v) = edges[idx];
    for c in 0..k {
        let bit = 1u64 << c;
        if used[u] & bit == 0 && used[v] & bit == 0 {
            used[u] |= bit;
            used[v] |= bit;
            if color_edges(edges, used, idx + 1, k) {
                return true;
            }
            used[u] &= !bit;
            used[v] &= !bit;
        }
    }
    false
}

/// The vertex pairs `(i, j)`, `i < j`, in the fixed order used by the
/// edge-mask sweep.
pub fn pair_list(n: usize) -> Vec<(usize, usize)> {
    let mut pairs = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for i in 0..n {
        for j in (i + 1)..n {
            pairs.push((i, j));
        }
    }
    pairs
}

/// Every labelled graph on `n` vertices, by edge-mask enumeration.
/// Isomorphic duplicates are included; that redundancy is harmless for
/// sweep-style certification.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs = pair_list(n);
    assert!(pairs.len() < 63, "edge-mask sweep limited to small n");
    (0u64..(1u64 << pairs.len())).map(move |mask| {
        let mut g = Graph::new(n);
        for (b, &(i, j)) in pairs.iter().enumerate() {
            if mask & (1 << b) != 0 {
                g.add_edge(i, j).expect("pair in range");
            }
        }
        g
    })
}

/// The connected graphs of the `n`-vertex sweep.
pub fn connected_graphs(n: usize) -> impl Iterator<Item = Graph> {
    all_graphs(n).filter(|g| g.is_connected())
}

/// The standard small-graph sweep: every connected graph with
/// `2 <= n <= max_n` (labelled, duplicates included).
pub fn sweep(max_n: usize) -> impl Iterator<Item = Graph> {
    (2..=max_n).flat_map(connected_graphs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;
    use crate::Config;

    /// Fully unrestricted reference for `brute_es`, used to validate
    /// the core-incident restriction on every tiny graph.
    fn brute_es_all_subsets(g: &Graph) -> usize {
        let delta = g.max_degree();
        let edges: Vec<(usize, usize)> = g.edges().map(|e| e.endpoints()).collect();
        let m = edges.len();
        for size in 1..=m {
            let mut found = false;
            let pick = |mask: u64| {
                let mut degrees = g.degrees();
                for (b, &(u, v)) in edges.iter().enumerate() {
                    if mask & (1 << b) != 0 {
                        degrees[u] -= 1;
                        degrees[v] -= 1;
                    }
                }
                degrees.iter().all(|&d| d < delta)
            };
            for mask in 0u64..(1 << m) {
                if mask.count_ones() as usize == size && pick(mask) {
                    found = true;
                    break;
                }
            }
            if found {
                return size;
            }
        }
        unreachable!("removing all edges lowers the maximum degree");
    }

    #[test]
    fn brute_es_values() {
        let cfg = Config::default();
        assert_eq!(brute_es(&generators::path(3).unwrap(), &cfg).unwrap(), 1);
        assert_eq!(brute_es(&generators::complete(4).unwrap(), &cfg).unwrap(), 2);
        assert_eq!(brute_es(&generators::cycle(5).unwrap(), &cfg).unwrap(), 3);
        assert_eq!(brute_es(&Graph::new(3), &cfg), Err(Error::EdgelessGraph));
        let big = generators::complete(8).unwrap();
        assert!(matches!(
            brute_es(&big, &cfg),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn restricted_enumeration_matches_full_enumeration() {
        let cfg = Config::default();
        for n in 2..=5 {
            for g in all_graphs(n) {
                if g.m() == 0 {
                    continue;
                }
                assert_eq!(
                    brute_es(&g, &cfg).unwrap(),
                    brute_es_all_subsets(&g),
                    "mismatch on {}",
                    crate::io::to_graph6(&g)
                );
            }
        }
    }

    #[test]
    fn alpha_values() {
        let cfg = Config::default();
        assert_eq!(brute_alpha(&generators::cycle(5).unwrap(), &cfg).unwrap(), 2);
        assert_eq!(
            brute_alpha(&generators::complete_bipartite(3, 3).unwrap(), &cfg).unwrap(),
            3
        );
        assert_eq!(brute_alpha(&generators::petersen(), &cfg).unwrap(), 4);
        assert_eq!(brute_alpha(&generators::complete(4).unwrap(), &cfg).unwrap(), 1);
        assert_eq!(brute_alpha(&Graph::new(6), &cfg).unwrap(), 6);
    }

    #[test]
    fn alpha_prime_values() {
        let cfg = Config::default();
        assert_eq!(
            brute_alpha_prime(&generators::cycle(5).unwrap(), &cfg).unwrap(),
            2
        );
        assert_eq!(
            brute_alpha_prime(&generators::complete_bipartite(3, 3).unwrap(), &cfg).unwrap(),
            3
        );
        assert_eq!(brute_alpha_prime(&generators::petersen(), &cfg).unwrap(), 5);
    }

    #[test]
    fn chromatic_index_values() {
        let cfg = Config::default();
        assert_eq!(
            brute_chromatic_index(&generators::cycle(4).unwrap(), &cfg).unwrap(),
            2
        );
        assert_eq!(
            brute_chromatic_index(&generators::cycle(5).unwrap(), &cfg).unwrap(),
            3
        );
        assert_eq!(
            brute_chromatic_index(&generators::complete(4).unwrap(), &cfg).unwrap(),
            3
        );
        assert_eq!(
            brute_chromatic_index(&generators::petersen(), &cfg).unwrap(),
            4
        );
    }

    #[test]
    fn sweep_counts() {
        assert_eq!(all_graphs(3).count(), 8);
        assert_eq!(connected_graphs(3).count(), 4);
        assert_eq!(connected_graphs(4).count(), 38);
    }
}
