//! Deterministic constructors for test families and extremal examples.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;
use crate::{Error, Result};

/// A parsed family description, e.g. `gk:2` or `randreg:10,3,42`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    Gk { k: usize },
    Gt { t: usize },
    Cycle { n: usize },
    Path { n: usize },
    Complete { n: usize },
    CompleteBipartite { a: usize, b: usize },
    Star { leaves: usize },
    Petersen,
    RandomRegular { n: usize, k: usize, seed: u64 },
}

impl FamilySpec {
    /// Parses the CLI-facing family syntax.
    pub fn parse(text: &str) -> Result<FamilySpec> {
        let bad = || Error::InvalidFamily(text.to_string());
        let (name, args) = match text.split_once(':') {
            Some((n, a)) => (n, a),
            None => (text, ""),
        };
        let nums: Vec<usize> = if args.is_empty() {
            Vec::new()
        } else {
            args.split(',')
                .map(|t| t.trim().parse::<usize>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| bad())?
        };
        match (name, nums.as_slice()) {
            ("gk", [k]) => Ok(FamilySpec::Gk { k: *k }),
            ("gt", [t]) => Ok(FamilySpec::Gt { t: *t }),
            ("cycle", [n]) => Ok(FamilySpec::Cycle { n: *n }),
            ("path", [n]) => Ok(FamilySpec::Path { n: *n }),
            ("complete", [n]) => Ok(FamilySpec::Complete { n: *n }),
            ("kbip", [a, b]) => Ok(FamilySpec::CompleteBipartite { a: *a, b: *b }),
            ("star", [l]) => Ok(FamilySpec::Star { leaves: *l }),
            ("petersen", []) => Ok(FamilySpec::Petersen),
            ("randreg", [n, k, seed]) => Ok(FamilySpec::RandomRegular {
                n: *n,
                k: *k,
                seed: *seed as u64,
            }),
            _ => Err(bad()),
        }
    }

    pub fn build(&self, cfg: &crate::Config) -> Result<Graph> {
        match *self {
            FamilySpec::Gk { k } => gen_gk(k),
            FamilySpec::Gt { t } => gen_gt(t),
            FamilySpec::Cycle { n } => cycle(n),
            FamilySpec::Path { n } => path(n),
            FamilySpec::Complete { n } => complete(n),
            FamilySpec::CompleteBipartite { a, b } => complete_bipartite(a, b),
            FamilySpec::Star { leaves } => star(leaves),
            FamilySpec::Petersen => Ok(petersen()),
            FamilySpec::RandomRegular { n, k, seed } => {
                gen_random_regular(n, k, seed, cfg.random_regular_retry_limit)
            }
        }
    }
}

/// The 4-regular family on `11k` vertices built from `2k` blocks
/// `K5 - e` chained through `k` hub vertices.
///
/// Block `i` occupies vertices `5i..5i+5`; the deleted edge joins
/// `a_i = 5i` and `b_i = 5i + 1`. Hub `j` (vertex `10k + j`) is adjacent
/// to the `b` endpoints of blocks `2j, 2j+1` and, cyclically, to the `a`
/// endpoints of blocks `2j+2, 2j+3`, which closes the ring and makes the
/// graph connected and 4-regular.
pub fn gen_gk(k: usize) -> Result<Graph> {
    if k < 1 {
        return Err(Error::InvalidFamily("gk requires k >= 1".into()));
    }
    let blocks = 2 * k;
    let mut g = Graph::new(11 * k);
    for i in 0..blocks {
        let base = 5 * i;
        for x in 0..5 {
            for y in (x + 1)..5 {
                if (x, y) != (0, 1) {
                    g.add_edge(base + x, base + y)?;
                }
            }
        }
    }
    for j in 0..k {
        let hub = 10 * k + j;
        g.add_edge(hub, 5 * (2 * j) + 1)?;
        g.add_edge(hub, 5 * (2 * j + 1) + 1)?;
        g.add_edge(hub, 5 * ((2 * j + 2) % blocks))?;
        g.add_edge(hub, 5 * ((2 * j + 3) % blocks))?;
    }
    debug_assert!(g.is_regular() && g.max_degree() == 4);
    Ok(g)
}

/// Three copies of `K_t` with one edge deleted from each, plus an apex
/// vertex joined to all six endpoints of the deleted edges. Requires
/// odd `t >= 7`.
pub fn gen_gt(t: usize) -> Result<Graph> {
    if t < 7 || t.is_multiple_of(2) {
        return Err(Error::InvalidFamily("gt requires odd t >= 7".into()));
    }
    let apex = 3 * t;
    let mut g = Graph::new(3 * t + 1);
    for b in 0..3 {
        let base = b * t;
        for x in 0..t {
            for y in (x + 1)..t {
                if (x, y) != (0, 1) {
                    g.add_edge(base + x, base + y)?;
                }
            }
        }
        g.add_edge(apex, base)?;
        g.add_edge(apex, base + 1)?;
    }
    debug_assert_eq!(g.degree(apex).unwrap(), 6);
    debug_assert_eq!(g.max_degree(), t - 1);
    Ok(g)
}

pub fn path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidFamily("path requires n >= 1".into()));
    }
    let mut g = Graph::new(n);
    for v in 1..n {
        g.add_edge(v - 1, v)?;
    }
    Ok(g)
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidFamily("cycle requires n >= 3".into()));
    }
    let mut g = Graph::new(n);
    for v in 0..n {
        g.add_edge(v, (v + 1) % n)?;
    }
    Ok(g)
}

pub fn complete(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidFamily("complete requires n >= 1".into()));
    }
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in (u + 1)..n {
            g.add_edge(u, v)?;
        }
    }
    Ok(g)
}

/// `K5` minus one edge, the building block of the `gk` family.
pub fn k5_minus_e() -> Graph {
    let mut g = complete(5).expect("k >= 1");
    let e = crate::graph::Edge::new(0, 1).expect("distinct");
    g = g
        .remove_edges(&crate::graph::EdgeSet::from([e]))
        .expect("edge present");
    g
}

pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    if a == 0 || b == 0 {
        return Err(Error::InvalidFamily("kbip requires both parts >= 1".into()));
    }
    let mut g = Graph::new(a + b);
    for u in 0..a {
        for v in 0..b {
            g.add_edge(u, a + v)?;
        }
    }
    Ok(g)
}

/// Star with the center at vertex 0.
pub fn star(leaves: usize) -> Result<Graph> {
    if leaves == 0 {
        return Err(Error::InvalidFamily("star requires >= 1 leaf".into()));
    }
    let mut g = Graph::new(leaves + 1);
    for v in 1..=leaves {
        g.add_edge(0, v)?;
    }
    Ok(g)
}

/// Outer 5-cycle `0..5`, spokes `i ~ i+5`, inner pentagram on `5..10`.
pub fn petersen() -> Graph {
    let mut g = Graph::new(10);
    for i in 0..5 {
        g.add_edge(i, (i + 1) % 5).expect("in range");
        g.add_edge(i, i + 5).expect("in range");
        g.add_edge(5 + i, 5 + (i + 2) % 5).expect("in range");
    }
    g
}

/// A simple `k`-regular graph from the pairing model: `k` points per
/// vertex, a seeded uniform pairing, rejected and resampled whenever it
/// produces loops or repeated edges. Deterministic for a given seed.
pub fn gen_random_regular(n: usize, k: usize, seed: u64, retry_limit: usize) -> Result<Graph> {
    if k >= n || !(n * k).is_multiple_of(2) {
        return Err(Error::InvalidFamily(format!(
            "no simple {k}-regular graph on {n} vertices (need k < n and nk even)"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points: Vec<usize> = (0..n * k).map(|p| p / k).collect();
    'attempt: for _ in 0..retry_limit {
        // Fisher-Yates on the point list, then pair consecutive points.
        for i in (1..points.len()).rev() {
            let j = rng.gen_range(0..=i);
            points.swap(i, j);
        }
        let mut g = Graph::new(n);
        for pair in points.chunks_exact(2) {
            let (u, v) = (pair[0], pair[1]);
            if u == v || g.has_edge(u, v) {
                continue 'attempt;
            }
            g.add_edge(u, v)?;
        }
        debug_assert!(g.degrees().iter().all(|&d| d == k));
        return Ok(g);
    }
    Err(Error::RetriesExhausted(retry_limit))
}

/// A seeded Bernoulli random graph, resampled until it has at least one
/// edge so it is valid input for the stability operations.
pub fn gen_random_graph(n: usize, p: f64, seed: u64) -> Graph {
    assert!(n >= 2, "need at least two vertices to place an edge");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in (u + 1)..n {
                if rng.gen_bool(p) {
                    g.add_edge(u, v).expect("in range");
                }
            }
        }
        if g.m() > 0 {
            return g;
        }
    }
}
