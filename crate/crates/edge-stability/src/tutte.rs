//! Saturating matchings, deficiency witnesses, and maximal Tutte sets.

use crate::graph::{EdgeSet, Graph, VertexSet};
use crate::matching::{has_perfect_matching, is_factor_critical, maximum_matching, Matching};
use crate::{Config, Result};

/// Certificate that no matching saturates a target vertex set `A`:
/// removing `separator` leaves strictly more than `|separator|` odd
/// components fully contained in `A`, and each such component must leak
/// one matched vertex into the separator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeficiencyWitness {
    pub separator: VertexSet,
    pub components: Vec<VertexSet>,
}

impl DeficiencyWitness {
    /// Checks every structural invariant against the graph and target.
    pub fn verify(&self, g: &Graph, target: &VertexSet) -> bool {
        if self.components.len() < self.separator.len() + 1 {
            return false;
        }
        let actual = g.components_avoiding(&self.separator);
        let mut seen = VertexSet::new();
        for comp in &self.components {
            if comp.len() % 2 == 0 || !comp.is_subset(target) {
                return false;
            }
            if comp.iter().any(|v| !seen.insert(*v)) {
                return false;
            }
            if !actual.contains(comp) {
                return false;
            }
        }
        true
    }
}

/// Result of asking for a matching that saturates a vertex set.
#[derive(Debug, Clone)]
pub enum Saturation {
    Saturated(Matching),
    Deficient(DeficiencyWitness),
}

impl Saturation {
    pub fn matching(self) -> Option<Matching> {
        match self {
            Saturation::Saturated(m) => Some(m),
            Saturation::Deficient(_) => None,
        }
    }

    pub fn is_saturated(&self) -> bool {
        matches!(self, Saturation::Saturated(_))
    }
}

/// The auxiliary graph `H`: a disjoint clique on `n` fresh vertices,
/// each joined to every vertex outside the target set. `H` has a
/// perfect matching exactly when the original graph has a matching
/// saturating the target.
fn auxiliary_graph(g: &Graph, target: &VertexSet) -> Graph {
    let n = g.n();
    let mut h = Graph::new(2 * n);
    for e in g.edges() {
        h.add_edge(e.u(), e.v()).expect("copied edge");
    }
    for i in n..(2 * n) {
        for j in (i + 1)..(2 * n) {
            h.add_edge(i, j).expect("clique edge");
        }
    }
    for b in 0..n {
        if !target.contains(&b) {
            for i in n..(2 * n) {
                h.add_edge(b, i).expect("join edge");
            }
        }
    }
    h
}

/// Vertices missed by at least one maximum matching, decided by matching
/// numbers: `v` is missable iff deleting it does not decrease `α'`.
fn missable_vertices(g: &Graph, alpha_prime: usize) -> Vec<bool> {
    (0..g.n())
        .map(|v| {
            let h = g.remove_vertex(v).expect("vertex in range");
            maximum_matching(&h).len() == alpha_prime
        })
        .collect()
}

/// The anchor set of the structural decomposition: neighbors of the
/// missable vertices that are not themselves missable.
fn anchor_set(g: &Graph, missable: &[bool]) -> VertexSet {
    let mut anchors = VertexSet::new();
    for v in 0..g.n() {
        if missable[v] {
            for w in g.neighbors(v) {
                if !missable[w] {
                    anchors.insert(w);
                }
            }
        }
    }
    anchors
}

/// Either a matching of `g` saturating `a`, or a deficiency witness
/// proving that none exists.
///
/// The search runs on the auxiliary clique-join graph: a perfect
/// matching there restricts to a saturating matching of `g` (edges
/// inside `a` are allowed and kept). On failure the witness separator
/// comes from the anchor set of the auxiliary graph's structural
/// decomposition, intersected with the original vertices.
pub fn saturating_matching(g: &Graph, a: &VertexSet) -> Result<Saturation> {
    if let Some(&max) = a.iter().next_back() {
        g.degree(max)?;
    }
    if a.is_empty() {
        return Ok(Saturation::Saturated(Matching::empty()));
    }
    let n = g.n();
    let h = auxiliary_graph(g, a);
    let mm = maximum_matching(&h);
    if 2 * mm.len() == h.n() {
        let edges: EdgeSet = mm
            .edges()
            .iter()
            .filter(|e| e.v() < n)
            .copied()
            .collect();
        let matching = Matching::new(g, edges)?;
        assert!(matching.covers_all(a), "restriction must cover the target");
        return Ok(Saturation::Saturated(matching));
    }

    let missable = missable_vertices(&h, mm.len());
    let anchors_h = anchor_set(&h, &missable);
    let separator: VertexSet = anchors_h.into_iter().filter(|&v| v < n).collect();
    let components: Vec<VertexSet> = g
        .components_avoiding(&separator)
        .into_iter()
        .filter(|c| c.len() % 2 == 1 && c.is_subset(a))
        .collect();
    let witness = DeficiencyWitness {
        separator,
        components,
    };
    assert!(
        witness.components.len() > witness.separator.len(),
        "extracted witness must certify the deficiency"
    );
    Ok(Saturation::Deficient(witness))
}

/// A maximum-cardinality set `S` with more odd components in `G - S`
/// than `|S|`, or `None` when the graph has a perfect matching.
///
/// Up to the configured vertex limit the set is found exhaustively
/// (first maximum-size subset in mask order). Above the limit the set
/// is grown from the structural anchor set by the two certified moves:
/// absorb a vertex of an even component, or absorb a vertex plus a
/// recursive witness of a non-factor-critical odd component. The grown
/// set always satisfies the defining inequality and leaves only
/// factor-critical components, though global maximality is only
/// guaranteed on the exhaustive path.
pub fn maximal_tutte_set(g: &Graph, cfg: &Config) -> Option<VertexSet> {
    if has_perfect_matching(g) {
        return None;
    }
    if g.n() <= cfg.tutte_exhaustive_vertex_limit {
        Some(exhaustive_tutte_set(g))
    } else {
        Some(structural_tutte_set(g))
    }
}

fn odd_component_count(g: &Graph, removed: &VertexSet) -> usize {
    g.components_avoiding(removed)
        .iter()
        .filter(|c| c.len() % 2 == 1)
        .count()
}

fn exhaustive_tutte_set(g: &Graph) -> VertexSet {
    let n = g.n();
    let mut best: Option<VertexSet> = None;
    for mask in 0u64..(1 << n) {
        let s: VertexSet = (0..n).filter(|&v| mask & (1 << v) != 0).collect();
        if best.as_ref().is_some_and(|b| s.len() <= b.len()) {
            continue;
        }
        if odd_component_count(g, &s) > s.len() {
            best = Some(s);
        }
    }
    best.expect("a graph without a perfect matching has a Tutte set")
}

fn structural_tutte_set(g: &Graph) -> VertexSet {
    let alpha_prime = maximum_matching(g).len();
    let missable = missable_vertices(g, alpha_prime);
    let mut s = anchor_set(g, &missable);
    loop {
        let comps = g.components_avoiding(&s);
        let offender = comps.iter().find(|c| {
            let (sub, _) = g.induced_subgraph(c).expect("component vertices");
            c.len() % 2 == 0 || !is_factor_critical(&sub)
        });
        let Some(comp) = offender else {
            assert!(odd_component_count(g, &s) > s.len());
            return s;
        };
        if comp.len() % 2 == 0 {
            // Deleting any vertex of an even component creates at least
            // one odd component, so the inequality survives the growth.
            s.insert(*comp.iter().next().expect("nonempty component"));
        } else {
            let (sub, from_sub) = g.induced_subgraph(comp).expect("component vertices");
            let v = (0..sub.n())
                .find(|&v| {
                    let rest = sub.remove_vertex(v).expect("in range");
                    !has_perfect_matching(&rest)
                })
                .expect("odd non-factor-critical component has such a vertex");
            let rest = sub.remove_vertex(v).expect("in range");
            let inner = structural_tutte_set(&rest);
            s.insert(from_sub[v]);
            for w in inner {
                // Indices in `rest` skip `v` within the component.
                let orig = if w < v { w } else { w + 1 };
                s.insert(from_sub[orig]);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;
    use crate::Config;

    #[test]
    fn saturating_all_of_an_odd_cycle_fails_with_witness() {
        let c5 = generators::cycle(5).unwrap();
        let all: VertexSet = (0..5).collect();
        match saturating_matching(&c5, &all).unwrap() {
            Saturation::Deficient(w) => {
                assert_eq!(w.separator, VertexSet::new());
                assert_eq!(w.components.len(), 1);
                assert_eq!(w.components[0].len(), 5);
                assert!(w.verify(&c5, &all));
            }
            Saturation::Saturated(_) => panic!("C5 has no perfect matching"),
        }
    }

    #[test]
    fn saturating_matchings_found() {
        let c6 = generators::cycle(6).unwrap();
        let all: VertexSet = (0..6).collect();
        match saturating_matching(&c6, &all).unwrap() {
            Saturation::Saturated(m) => {
                assert_eq!(m.len(), 3);
                assert!(m.covers_all(&all));
            }
            Saturation::Deficient(_) => panic!("C6 has a perfect matching"),
        }

        let star = generators::star(3).unwrap();
        let center: VertexSet = VertexSet::from([0]);
        let m = saturating_matching(&star, &center)
            .unwrap()
            .matching()
            .unwrap();
        assert!(m.covers(0));

        let empty = saturating_matching(&star, &VertexSet::new()).unwrap();
        assert!(empty.is_saturated());

        assert!(saturating_matching(&star, &VertexSet::from([9])).is_err());
    }

    #[test]
    fn witness_on_gt_apex() {
        // Two triangles joined to an apex: the apex is the unique
        // maximal Tutte set and the witness separator for saturating
        // everything.
        let mut g = crate::graph::Graph::new(7);
        for (a, b) in [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (6, 0), (6, 3)] {
            g.add_edge(a, b).unwrap();
        }
        let cfg = Config::default();
        let s = maximal_tutte_set(&g, &cfg).unwrap();
        assert_eq!(s, VertexSet::from([6]));
    }

    #[test]
    fn maximal_tutte_set_examples() {
        let cfg = Config::default();
        let c5 = generators::cycle(5).unwrap();
        assert_eq!(maximal_tutte_set(&c5, &cfg), Some(VertexSet::new()));
        let c6 = generators::cycle(6).unwrap();
        assert_eq!(maximal_tutte_set(&c6, &cfg), None);
        let star = generators::star(3).unwrap();
        assert_eq!(maximal_tutte_set(&star, &cfg), Some(VertexSet::from([0])));
    }

    #[test]
    fn structural_path_certifies_on_larger_graphs() {
        // Force the structural path.
        let cfg = Config {
            tutte_exhaustive_vertex_limit: 4,
            ..Config::default()
        };
        for seed in 0..30u64 {
            let g = generators::gen_random_graph(9, 0.3, 900 + seed);
            let Some(s) = maximal_tutte_set(&g, &cfg) else {
                continue;
            };
            assert!(odd_component_count(&g, &s) > s.len());
            for comp in g.components_avoiding(&s) {
                let (sub, _) = g.induced_subgraph(&comp).unwrap();
                assert!(is_factor_critical(&sub));
            }
        }
    }

    #[test]
    fn exhaustive_and_structural_agree_on_lemma_invariants() {
        let cfg = Config::default();
        for seed in 0..50u64 {
            let g = generators::gen_random_graph(8, 0.35, 1700 + seed);
            let Some(s) = maximal_tutte_set(&g, &cfg) else {
                continue;
            };
            assert!(odd_component_count(&g, &s) > s.len());
            for comp in g.components_avoiding(&s) {
                let (sub, _) = g.induced_subgraph(&comp).unwrap();
                assert!(
                    is_factor_critical(&sub),
                    "component {comp:?} of {} not factor critical under S={s:?}",
                    crate::io::to_graph6(&g)
                );
            }
        }
    }
}
