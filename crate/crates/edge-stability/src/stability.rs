//! The Δ-edge stability number, certified minimum mitigating sets, and
//! the matching characterization machinery.

use crate::graph::{Edge, EdgeSet, Graph, VertexSet};
use crate::matching::{maximum_matching, Matching};
use crate::tutte::saturating_matching;
use crate::{Config, Error, Result};

/// `es = |core| - α'(G[core])`: the number of edges any minimum
/// mitigating set must have.
pub fn es_delta(g: &Graph) -> Result<usize> {
    let core = g.core()?;
    let (sub, _) = g.induced_subgraph(&core)?;
    Ok(core.len() - maximum_matching(&sub).len())
}

/// True iff removing `s` lowers the maximum degree, checked against the
/// definition (degrees of the reduced graph).
pub fn is_mitigating(g: &Graph, s: &EdgeSet) -> Result<bool> {
    let reduced = g.remove_edges(s)?;
    Ok(reduced.max_degree() < g.max_degree())
}

/// Shape of one component of a mitigating subgraph.
#[derive(Debug, Copy, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum PathKind {
    P2,
    P3,
}

impl PathKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            PathKind::P2 => "P2",
            PathKind::P3 => "P3",
        }
    }
}

/// A minimum mitigating set together with machine-checkable evidence:
/// the maximum matching inside the core, the extension matching that
/// saturates the leftover core vertices, and the path shape of every
/// component of the induced mitigating subgraph.
#[derive(Debug, Clone)]
pub struct MitigatingCertificate {
    pub edge_set: EdgeSet,
    pub claimed_es: usize,
    pub structure: Vec<PathKind>,
    pub core_matching: Matching,
    pub hall_matching: Matching,
}

impl MitigatingCertificate {
    /// Re-checks every invariant: the set mitigates, its size equals
    /// the stability number, it splits into the two matchings, and each
    /// component of the induced subgraph is a path on 2 or 3 vertices.
    pub fn verify(&self, g: &Graph) -> Result<bool> {
        if !is_mitigating(g, &self.edge_set)? {
            return Ok(false);
        }
        if self.edge_set.len() != self.claimed_es || self.claimed_es != es_delta(g)? {
            return Ok(false);
        }
        let union: EdgeSet = self
            .core_matching
            .edges()
            .union(self.hall_matching.edges())
            .copied()
            .collect();
        if union != self.edge_set {
            return Ok(false);
        }
        match components_as_paths(&self.edge_set) {
            Some(kinds) => Ok(kinds == self.structure),
            None => Ok(false),
        }
    }
}

/// Classifies the components of the subgraph induced by an edge set as
/// paths of order 2 or 3, ordered by smallest vertex; `None` when some
/// component is neither.
pub fn components_as_paths(edges: &EdgeSet) -> Option<Vec<PathKind>> {
    // Union-find over the touched vertices.
    let mut parent: std::collections::BTreeMap<usize, usize> = std::collections::BTreeMap::new();
    fn find(parent: &mut std::collections::BTreeMap<usize, usize>, v: usize) -> usize {
        let p = *parent.get(&v).unwrap_or(&v);
        if p == v {
            v
        } else {
            let root = find(parent, p);
            parent.insert(v, root);
            root
        }
    }
    let mut degree: std::collections::BTreeMap<usize, usize> = std::collections::BTreeMap::new();
    for e in edges {
        for v in [e.u(), e.v()] {
            *degree.entry(v).or_insert(0) += 1;
        }
        let (ru, rv) = (find(&mut parent, e.u()), find(&mut parent, e.v()));
        if ru == rv {
            return None; // a cycle, not a path
        }
        parent.insert(ru.max(rv), ru.min(rv));
    }
    let mut comp_edges: std::collections::BTreeMap<usize, usize> =
        std::collections::BTreeMap::new();
    for e in edges {
        let root = find(&mut parent, e.u());
        *comp_edges.entry(root).or_insert(0) += 1;
    }
    if degree.values().any(|&d| d > 2) {
        return None;
    }
    let mut kinds = Vec::new();
    for (_, edge_count) in comp_edges {
        kinds.push(match edge_count {
            1 => PathKind::P2,
            2 => PathKind::P3,
            _ => return None,
        });
    }
    Some(kinds)
}

/// Kuhn-style bipartite augmentation matching each vertex of the
/// independent set `a` to a neighbor outside `a`. Callers guarantee the
/// Hall condition, which holds whenever `a` consists of maximum-degree
/// vertices left unsaturated by a maximum matching of the core.
fn hall_matching_for(g: &Graph, a: &VertexSet) -> Matching {
    let mut matched_to: std::collections::BTreeMap<usize, usize> =
        std::collections::BTreeMap::new();

    fn try_assign(
        g: &Graph,
        a: &VertexSet,
        u: usize,
        visited: &mut VertexSet,
        matched_to: &mut std::collections::BTreeMap<usize, usize>,
    ) -> bool {
        for w in g.neighbors(u) {
            if a.contains(&w) || !visited.insert(w) {
                continue;
            }
            let free = match matched_to.get(&w) {
                None => true,
                Some(&owner) => try_assign(g, a, owner, visited, matched_to),
            };
            if free {
                matched_to.insert(w, u);
                return true;
            }
        }
        false
    }

    for &u in a {
        let mut visited = VertexSet::new();
        let ok = try_assign(g, a, u, &mut visited, &mut matched_to);
        assert!(ok, "full-degree vertices always satisfy the Hall condition");
    }
    let edges: EdgeSet = matched_to
        .iter()
        .map(|(&w, &u)| Edge::new(u, w).expect("distinct endpoints"))
        .collect();
    Matching::new(g, edges).expect("augmentation output is a matching")
}

/// Builds a certified minimum mitigating set: a maximum matching of the
/// core subgraph plus a matching that saturates the unsaturated core
/// vertices. The union always decomposes into paths of order 2 or 3.
pub fn construct_mitigating_set(g: &Graph) -> Result<MitigatingCertificate> {
    let core = g.core()?;
    let (sub, from_sub) = g.induced_subgraph(&core)?;
    let sub_matching = maximum_matching(&sub);
    let core_edges: EdgeSet = sub_matching
        .edges()
        .iter()
        .map(|e| Edge::new(from_sub[e.u()], from_sub[e.v()]).expect("distinct"))
        .collect();
    let core_matching = Matching::new(g, core_edges)?;
    let unsaturated: VertexSet = core
        .iter()
        .copied()
        .filter(|&v| !core_matching.covers(v))
        .collect();
    let hall_matching = hall_matching_for(g, &unsaturated);

    let edge_set: EdgeSet = core_matching
        .edges()
        .union(hall_matching.edges())
        .copied()
        .collect();
    let claimed_es = core.len() - core_matching.len();
    let structure =
        components_as_paths(&edge_set).expect("core matching plus extension is a path forest");
    let certificate = MitigatingCertificate {
        edge_set,
        claimed_es,
        structure,
        core_matching,
        hall_matching,
    };
    assert_eq!(certificate.edge_set.len(), claimed_es);
    assert!(
        is_mitigating(g, &certificate.edge_set)?,
        "constructed set must cover every maximum-degree vertex"
    );
    Ok(certificate)
}

/// Does some minimum mitigating set form a matching? Equivalent to the
/// existence of a matching saturating the core.
pub fn has_matching_minimum_mitigating_set(g: &Graph) -> Result<bool> {
    let core = g.core()?;
    Ok(saturating_matching(g, &core)?.is_saturated())
}

/// Checks the closed-neighborhood condition: for every nonempty subset
/// `S` of the core, the stability number of the subgraph induced by
/// `N[S]` is at most half its order. The empty subset holds vacuously.
pub fn check_condition3(g: &Graph, cfg: &Config) -> Result<bool> {
    let core = g.core()?;
    if core.len() > cfg.condition3_core_limit {
        return Err(Error::TooLarge {
            what: "core",
            actual: core.len(),
            limit: cfg.condition3_core_limit,
        });
    }
    let core_vec: Vec<usize> = core.iter().copied().collect();
    assert!(core_vec.len() < 63, "subset masks are 64-bit");
    for mask in 1u64..(1 << core_vec.len()) {
        let mut closed = VertexSet::new();
        for (b, &v) in core_vec.iter().enumerate() {
            if mask & (1 << b) != 0 {
                closed.insert(v);
                closed.extend(g.neighbors(v));
            }
        }
        let (sub, _) = g.induced_subgraph(&closed)?;
        let es_sub = es_delta(&sub)?;
        if 2 * es_sub > sub.n() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Transforms a minimum mitigating set into one that is a matching,
/// given a matching `m` that saturates the core. Peels non-`m` edges
/// recursively; a peeled edge that re-enters with an adjacency conflict
/// is traded for the `m`-edge at its uncovered full-degree endpoint,
/// and the trade is chained through `m` until the conflict dies out.
/// The output is re-validated before being returned.
pub fn matchingize_mitigating_set(g: &Graph, l: &EdgeSet, m: &Matching) -> Result<Matching> {
    let es = es_delta(g)?;
    if l.len() != es || !is_mitigating(g, l)? {
        return Err(Error::NotMinimumMitigating);
    }
    let core = g.core()?;
    if !m.covers_all(&core) {
        return Err(Error::NotSaturating);
    }
    for e in m.edges() {
        if !g.contains(e) {
            return Err(Error::MissingEdge(e.u(), e.v()));
        }
    }

    let result = matchingize_inner(g.clone(), l.clone(), m);

    let matching = Matching::new(g, result).map_err(|_| Error::NotAMatching)?;
    assert_eq!(matching.len(), es, "transformation must preserve the size");
    assert!(
        is_mitigating(g, matching.edges())?,
        "transformation must preserve the mitigating property"
    );
    Ok(matching)
}

fn matchingize_inner(g: Graph, l: EdgeSet, m: &Matching) -> EdgeSet {
    if l.len() <= 1 || l.iter().all(|e| m.contains(e)) {
        return l;
    }
    let peeled = *l
        .iter()
        .find(|e| !m.contains(e))
        .expect("some edge is outside m");
    let mut rest = l;
    rest.remove(&peeled);
    let reduced = g
        .remove_edges(&EdgeSet::from([peeled]))
        .expect("peeled edge is present");
    let matched = matchingize_inner(reduced, rest, m);

    let conflicts: Vec<Edge> = matched
        .iter()
        .filter(|e| e.adjacent(&peeled))
        .copied()
        .collect();
    if conflicts.is_empty() {
        let mut out = matched;
        out.insert(peeled);
        return out;
    }
    // Minimality forces a single conflict; the shared endpoint is
    // already covered, the other endpoint has full degree and gets its
    // m-edge instead.
    assert_eq!(conflicts.len(), 1, "minimum sets admit one conflict only");
    let conflict = conflicts[0];
    let covered = if conflict.touches(peeled.u()) {
        peeled.u()
    } else {
        peeled.v()
    };
    let delta = g.max_degree();
    let mut needs_cover = peeled.other(covered);
    let mut out = matched;
    for _ in 0..=g.n() {
        assert_eq!(
            g.degree(needs_cover).expect("vertex in range"),
            delta,
            "only full-degree endpoints demand replacement edges"
        );
        let replacement = m
            .edge_at(needs_cover)
            .expect("m saturates every full-degree vertex");
        let far_end = replacement.other(needs_cover);
        out.insert(replacement);
        let clash = out
            .iter()
            .filter(|e| **e != replacement && e.touches(far_end))
            .copied()
            .collect::<Vec<_>>();
        match clash.as_slice() {
            [] => return out,
            [edge] => {
                out.remove(edge);
                needs_cover = edge.other(far_end);
            }
            _ => unreachable!("the working set stays a near-matching"),
        }
    }
    unreachable!("replacement chain visits distinct vertices and must stop");
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;
    use crate::oracle;
    use crate::Config;

    #[test]
    fn es_values_on_named_graphs() {
        assert_eq!(es_delta(&generators::path(3).unwrap()).unwrap(), 1);
        assert_eq!(es_delta(&generators::cycle(5).unwrap()).unwrap(), 3);
        assert_eq!(es_delta(&generators::complete(4).unwrap()).unwrap(), 2);
        assert_eq!(es_delta(&generators::petersen()).unwrap(), 5);
        assert_eq!(es_delta(&generators::gen_gk(2).unwrap()).unwrap(), 12);
        assert_eq!(es_delta(&Graph::new(3)), Err(Error::EdgelessGraph));
    }

    #[test]
    fn mitigating_checks() {
        let k4 = generators::complete(4).unwrap();
        let pm = EdgeSet::from([Edge::new(0, 1).unwrap(), Edge::new(2, 3).unwrap()]);
        assert!(is_mitigating(&k4, &pm).unwrap());
        let single = EdgeSet::from([Edge::new(0, 1).unwrap()]);
        assert!(!is_mitigating(&k4, &single).unwrap());

        let c5 = generators::cycle(5).unwrap();
        let two = EdgeSet::from([Edge::new(0, 1).unwrap(), Edge::new(2, 3).unwrap()]);
        assert!(!is_mitigating(&c5, &two).unwrap());
        let bad = EdgeSet::from([Edge::new(0, 2).unwrap()]);
        assert!(is_mitigating(&c5, &bad).is_err());
    }

    #[test]
    fn certificate_on_small_graphs() {
        let p3 = generators::path(3).unwrap();
        let cert = construct_mitigating_set(&p3).unwrap();
        assert_eq!(cert.claimed_es, 1);
        assert_eq!(cert.structure, vec![PathKind::P2]);
        assert!(cert.verify(&p3).unwrap());

        let c5 = generators::cycle(5).unwrap();
        let cert = construct_mitigating_set(&c5).unwrap();
        assert_eq!(cert.claimed_es, 3);
        let mut kinds = cert.structure.clone();
        kinds.sort();
        assert_eq!(kinds, vec![PathKind::P2, PathKind::P3]);
        assert!(cert.verify(&c5).unwrap());

        let gk = generators::gen_gk(1).unwrap();
        let cert = construct_mitigating_set(&gk).unwrap();
        assert_eq!(cert.claimed_es, 6);
        assert!(cert.verify(&gk).unwrap());
    }

    #[test]
    fn matching_existence_equivalence_examples() {
        assert!(has_matching_minimum_mitigating_set(&generators::cycle(6).unwrap()).unwrap());
        assert!(!has_matching_minimum_mitigating_set(&generators::cycle(5).unwrap()).unwrap());
        assert!(has_matching_minimum_mitigating_set(&generators::star(3).unwrap()).unwrap());
        assert!(!has_matching_minimum_mitigating_set(&generators::gen_gt(7).unwrap()).unwrap());
    }

    #[test]
    fn condition3_examples() {
        let cfg = Config::default();
        assert!(check_condition3(&generators::cycle(6).unwrap(), &cfg).unwrap());
        assert!(!check_condition3(&generators::cycle(5).unwrap(), &cfg).unwrap());
        assert!(check_condition3(&generators::complete(4).unwrap(), &cfg).unwrap());
    }

    #[test]
    fn matchingize_cases() {
        let c6 = generators::cycle(6).unwrap();
        let m = Matching::new(
            &c6,
            EdgeSet::from([
                Edge::new(0, 1).unwrap(),
                Edge::new(2, 3).unwrap(),
                Edge::new(4, 5).unwrap(),
            ]),
        )
        .unwrap();
        // Already a matching: unchanged.
        let l = m.edges().clone();
        let out = matchingize_mitigating_set(&c6, &l, &m).unwrap();
        assert_eq!(out.edges(), &l);

        // On P5 the middle path {12, 23} is a minimum mitigating set
        // with an adjacency conflict; the procedure trades through m.
        let p5 = generators::path(5).unwrap();
        let l_p5 = EdgeSet::from([Edge::new(1, 2).unwrap(), Edge::new(2, 3).unwrap()]);
        assert!(is_mitigating(&p5, &l_p5).unwrap());
        let m_p5 = Matching::new(
            &p5,
            EdgeSet::from([Edge::new(0, 1).unwrap(), Edge::new(2, 3).unwrap()]),
        )
        .unwrap();
        let out = matchingize_mitigating_set(&p5, &l_p5, &m_p5).unwrap();
        assert_eq!(out.len(), 2);
        assert!(is_mitigating(&p5, out.edges()).unwrap());

        let k4 = generators::complete(4).unwrap();
        let pm = Matching::new(
            &k4,
            EdgeSet::from([Edge::new(0, 1).unwrap(), Edge::new(2, 3).unwrap()]),
        )
        .unwrap();
        let out = matchingize_mitigating_set(&k4, &pm.edges().clone(), &pm).unwrap();
        assert_eq!(out.edges(), pm.edges());

        // Precondition violations are reported.
        let undersized = EdgeSet::from([Edge::new(0, 1).unwrap()]);
        assert_eq!(
            matchingize_mitigating_set(&c6, &undersized, &m),
            Err(Error::NotMinimumMitigating)
        );
        let not_saturating = Matching::new(&c6, EdgeSet::from([Edge::new(0, 1).unwrap()])).unwrap();
        assert_eq!(
            matchingize_mitigating_set(&c6, m.edges(), &not_saturating),
            Err(Error::NotSaturating)
        );
    }

    #[test]
    fn es_matches_oracle_up_to_5() {
        let cfg = Config::default();
        for g in oracle::sweep(5) {
            assert_eq!(
                es_delta(&g).unwrap(),
                oracle::brute_es(&g, &cfg).unwrap(),
                "es mismatch on {}",
                crate::io::to_graph6(&g)
            );
        }
    }
}
