//! The doubling-with-matching regularization and its ratio invariant.

use num_rational::Ratio;

use crate::graph::{Edge, EdgeSet, Graph};
use crate::stability::es_delta;
use crate::{Error, Result};

pub type Rational = Ratio<i64>;

/// The full regularization history: `steps[0]` is the input graph,
/// each later step doubles the previous one with a cross matching on
/// its non-maximum-degree vertices, and the last step is Δ-regular.
#[derive(Debug, Clone)]
pub struct RegularizationTrace {
    pub steps: Vec<Graph>,
    pub matchings_added: Vec<EdgeSet>,
}

impl RegularizationTrace {
    pub fn result(&self) -> &Graph {
        self.steps.last().expect("trace holds at least the input")
    }

    /// Serializes the trace: per step a `# step i, delta=Δ, deltamin=δ`
    /// comment followed by the graph6 line.
    pub fn to_graph6_document(&self) -> String {
        let mut out = String::new();
        for (i, g) in self.steps.iter().enumerate() {
            out.push_str(&format!(
                "# step {}, delta={}, deltamin={}\n{}\n",
                i,
                g.max_degree(),
                g.min_degree(),
                crate::io::to_graph6(g)
            ));
        }
        out
    }
}

/// One doubling step: two copies of `g` (vertex `v` maps to `v` and
/// `v + n`) plus the matching `{(v, v+n) : d(v) < Δ}`. Keeps Δ and
/// raises the minimum degree by exactly one.
pub fn regularize_step(g: &Graph) -> Result<Graph> {
    if g.is_regular() {
        return Err(Error::AlreadyRegular);
    }
    Ok(double_with_matching(g).0)
}

fn double_with_matching(g: &Graph) -> (Graph, EdgeSet) {
    let n = g.n();
    let delta = g.max_degree();
    let mut out = Graph::new(2 * n);
    for e in g.edges() {
        out.add_edge(e.u(), e.v()).expect("copy edge");
        out.add_edge(e.u() + n, e.v() + n).expect("copy edge");
    }
    let mut cross = EdgeSet::new();
    for v in 0..n {
        if g.degree(v).expect("in range") < delta {
            out.add_edge(v, v + n).expect("cross edge");
            cross.insert(Edge::new(v, v + n).expect("distinct"));
        }
    }
    assert_eq!(out.max_degree(), delta, "doubling must preserve Δ");
    assert_eq!(
        out.min_degree(),
        g.min_degree() + 1,
        "doubling must raise δ by exactly one"
    );
    (out, cross)
}

/// Iterates the doubling step until the graph is Δ-regular. A regular
/// input yields the one-step trace containing only the input.
pub fn regularize(g: &Graph) -> Result<RegularizationTrace> {
    if g.m() == 0 {
        return Err(Error::EdgelessGraph);
    }
    let spread = g.max_degree() - g.min_degree();
    let mut trace = RegularizationTrace {
        steps: vec![g.clone()],
        matchings_added: Vec::new(),
    };
    while !trace.result().is_regular() {
        let (next, cross) = double_with_matching(trace.result());
        trace.steps.push(next);
        trace.matchings_added.push(cross);
    }
    assert_eq!(trace.steps.len(), spread + 1);
    let result = trace.result();
    assert!(result.is_regular());
    assert_eq!(result.n(), g.n() << spread);
    Ok(trace)
}

/// Both sides of the ratio comparison `|V(R)|/es(R) <= |V(G)|/es(G)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatioCheck {
    pub holds: bool,
    pub regularized_ratio: Rational,
    pub original_ratio: Rational,
}

/// Evaluates the ratio comparison in exact rationals.
pub fn check_ratio_lemma(g: &Graph) -> Result<RatioCheck> {
    let es_g = es_delta(g)?;
    let trace = regularize(g)?;
    let r = trace.result();
    let es_r = es_delta(r)?;
    let regularized_ratio = Rational::new(r.n() as i64, es_r as i64);
    let original_ratio = Rational::new(g.n() as i64, es_g as i64);
    Ok(RatioCheck {
        holds: regularized_ratio <= original_ratio,
        regularized_ratio,
        original_ratio,
    })
}

/// Verifies that no step of the trace shortens the odd girth below the
/// input's. Requires a non-bipartite input.
pub fn check_odd_girth_preserved(g: &Graph) -> Result<bool> {
    let Some(og) = g.odd_girth() else {
        return Err(Error::BipartiteInput);
    };
    let trace = regularize(g)?;
    Ok(trace
        .steps
        .iter()
        .all(|step| step.odd_girth().is_some_and(|o| o >= og)))
}
