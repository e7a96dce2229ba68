//! Per-suite verification runners shared by the CLI and the acceptance
//! tests: each suite checks one family of guarantees over a corpus and
//! reports offending graphs in graph6 form.

use crate::bounds::all_bounds;
use crate::coloring::{core_is_class1, Class1};
use crate::generators::{gen_random_graph, gen_random_regular};
use crate::graph::Graph;
use crate::io::to_graph6;
use crate::matching::is_factor_critical;
use crate::oracle;
use crate::regularize::{check_ratio_lemma, regularize};
use crate::stability::{
    check_condition3, construct_mitigating_set, es_delta, has_matching_minimum_mitigating_set,
    is_mitigating, matchingize_mitigating_set,
};
use crate::tutte::{maximal_tutte_set, saturating_matching, Saturation};
use crate::{Config, Error};

/// Outcome of one suite over one corpus.
#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub name: &'static str,
    pub checked: usize,
    pub skipped: usize,
    pub failures: Vec<String>,
}

impl SuiteReport {
    fn new(name: &'static str) -> Self {
        SuiteReport {
            name,
            checked: 0,
            skipped: 0,
            failures: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn fail(&mut self, g: &Graph, what: impl std::fmt::Display) {
        self.failures.push(format!("{} on {}", what, to_graph6(g)));
    }
}

/// The suites the CLI exposes, with their wire names.
pub const SUITE_NAMES: [&str; 7] = [
    "formula-oracle",
    "p2p3-structure",
    "thm23-equivalence",
    "ratio-lemma",
    "bounds-all",
    "class1-saturation",
    "factor-critical",
];

/// `es_delta` equals the brute-force subset-enumeration oracle.
pub fn suite_formula_oracle<I>(graphs: I, cfg: &Config) -> SuiteReport
where
    I: IntoIterator<Item = Graph>,
{
    let mut report = SuiteReport::new("formula-oracle");
    for g in graphs {
        if g.m() == 0 {
            report.skipped += 1;
            continue;
        }
        match oracle::brute_es(&g, cfg) {
            Err(Error::TooLarge { .. }) => report.skipped += 1,
            Err(e) => report.fail(&g, format!("oracle error {e}")),
            Ok(brute) => {
                report.checked += 1;
                match es_delta(&g) {
                    Ok(es) if es == brute => {}
                    Ok(es) => report.fail(&g, format!("es {es} != oracle {brute}")),
                    Err(e) => report.fail(&g, format!("es error {e}")),
                }
            }
        }
    }
    report
}

/// The constructed mitigating set is minimum, mitigates, and induces
/// only paths of order 2 or 3.
pub fn suite_p2p3_structure<I>(graphs: I, _cfg: &Config) -> SuiteReport
where
    I: IntoIterator<Item = Graph>,
{
    let mut report = SuiteReport::new("p2p3-structure");
    for g in graphs {
        if g.m() == 0 {
            report.skipped += 1;
            continue;
        }
        report.checked += 1;
        match construct_mitigating_set(&g) {
            Err(e) => report.fail(&g, format!("construction error {e}")),
            Ok(cert) => match cert.verify(&g) {
                Ok(true) => {}
                Ok(false) => report.fail(&g, "certificate failed verification"),
                Err(e) => report.fail(&g, format!("verification error {e}")),
            },
        }
    }
    report
}

/// The matching characterization: existence of a core-saturating
/// matching, the closed-neighborhood condition, and the constructive
/// matching transformation all agree.
pub fn suite_matching_equivalence<I>(graphs: I, cfg: &Config) -> SuiteReport
where
    I: IntoIterator<Item = Graph>,
{
    let mut report = SuiteReport::new("thm23-equivalence");
    for g in graphs {
        if g.m() == 0 {
            report.skipped += 1;
            continue;
        }
        let core = g.core().expect("graph has an edge");
        if core.len() > cfg.condition3_core_limit {
            report.skipped += 1;
            continue;
        }
        report.checked += 1;
        let saturable = match has_matching_minimum_mitigating_set(&g) {
            Ok(b) => b,
            Err(e) => {
                report.fail(&g, format!("saturation error {e}"));
                continue;
            }
        };
        match check_condition3(&g, cfg) {
            Ok(cond3) if cond3 == saturable => {}
            Ok(cond3) => {
                report.fail(
                    &g,
                    format!("saturating={saturable} but neighborhood condition={cond3}"),
                );
                continue;
            }
            Err(e) => {
                report.fail(&g, format!("condition error {e}"));
                continue;
            }
        }
        if !saturable {
            continue;
        }
        let cert = match construct_mitigating_set(&g) {
            Ok(c) => c,
            Err(e) => {
                report.fail(&g, format!("construction error {e}"));
                continue;
            }
        };
        let m = match saturating_matching(&g, &core) {
            Ok(Saturation::Saturated(m)) => m,
            other => {
                report.fail(&g, format!("expected saturating matching, got {other:?}"));
                continue;
            }
        };
        match matchingize_mitigating_set(&g, &cert.edge_set, &m) {
            Err(e) => report.fail(&g, format!("matchingize error {e}")),
            Ok(matching) => {
                let ok = matching.len() == cert.claimed_es
                    && is_mitigating(&g, matching.edges()).unwrap_or(false);
                if !ok {
                    report.fail(&g, "matchingized set is not a minimum mitigating matching");
                }
            }
        }
    }
    report
}

/// Regularization invariants: Δ-regular result of the right order, the
/// per-step degree arithmetic, the exact ratio comparison, and (when
/// the oracle can afford it) oracle agreement on the regularized graph.
pub fn suite_ratio_lemma<I>(graphs: I, cfg: &Config) -> SuiteReport
where
    I: IntoIterator<Item = Graph>,
{
    let mut report = SuiteReport::new("ratio-lemma");
    for g in graphs {
        if g.m() == 0 {
            report.skipped += 1;
            continue;
        }
        report.checked += 1;
        let trace = match regularize(&g) {
            Ok(t) => t,
            Err(e) => {
                report.fail(&g, format!("regularize error {e}"));
                continue;
            }
        };
        let spread = g.max_degree() - g.min_degree();
        let r = trace.result();
        if !r.is_regular()
            || r.max_degree() != g.max_degree()
            || r.n() != g.n() << spread
            || trace.steps.len() != spread + 1
        {
            report.fail(&g, "regularization shape violated");
            continue;
        }
        let mut step_ok = true;
        for (i, step) in trace.steps.iter().enumerate() {
            if step.min_degree() != g.min_degree() + i || step.max_degree() != g.max_degree() {
                step_ok = false;
            }
        }
        if !step_ok {
            report.fail(&g, "per-step degree arithmetic violated");
            continue;
        }
        match check_ratio_lemma(&g) {
            Ok(check) if check.holds => {}
            Ok(check) => report.fail(
                &g,
                format!(
                    "ratio {} > {}",
                    check.regularized_ratio, check.original_ratio
                ),
            ),
            Err(e) => report.fail(&g, format!("ratio error {e}")),
        }
        if r.m() <= cfg.brute_es_edge_limit {
            let brute = oracle::brute_es(r, cfg).expect("within limit");
            if es_delta(r).ok() != Some(brute) {
                report.fail(&g, "oracle disagrees on regularized graph");
            }
        }
    }
    report
}

/// No bound entry with a satisfied hypothesis may be violated.
pub fn suite_bounds_all<I>(graphs: I, cfg: &Config) -> SuiteReport
where
    I: IntoIterator<Item = Graph>,
{
    let mut report = SuiteReport::new("bounds-all");
    for g in graphs {
        if g.m() == 0 {
            report.skipped += 1;
            continue;
        }
        report.checked += 1;
        match all_bounds(&g, cfg) {
            Err(e) => report.fail(&g, format!("bound evaluation error {e}")),
            Ok(entries) => {
                for entry in entries {
                    if entry.violated() {
                        report.fail(
                            &g,
                            format!(
                                "{} violated: es={} bound={:?}",
                                entry.name, entry.es_value, entry.bound_value
                            ),
                        );
                    }
                }
            }
        }
    }
    report
}

/// A Δ-colorable core forces a core-saturating matching and the
/// half-order bound.
pub fn suite_class1_saturation<I>(graphs: I, cfg: &Config) -> SuiteReport
where
    I: IntoIterator<Item = Graph>,
{
    let mut report = SuiteReport::new("class1-saturation");
    for g in graphs {
        if g.m() == 0 {
            report.skipped += 1;
            continue;
        }
        match core_is_class1(&g, cfg) {
            Class1::Yes => {}
            Class1::No => {
                report.checked += 1;
                continue;
            }
            Class1::Unknown => {
                report.skipped += 1;
                continue;
            }
        }
        report.checked += 1;
        let core = g.core().expect("graph has an edge");
        match saturating_matching(&g, &core) {
            Ok(Saturation::Saturated(_)) => {}
            _ => {
                report.fail(&g, "class-1 core without a saturating matching");
                continue;
            }
        }
        let es = es_delta(&g).expect("graph has an edge");
        if es > g.n().div_ceil(2) {
            report.fail(&g, format!("es {} exceeds half the order", es));
        }
    }
    report
}

/// Components left by a maximal Tutte set are factor critical.
pub fn suite_factor_critical<I>(graphs: I, cfg: &Config) -> SuiteReport
where
    I: IntoIterator<Item = Graph>,
{
    let mut report = SuiteReport::new("factor-critical");
    for g in graphs {
        let Some(s) = maximal_tutte_set(&g, cfg) else {
            report.skipped += 1;
            continue;
        };
        report.checked += 1;
        for comp in g.components_avoiding(&s) {
            let (sub, _) = g.induced_subgraph(&comp).expect("component vertices");
            if !is_factor_critical(&sub) {
                report.fail(&g, format!("component {comp:?} not factor critical"));
            }
        }
    }
    report
}

/// Runs a suite by its wire name.
pub fn run_suite<I>(name: &str, graphs: I, cfg: &Config) -> Option<SuiteReport>
where
    I: IntoIterator<Item = Graph>,
{
    match name {
        "formula-oracle" => Some(suite_formula_oracle(graphs, cfg)),
        "p2p3-structure" => Some(suite_p2p3_structure(graphs, cfg)),
        "thm23-equivalence" => Some(suite_matching_equivalence(graphs, cfg)),
        "ratio-lemma" => Some(suite_ratio_lemma(graphs, cfg)),
        "bounds-all" => Some(suite_bounds_all(graphs, cfg)),
        "class1-saturation" => Some(suite_class1_saturation(graphs, cfg)),
        "factor-critical" => Some(suite_factor_critical(graphs, cfg)),
        _ => None,
    }
}

/// Seeded mixed-density corpus with at least one edge per graph.
pub fn random_corpus(count: usize, max_n: usize, seed: u64) -> Vec<Graph> {
    let densities = [0.15, 0.3, 0.5, 0.7];
    (0..count)
        .map(|i| {
            let n = 4 + (i % (max_n.saturating_sub(3)));
            let p = densities[i % densities.len()];
            gen_random_graph(n.max(4), p, seed.wrapping_add(i as u64))
        })
        .collect()
}

/// Seeded non-regular graphs with a small degree spread, sized so the
/// full regularization stays desk-scale.
pub fn regularizable_corpus(count: usize, seed: u64) -> Vec<Graph> {
    let mut out = Vec::with_capacity(count);
    let mut salt = 0u64;
    while out.len() < count {
        let i = out.len();
        let n = 4 + (i % 11); // 4..=14
        let p = [0.25, 0.4, 0.55][i % 3];
        let g = gen_random_graph(n, p, seed.wrapping_add(1000 * salt).wrapping_add(i as u64));
        salt += 1;
        if g.is_regular() {
            continue;
        }
        if g.max_degree() - g.min_degree() > 3 {
            continue;
        }
        out.push(g);
    }
    out
}

/// Seeded connected k-regular graphs for the regular-bound checks.
pub fn regular_corpus(seed: u64) -> Vec<Graph> {
    let mut out = Vec::new();
    for k in 2..=5usize {
        for &n in &[8usize, 12, 17, 24, 30] {
            let n = if n * k % 2 == 1 { n + 1 } else { n };
            if k >= n || n > 30 {
                continue;
            }
            let mut attempt = 0u64;
            loop {
                let g = gen_random_regular(n, k, seed + attempt + (k * 100 + n) as u64, 5000)
                    .expect("feasible parameters");
                if g.is_connected() {
                    out.push(g);
                    break;
                }
                attempt += 1;
            }
        }
    }
    out
}
