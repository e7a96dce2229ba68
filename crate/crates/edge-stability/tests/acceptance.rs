//! Acceptance gate: one test per shipped guarantee, each printing a
//! single pass/fail line. Run with `--nocapture` to see the lines;
//! `cargo test --test acceptance -- --ignored` adds the deep n=7 sweep.

use num_rational::Ratio;

use edge_stability::bounds::{bound_dense, bound_n_minus_alpha, bound_odd_girth, bound_regular};
use edge_stability::generators;
use edge_stability::graph::Graph;
use edge_stability::io;
use edge_stability::matching::maximum_matching;
use edge_stability::oracle;
use edge_stability::stability::es_delta;
use edge_stability::verify;
use edge_stability::Config;

fn pass(id: u32, name: &str, detail: impl std::fmt::Display) {
    println!("ACCEPTANCE {id} {name}: PASS ({detail})");
}

fn gate(id: u32, name: &str, report: &verify::SuiteReport) {
    assert!(
        report.passed(),
        "ACCEPTANCE {id} {name}: FAIL\n{}",
        report.failures.join("\n")
    );
    pass(
        id,
        name,
        format!("{} checked, {} skipped", report.checked, report.skipped),
    );
}

#[test]
fn criterion_1_formula_oracle_equivalence() {
    let cfg = Config::default();
    let report = verify::suite_formula_oracle(oracle::sweep(6), &cfg);
    assert!(report.checked > 25_000, "sweep must cover all n <= 6");
    gate(1, "formula-oracle n<=6", &report);
}

#[test]
#[ignore = "deep sweep over every connected 7-vertex graph; ~2^21 masks"]
fn criterion_1_formula_oracle_equivalence_deep() {
    let cfg = Config::default();
    let report = verify::suite_formula_oracle(oracle::connected_graphs(7), &cfg);
    assert!(report.checked > 800_000);
    gate(1, "formula-oracle n=7 (deep)", &report);
}

#[test]
fn criterion_2_gk_family_sharpness() {
    for k in 1..=3usize {
        let g = generators::gen_gk(k).unwrap();
        assert!(g.is_connected(), "gk:{k} connected");
        assert!(g.is_regular() && g.max_degree() == 4, "gk:{k} 4-regular");
        assert_eq!(g.n(), 11 * k);
        assert_eq!(maximum_matching(&g).len(), 5 * k, "gk:{k} matching number");
        let es = es_delta(&g).unwrap();
        assert_eq!(es, 6 * k, "gk:{k} stability number");
        assert_eq!(11 * es, 6 * g.n(), "gk:{k} attains es = 6/11 n exactly");
        let entries = bound_regular(&g).unwrap();
        let simple = entries
            .iter()
            .find(|e| e.name == "regular_even4")
            .expect("4-regular graphs get the simple even bound");
        assert!(simple.hypothesis_holds && simple.satisfied && simple.is_tight());
    }
    pass(2, "gk sharpness k=1..3", "alpha'=5k, es=6k, 6/11 n attained");
}

#[test]
fn criterion_3_gt_family_tightness() {
    for t in [7usize, 9] {
        let g = generators::gen_gt(t).unwrap();
        let n = g.n();
        assert_eq!(n, 3 * t + 1);
        assert_eq!(3 * g.max_degree(), n - 4, "gt:{t} has Δ = (n-4)/3");
        let es = es_delta(&g).unwrap();
        assert_eq!(2 * es, 3 * (t + 1), "gt:{t} has es = 3(t+1)/2");
        assert!(2 * es >= n + 2, "gt:{t} exceeds half the order by one");
        // The dense bound's hypothesis misses by design and the bound
        // value is genuinely exceeded.
        let entries = bound_dense(&g).unwrap();
        assert!(!entries[0].hypothesis_holds);
        assert!(!entries[0].satisfied && !entries[0].violated());
    }
    pass(3, "gt tightness t=7,9", "Δ=(n-4)/3 and es = n/2 + 1");
}

#[test]
fn criterion_4_p2p3_structure() {
    let cfg = Config::default();
    let corpus = oracle::sweep(6).chain(verify::random_corpus(500, 40, 42));
    let report = verify::suite_p2p3_structure(corpus, &cfg);
    assert!(report.checked >= 500 + 25_000);
    gate(4, "p2p3-structure", &report);
}

#[test]
fn criterion_5_matching_equivalence() {
    let cfg = Config::default();
    let report = verify::suite_matching_equivalence(oracle::sweep(6), &cfg);
    assert_eq!(report.skipped, 0, "every n<=6 core fits the subset check");
    gate(5, "thm23-equivalence", &report);
}

#[test]
fn criterion_6_regularization() {
    let cfg = Config::default();
    let corpus = verify::regularizable_corpus(200, 7);
    assert_eq!(corpus.len(), 200);
    assert!(corpus.iter().all(|g| !g.is_regular() && g.n() <= 14));
    let report = verify::suite_ratio_lemma(corpus, &cfg);
    gate(6, "regularization+ratio-lemma", &report);
}

#[test]
fn criterion_7_bound_suite() {
    let cfg = Config::default();

    let sweep_report = verify::suite_bounds_all(oracle::sweep(6), &cfg);
    assert!(sweep_report.passed(), "{:?}", sweep_report.failures);

    let regulars = verify::regular_corpus(42);
    assert!(regulars.len() >= 16);
    let regular_report = verify::suite_bounds_all(regulars, &cfg);
    assert!(regular_report.passed(), "{:?}", regular_report.failures);

    // Sharpness witnesses attain their bounds with equality.
    let kbip = generators::complete_bipartite(3, 3).unwrap();
    assert!(bound_n_minus_alpha(&kbip, &cfg).unwrap().is_tight());
    let c5 = generators::cycle(5).unwrap();
    assert!(bound_odd_girth(&c5).unwrap().is_tight());
    let gk = generators::gen_gk(1).unwrap();
    assert!(bound_regular(&gk).unwrap()[1].is_tight());
    let k4 = generators::complete(4).unwrap();
    assert!(bound_dense(&k4).unwrap()[0].is_tight());

    pass(
        7,
        "bounds-all",
        format!(
            "{} sweep + {} regular graphs, sharp at K3,3 / C5 / gk / K4",
            sweep_report.checked, regular_report.checked
        ),
    );
}

#[test]
fn criterion_8_class1_saturation() {
    let cfg = Config::default();
    let corpus = oracle::sweep(6).chain(verify::random_corpus(300, 24, 1234));
    let report = verify::suite_class1_saturation(corpus, &cfg);
    assert!(report.checked > 20_000);
    gate(8, "class1-saturation", &report);
}

#[test]
fn criterion_9_factor_criticality() {
    let cfg = Config::default();
    let corpus = oracle::sweep(6).chain(verify::random_corpus(300, 12, 99));
    let report = verify::suite_factor_critical(corpus, &cfg);
    assert!(report.checked > 1_000, "corpus must include PM-free graphs");
    gate(9, "factor-critical", &report);
}

#[test]
fn criterion_10_graph6_roundtrip() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1010);
    for i in 0..1000 {
        let n = rng.gen_range(1..=32);
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in (u + 1)..n {
                if rng.gen_bool(0.4) {
                    g.add_edge(u, v).unwrap();
                }
            }
        }
        let text = io::to_graph6(&g);
        let back = io::from_graph6(&text)
            .unwrap_or_else(|e| panic!("ACCEPTANCE 10 graph6-roundtrip: FAIL decode {i}: {e}"));
        assert_eq!(back, g, "ACCEPTANCE 10 graph6-roundtrip: FAIL value {i}");
        assert_eq!(
            io::to_graph6(&back),
            text,
            "ACCEPTANCE 10 graph6-roundtrip: FAIL bytes {i}"
        );
    }
    pass(
        10,
        "graph6-roundtrip",
        "1000 random graphs byte-identical (CLI determinism covered in the esd crate)",
    );
}

#[test]
fn exact_rational_bound_arithmetic_spot_checks() {
    // Anchor the closed forms to hand-computed rationals so a silent
    // formula regression cannot hide behind the inequality checks.
    let pet = generators::petersen();
    let regular = bound_regular(&pet).unwrap();
    assert_eq!(regular[0].bound_value, Some(Ratio::new(17, 3)));
    let c6 = generators::cycle(6).unwrap();
    assert_eq!(
        bound_regular(&c6).unwrap()[0].bound_value,
        Some(Ratio::new(7, 2))
    );
    let gk2 = generators::gen_gk(2).unwrap();
    assert_eq!(
        bound_regular(&gk2).unwrap()[1].bound_value,
        Some(Ratio::from_integer(12))
    );
}
