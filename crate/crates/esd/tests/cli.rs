//! End-to-end checks of the binary: exit codes, determinism, formats.

use std::process::{Command, Output};

fn esd(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_esd"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 output")
}

#[test]
fn report_on_c5_has_es_3() {
    let out = esd(&["report", "--g6", "Dhc"]);
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(json["schema"], 1);
    assert_eq!(json["es"], 3);
    assert_eq!(json["n"], 5);
}

#[test]
fn report_on_gk2_has_es_12() {
    let out = esd(&["report", "--family", "gk:2"]);
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(json["es"], 12);
    assert_eq!(json["n"], 22);
}

#[test]
fn exit_codes() {
    // Parse failure: 2.
    let out = esd(&["report", "--g6", "not graph6 at all"]);
    assert_eq!(out.status.code(), Some(2));
    // Edgeless graph: 3. "B?" is the 3-vertex empty graph.
    let out = esd(&["report", "--g6", "B?"]);
    assert_eq!(out.status.code(), Some(3));
    // Unknown suite: 2.
    let out = esd(&["verify", "--suite", "nonsense"]);
    assert_eq!(out.status.code(), Some(2));
    // Usage error (no input source): 2.
    let out = esd(&["report"]);
    assert_eq!(out.status.code(), Some(2));
    // Invalid family parameters: 2.
    let out = esd(&["generate", "--family", "gt:6"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn byte_identical_reruns() {
    for args in [
        vec!["generate", "--family", "randreg:10,3,42"],
        vec!["generate", "--family", "gk:2", "--with-report"],
        vec!["report", "--family", "petersen"],
        vec!["verify", "--suite", "ratio-lemma", "--count", "10", "--json"],
    ] {
        let a = esd(&args);
        let b = esd(&args);
        assert_eq!(a.status.code(), b.status.code(), "args {args:?}");
        assert_eq!(a.stdout, b.stdout, "args {args:?}");
    }
}

#[test]
fn generate_formats_roundtrip() {
    let g6 = stdout(&esd(&["generate", "--family", "cycle:5"]));
    assert_eq!(g6.trim_end(), "Dhc");
    let edges = stdout(&esd(&["generate", "--family", "cycle:5", "--format", "edges"]));
    assert!(edges.starts_with("5 5\n"));
    assert_eq!(edges.lines().count(), 6);
}

#[test]
fn verify_suite_runs_on_corpus_file() {
    let dir = std::env::temp_dir().join("esd-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("corpus.g6");
    std::fs::write(&path, "# tiny corpus\nDhc\nC~\n").unwrap();
    let out = esd(&[
        "verify",
        "--suite",
        "formula-oracle,p2p3-structure",
        "--corpus",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", stdout(&out));
    let text = stdout(&out);
    assert!(text.contains("suite formula-oracle: 2 checked"));
    assert!(text.contains("2/2 suites passed"));
}

#[test]
fn verify_json_summary() {
    let out = esd(&["verify", "--suite", "ratio-lemma", "--count", "20", "--json"]);
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(json[0]["suite"], "ratio-lemma");
    assert_eq!(json[0]["passed"], true);
    assert_eq!(json[0]["checked"], 20);
}

#[test]
fn report_reads_edge_list_from_stdin_file() {
    let dir = std::env::temp_dir().join("esd-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("p3.txt");
    std::fs::write(&path, "3 2\n0 1\n1 2\n").unwrap();
    let out = esd(&["report", "--input", path.to_str().unwrap()]);
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(json["es"], 1);
    assert_eq!(json["structure"][0], "P2");
}
