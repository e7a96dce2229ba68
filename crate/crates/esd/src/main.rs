//! `esd`: stability reports, theorem-verification suites, and family
//! generation for simple graphs.
//!
//! Exit codes: 0 success / all checks pass, 1 verification failure,
//! 2 usage or parse error, 3 graph invalid for the requested operation.

use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use edge_stability::generators::FamilySpec;
use edge_stability::graph::Graph;
use edge_stability::io as gio;
use edge_stability::oracle;
use edge_stability::report::stability_report;
use edge_stability::verify;
use edge_stability::{Config, Error};

#[derive(Parser)]
#[command(name = "esd", version, about = "Δ-edge stability toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the stability report for one graph as JSON.
    Report(ReportArgs),
    /// Run verification suites over a corpus and report pass/fail.
    Verify(VerifyArgs),
    /// Emit a generated family graph.
    Generate(GenerateArgs),
}

#[derive(Args)]
struct InputArgs {
    /// Read the graph from a file in graph6 or edge-list form (`-` for stdin).
    #[arg(long, value_name = "PATH", group = "src")]
    input: Option<String>,
    /// Parse the graph from an inline graph6 string.
    #[arg(long, value_name = "STRING", group = "src")]
    g6: Option<String>,
    /// Build the graph from a family spec, e.g. `gk:2` or `randreg:10,3,42`.
    #[arg(long, value_name = "SPEC", group = "src")]
    family: Option<String>,
}

#[derive(Args)]
struct ReportArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Edge limit for the exact coloring decisions.
    #[arg(long, value_name = "N")]
    threshold_exact: Option<usize>,
    /// Suppress everything except the JSON document.
    #[arg(long)]
    quiet: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// Comma-separated suite names, or `all`.
    #[arg(long, value_name = "NAME[,NAME...]", default_value = "all")]
    suite: String,
    /// Run the suites over graph6 lines from this file instead of the
    /// built-in corpora.
    #[arg(long, value_name = "PATH")]
    corpus: Option<String>,
    /// Seed for the built-in random corpora.
    #[arg(long, value_name = "N", default_value_t = 42)]
    seed: u64,
    /// Size of the built-in random corpora.
    #[arg(long, value_name = "N", default_value_t = 200)]
    count: usize,
    /// Extend the built-in sweep to every connected 7-vertex graph.
    #[arg(long)]
    deep: bool,
    /// Edge limit for the exact coloring decisions.
    #[arg(long, value_name = "N")]
    threshold_exact: Option<usize>,
    /// Emit the summary as JSON instead of text lines.
    #[arg(long)]
    json: bool,
    /// Only print the final summary line.
    #[arg(long)]
    quiet: bool,
}

#[derive(Args)]
struct GenerateArgs {
    /// Family spec, e.g. `cycle:5`, `gt:7`, `kbip:3,3`, `petersen`.
    #[arg(long, value_name = "SPEC")]
    family: String,
    /// Output format.
    #[arg(long, value_name = "FMT", default_value = "g6")]
    format: OutputFormat,
    /// Append the stability report to the output.
    #[arg(long)]
    with_report: bool,
}

#[derive(Copy, Clone, PartialEq, Eq, clap::ValueEnum)]
enum OutputFormat {
    G6,
    Edges,
}

const EXIT_VERIFY_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_INVALID_GRAPH: u8 = 3;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Report(args) => cmd_report(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Generate(args) => cmd_generate(args),
    }
}

fn fail(code: u8, message: impl std::fmt::Display) -> ExitCode {
    eprintln!("esd: {message}");
    ExitCode::from(code)
}

fn config_with(threshold_exact: Option<usize>) -> Config {
    let mut cfg = Config::default();
    if let Some(limit) = threshold_exact {
        cfg.exact_coloring_edge_limit = limit;
    }
    cfg
}

fn load_graph(input: &InputArgs, cfg: &Config) -> Result<Graph, (u8, String)> {
    let usage = |m: String| (EXIT_USAGE, m);
    if let Some(path) = &input.input {
        let text = if path == "-" {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| usage(format!("cannot read stdin: {e}")))?;
            buf
        } else {
            std::fs::read_to_string(path).map_err(|e| usage(format!("cannot read {path}: {e}")))?
        };
        gio::parse_auto(&text).map_err(|e| usage(e.to_string()))
    } else if let Some(text) = &input.g6 {
        gio::from_graph6(text).map_err(|e| usage(e.to_string()))
    } else if let Some(spec) = &input.family {
        let spec = FamilySpec::parse(spec).map_err(|e| usage(e.to_string()))?;
        spec.build(cfg).map_err(|e| usage(e.to_string()))
    } else {
        Err(usage("one of --input, --g6, --family is required".into()))
    }
}

fn cmd_report(args: ReportArgs) -> ExitCode {
    let cfg = config_with(args.threshold_exact);
    let graph = match load_graph(&args.input, &cfg) {
        Ok(g) => g,
        Err((code, msg)) => return fail(code, msg),
    };
    match stability_report(&graph, &cfg) {
        Ok(report) => {
            print!("{}", report.to_json());
            ExitCode::SUCCESS
        }
        Err(Error::EdgelessGraph) => fail(
            EXIT_INVALID_GRAPH,
            "the stability number needs at least one edge",
        ),
        Err(e) => fail(EXIT_INVALID_GRAPH, e),
    }
}

fn read_corpus(path: &str) -> Result<Vec<Graph>, String> {
    let text =
        std::fs::read_to_string(path).map_err(|e| format!("cannot read corpus {path}: {e}"))?;
    let mut graphs = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let g = gio::from_graph6(line)
            .map_err(|e| format!("corpus line {}: {e}", lineno + 1))?;
        graphs.push(g);
    }
    Ok(graphs)
}

fn default_corpus(suite: &str, args: &VerifyArgs) -> Vec<Graph> {
    let sweep_max = if args.deep { 7 } else { 6 };
    let sweep = oracle::sweep(sweep_max);
    match suite {
        "formula-oracle" | "thm23-equivalence" => sweep.collect(),
        "p2p3-structure" => sweep
            .chain(verify::random_corpus(args.count.max(500), 40, args.seed))
            .collect(),
        "ratio-lemma" => verify::regularizable_corpus(args.count, args.seed),
        "bounds-all" => sweep.chain(verify::regular_corpus(args.seed)).collect(),
        "class1-saturation" => sweep
            .chain(verify::random_corpus(args.count, 24, args.seed))
            .collect(),
        "factor-critical" => sweep
            .chain(verify::random_corpus(args.count, 12, args.seed))
            .collect(),
        _ => unreachable!("suite names validated before corpus selection"),
    }
}

fn cmd_verify(args: VerifyArgs) -> ExitCode {
    let cfg = config_with(args.threshold_exact);
    let requested: Vec<String> = if args.suite == "all" {
        verify::SUITE_NAMES.iter().map(|s| s.to_string()).collect()
    } else {
        args.suite.split(',').map(|s| s.trim().to_string()).collect()
    };
    for name in &requested {
        if !verify::SUITE_NAMES.contains(&name.as_str()) {
            return fail(
                EXIT_USAGE,
                format!(
                    "unknown suite `{name}` (available: {})",
                    verify::SUITE_NAMES.join(", ")
                ),
            );
        }
    }
    let corpus_file = match &args.corpus {
        Some(path) => match read_corpus(path) {
            Ok(graphs) => Some(graphs),
            Err(msg) => return fail(EXIT_USAGE, msg),
        },
        None => None,
    };

    let mut reports = Vec::new();
    for name in &requested {
        let graphs = match &corpus_file {
            Some(graphs) => graphs.clone(),
            None => default_corpus(name, &args),
        };
        let report = verify::run_suite(name, graphs, &cfg).expect("names validated");
        if !args.json && !args.quiet {
            let verdict = if report.passed() { "PASS" } else { "FAIL" };
            println!(
                "suite {}: {} checked, {} skipped, {} failures ... {}",
                report.name,
                report.checked,
                report.skipped,
                report.failures.len(),
                verdict
            );
            for failure in report.failures.iter().take(10) {
                println!("  {failure}");
            }
            if report.failures.len() > 10 {
                println!("  (+{} more)", report.failures.len() - 10);
            }
        }
        reports.push(report);
    }

    let failed: usize = reports.iter().filter(|r| !r.passed()).count();
    if args.json {
        let value: Vec<serde_json::Value> = reports
            .iter()
            .map(|r| {
                serde_json::json!({
                    "suite": r.name,
                    "checked": r.checked,
                    "skipped": r.skipped,
                    "failures": r.failures,
                    "passed": r.passed(),
                })
            })
            .collect();
        println!(
            "{}",
            serde_json::to_string_pretty(&value).expect("summary serializes")
        );
    } else {
        println!(
            "verify: {}/{} suites passed",
            reports.len() - failed,
            reports.len()
        );
    }
    if failed > 0 {
        ExitCode::from(EXIT_VERIFY_FAILED)
    } else {
        ExitCode::SUCCESS
    }
}

fn cmd_generate(args: GenerateArgs) -> ExitCode {
    let cfg = Config::default();
    let spec = match FamilySpec::parse(&args.family) {
        Ok(s) => s,
        Err(e) => return fail(EXIT_USAGE, e),
    };
    let graph = match spec.build(&cfg) {
        Ok(g) => g,
        Err(e) => return fail(EXIT_USAGE, e),
    };
    match args.format {
        OutputFormat::G6 => println!("{}", gio::to_graph6(&graph)),
        OutputFormat::Edges => print!("{}", gio::to_edge_list(&graph)),
    }
    if args.with_report {
        match stability_report(&graph, &cfg) {
            Ok(report) => print!("{}", report.to_json()),
            Err(Error::EdgelessGraph) => {
                return fail(EXIT_INVALID_GRAPH, "family graph has no edge to report on")
            }
            Err(e) => return fail(EXIT_INVALID_GRAPH, e),
        }
    }
    ExitCode::SUCCESS
}
