//! Exact Δ-edge stability computations for simple graphs.
//!
//! The Δ-edge stability number of a graph is the minimum number of edges
//! whose removal lowers the maximum degree by exactly one. This crate
//! computes it exactly through the core/matching identity
//! `es = |core(G)| - α'(G[core(G)])`, constructs certified minimum
//! mitigating sets whose components are paths of order 2 or 3, decides
//! when a minimum mitigating set can be a matching, evaluates the known
//! order-based upper bounds in exact rational arithmetic, and ships
//! independent brute-force oracles to certify every engine.

pub mod bounds;
pub mod coloring;
pub mod generators;
pub mod graph;
pub mod io;
pub mod matching;
pub mod oracle;
pub mod regularize;
pub mod report;
pub mod stability;
pub mod tutte;
pub mod verify;

pub use graph::{Edge, EdgeSet, Graph, VertexSet};
pub use matching::{has_perfect_matching, is_factor_critical, maximum_matching, Matching};
pub use stability::{es_delta, is_mitigating, MitigatingCertificate};

use thiserror::Error;

/// Errors produced across the crate.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0} is not allowed")]
    SelfLoop(usize),
    #[error("edge {0}-{1} is not present in the graph")]
    MissingEdge(usize, usize),
    #[error("operation requires a graph with at least one edge")]
    EdgelessGraph,
    #[error("vertex sets overlap but must be disjoint")]
    OverlappingSets,
    #[error("graph must be connected")]
    NotConnected,
    #[error("graph must be regular")]
    NotRegular,
    #[error("regular degree {0} is below the minimum {1} required here")]
    DegreeTooSmall(usize, usize),
    #[error("graph is bipartite, which this check excludes")]
    BipartiteInput,
    #[error("graph is already regular")]
    AlreadyRegular,
    #[error("{what} = {actual} exceeds the configured limit {limit}")]
    TooLarge {
        what: &'static str,
        actual: usize,
        limit: usize,
    },
    #[error("invalid family spec: {0}")]
    InvalidFamily(String),
    #[error("random regular sampling gave up after {0} attempts")]
    RetriesExhausted(usize),
    #[error("graph6 parse error: {0}")]
    Graph6(String),
    #[error("edge list parse error: {0}")]
    EdgeList(String),
    #[error("edge set is not a minimum mitigating set")]
    NotMinimumMitigating,
    #[error("matching does not saturate the required vertex set")]
    NotSaturating,
    #[error("edge set is not a matching")]
    NotAMatching,
}

pub type Result<T> = std::result::Result<T, Error>;

/// Size limits for the exact (exponential) decision procedures.
///
/// Every limit is a hard precondition: crossing it yields
/// [`Error::TooLarge`] instead of a silently slow or heuristic answer,
/// except where an operation documents an explicit `Unknown` escape.
#[derive(Debug, Clone)]
pub struct Config {
    /// Edge limit for the exact chromatic-index backtracking.
    pub exact_coloring_edge_limit: usize,
    /// Node budget for the heuristic Δ-colorability attempt above the
    /// exact limit; exhausted budget reports `Unknown`.
    pub coloring_node_budget: u64,
    /// Vertex limit for the exhaustive maximal-Tutte-set search.
    pub tutte_exhaustive_vertex_limit: usize,
    /// Core-size limit for the exhaustive closed-neighborhood condition.
    pub condition3_core_limit: usize,
    /// Edge limit for the brute-force stability oracle.
    pub brute_es_edge_limit: usize,
    /// Vertex limit for the brute-force independence number.
    pub brute_alpha_vertex_limit: usize,
    /// Edge limit for the brute-force matching number.
    pub brute_alpha_prime_edge_limit: usize,
    /// Edge limit for the brute-force chromatic index.
    pub brute_chromatic_edge_limit: usize,
    /// Attempt budget for pairing-model regular graph sampling.
    pub random_regular_retry_limit: usize,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            exact_coloring_edge_limit: 40,
            coloring_node_budget: 2_000_000,
            tutte_exhaustive_vertex_limit: 16,
            condition3_core_limit: 16,
            brute_es_edge_limit: 24,
            brute_alpha_vertex_limit: 20,
            brute_alpha_prime_edge_limit: 24,
            brute_chromatic_edge_limit: 20,
            random_regular_retry_limit: 5000,
        }
    }
}
