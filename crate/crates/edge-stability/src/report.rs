//! The serializable stability report with a stable field order.

use num_traits::ToPrimitive;
use serde::Serialize;

use crate::bounds::{all_bounds, BoundEntry};
use crate::graph::Graph;
use crate::matching::maximum_matching;
use crate::stability::construct_mitigating_set;
use crate::{Config, Result};

/// All computed invariants for one graph. Serialization preserves this
/// field order, so identical inputs produce byte-identical JSON.
#[derive(Debug, Clone, Serialize)]
pub struct StabilityReport {
    pub schema: u32,
    pub n: usize,
    pub m: usize,
    pub delta: usize,
    pub core_size: usize,
    pub alpha_prime_core: usize,
    pub es: usize,
    pub mitigating_set: Vec<[usize; 2]>,
    pub structure: Vec<String>,
    pub bounds: Vec<BoundRecord>,
}

/// One bound evaluation in report form; the exact rational is rendered
/// as a float for consumption, while `satisfied` was decided exactly.
#[derive(Debug, Clone, Serialize)]
pub struct BoundRecord {
    pub name: String,
    pub hypothesis_holds: bool,
    pub bound_value: Option<f64>,
    pub es_value: usize,
    pub satisfied: bool,
}

impl From<&BoundEntry> for BoundRecord {
    fn from(e: &BoundEntry) -> Self {
        BoundRecord {
            name: e.name.to_string(),
            hypothesis_holds: e.hypothesis_holds,
            bound_value: e.bound_value.map(|r| r.to_f64().expect("small rational")),
            es_value: e.es_value,
            satisfied: e.satisfied,
        }
    }
}

/// Computes the full report. Requires at least one edge.
pub fn stability_report(g: &Graph, cfg: &Config) -> Result<StabilityReport> {
    let core = g.core()?;
    let (core_sub, _) = g.induced_subgraph(&core)?;
    let alpha_prime_core = maximum_matching(&core_sub).len();
    let certificate = construct_mitigating_set(g)?;
    let bounds = all_bounds(g, cfg)?;
    Ok(StabilityReport {
        schema: 1,
        n: g.n(),
        m: g.m(),
        delta: g.max_degree(),
        core_size: core.len(),
        alpha_prime_core,
        es: certificate.claimed_es,
        mitigating_set: certificate
            .edge_set
            .iter()
            .map(|e| [e.u(), e.v()])
            .collect(),
        structure: certificate
            .structure
            .iter()
            .map(|k| k.as_str().to_string())
            .collect(),
        bounds: bounds.iter().map(BoundRecord::from).collect(),
    })
}

impl StabilityReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}
