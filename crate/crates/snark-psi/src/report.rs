//! Schema-versioned JSON documents for census results, snark reports,
//! construction outputs, synthesis traces, and theorem verification. Counts
//! are serialized as decimal strings so consumers never lose precision.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::coloring::Census;
use crate::constructions::EdgeMap;
use crate::graph::{EdgeRef, Graph, VertexId};
use crate::synthesis::{
    CertStatus, ConstructionTrace, SnarkReport, Synthesis, TheoremReport,
};

pub const SCHEMA_VERSION: &str = "1";

fn count(value: u64) -> String {
    value.to_string()
}

fn opt_count(value: Option<u64>) -> Option<String> {
    value.map(|v| v.to_string())
}

#[derive(Debug, Serialize)]
pub struct CensusDoc {
    pub schema_version: &'static str,
    pub kind: &'static str,
    pub graphs: Vec<CensusEntry>,
}

#[derive(Debug, Serialize)]
pub struct CensusEntry {
    pub graph6: String,
    pub vertices: u32,
    pub edges: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub edge: Option<(VertexId, VertexId)>,
    pub colorings: String,
    pub decompositions: Option<String>,
    pub psi: Option<String>,
}

impl CensusDoc {
    pub fn new(entries: Vec<CensusEntry>) -> CensusDoc {
        CensusDoc {
            schema_version: SCHEMA_VERSION,
            kind: "census",
            graphs: entries,
        }
    }
}

impl CensusEntry {
    pub fn new(g: &Graph, edge: Option<(VertexId, VertexId)>, census: &Census) -> CensusEntry {
        CensusEntry {
            graph6: crate::graph6::encode(g),
            vertices: g.vertex_count(),
            edges: g.edge_count(),
            edge,
            colorings: count(census.colorings),
            decompositions: opt_count(census.decompositions),
            psi: opt_count(census.psi),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct ValidateDoc {
    pub schema_version: &'static str,
    pub kind: &'static str,
    pub graphs: Vec<ValidateEntry>,
}

#[derive(Debug, Serialize)]
pub struct ValidateEntry {
    pub graph6: String,
    pub simple: bool,
    pub cubic: bool,
    pub girth: Option<usize>,
    pub colorings: String,
    pub cyclic_connectivity: BTreeMap<String, &'static str>,
    pub is_snark: bool,
}

impl ValidateDoc {
    pub fn new(entries: Vec<ValidateEntry>) -> ValidateDoc {
        ValidateDoc {
            schema_version: SCHEMA_VERSION,
            kind: "validate",
            graphs: entries,
        }
    }
}

fn cert_name(status: CertStatus) -> &'static str {
    match status {
        CertStatus::Pass => "PASS",
        CertStatus::Fail => "FAIL",
        CertStatus::Skipped => "SKIPPED",
    }
}

impl ValidateEntry {
    pub fn new(g: &Graph, report: &SnarkReport) -> ValidateEntry {
        ValidateEntry {
            graph6: crate::graph6::encode(g),
            simple: report.simple,
            cubic: report.cubic,
            girth: report.girth,
            colorings: count(report.colorings),
            cyclic_connectivity: report
                .cyclic
                .iter()
                .map(|(&k, &status)| (k.to_string(), cert_name(status)))
                .collect(),
            is_snark: report.is_snark,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct ConstructDoc {
    pub schema_version: &'static str,
    pub kind: &'static str,
    pub graph6: String,
    pub vertices: u32,
    pub edges: usize,
    pub new_edges: BTreeMap<String, (VertexId, VertexId)>,
    pub edge_map: EdgeMapDoc,
}

#[derive(Debug, Serialize)]
pub struct EdgeMapDoc {
    pub first_edges: Vec<Option<u32>>,
    pub second_edges: Vec<Option<u32>>,
    pub first_vertices: Vec<Option<VertexId>>,
    pub second_vertices: Vec<Option<VertexId>>,
}

impl ConstructDoc {
    pub fn new(kind: &'static str, g: &Graph, map: &EdgeMap) -> ConstructDoc {
        ConstructDoc {
            schema_version: SCHEMA_VERSION,
            kind,
            graph6: crate::graph6::encode(g),
            vertices: g.vertex_count(),
            edges: g.edge_count(),
            new_edges: map
                .named_edges()
                .iter()
                .map(|(name, e)| (name.clone(), e.endpoints))
                .collect(),
            edge_map: EdgeMapDoc {
                first_edges: map.first_edge_ids().iter().map(|o| o.map(|e| e.0)).collect(),
                second_edges: map.second_edge_ids().iter().map(|o| o.map(|e| e.0)).collect(),
                first_vertices: map.first_vertex_ids().to_vec(),
                second_vertices: map.second_vertex_ids().to_vec(),
            },
        }
    }
}

#[derive(Debug, Serialize)]
pub struct SynthesisDoc {
    pub schema_version: &'static str,
    pub kind: &'static str,
    pub target: String,
    pub mode: &'static str,
    pub initial_graph_digest: String,
    pub initial_psi: String,
    pub steps: Vec<SynthesisStepDoc>,
    pub predicted_psi: String,
    pub verified: bool,
    pub brute_force_psi: Option<String>,
    pub graph6: String,
    pub vertices: u32,
    pub tracked_edge: (VertexId, VertexId),
}

#[derive(Debug, Serialize)]
pub struct SynthesisStepDoc {
    pub kind: &'static str,
    pub spec_digest: String,
    pub factor: String,
    pub tracked_before: (VertexId, VertexId),
    pub tracked_after: (VertexId, VertexId),
    pub graph_digest_after: String,
}

impl SynthesisDoc {
    pub fn new(target: &str, mode: &'static str, synthesis: &Synthesis) -> SynthesisDoc {
        let trace: &ConstructionTrace = &synthesis.trace;
        SynthesisDoc {
            schema_version: SCHEMA_VERSION,
            kind: "synthesis",
            target: target.to_string(),
            mode,
            initial_graph_digest: trace.initial_digest.clone(),
            initial_psi: count(trace.initial_psi),
            steps: trace
                .steps
                .iter()
                .map(|s| SynthesisStepDoc {
                    kind: s.kind.as_str(),
                    spec_digest: s.spec_digest.clone(),
                    factor: count(s.factor),
                    tracked_before: s.tracked_before,
                    tracked_after: s.tracked_after,
                    graph_digest_after: s.graph_digest_after.clone(),
                })
                .collect(),
            predicted_psi: count(trace.predicted_psi),
            verified: synthesis.verified_psi.is_some(),
            brute_force_psi: opt_count(synthesis.verified_psi),
            graph6: crate::graph6::encode(&synthesis.graph),
            vertices: synthesis.graph.vertex_count(),
            tracked_edge: synthesis.tracked.endpoints,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct TheoremsDoc {
    pub schema_version: &'static str,
    pub kind: &'static str,
    pub checks: Vec<TheoremCheckDoc>,
    pub all_pass: bool,
}

#[derive(Debug, Serialize)]
pub struct TheoremCheckDoc {
    pub name: String,
    pub instance: String,
    pub lhs: String,
    pub rhs: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub note: String,
}

impl TheoremsDoc {
    pub fn new(report: &TheoremReport) -> TheoremsDoc {
        TheoremsDoc {
            schema_version: SCHEMA_VERSION,
            kind: "theorem-verification",
            checks: report
                .checks
                .iter()
                .map(|c| TheoremCheckDoc {
                    name: c.name.clone(),
                    instance: c.instance.clone(),
                    lhs: count(c.lhs),
                    rhs: count(c.rhs),
                    pass: c.pass,
                    note: c.note.clone(),
                })
                .collect(),
            all_pass: report.all_pass,
        }
    }
}

/// Pretty JSON with a trailing newline; field order is fixed by the struct
/// definitions, so identical inputs yield byte-identical output.
pub fn to_json<T: Serialize>(doc: &T) -> String {
    let mut out = serde_json::to_string_pretty(doc).expect("infallible serialization");
    out.push('\n');
    out
}

/// Helper used by docs that need an edge by name.
pub fn named_endpoints(map: &EdgeMap, name: &str) -> Option<EdgeRef> {
    map.named(name)
}
