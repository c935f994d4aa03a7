//! Report assembly and rendering: JSON (the stable machine surface),
//! plain text, CSV, and role-annotated DOT export.

use serde::{Deserialize, Serialize};

use crate::ego::{self, BridgeClass, DecompositionMetrics, EgoError, Role};
use crate::graph::Graph;
use crate::mds::{DominationPartition, Fraction, MdsCollection};
use crate::set::VertexSet;

/// Serialized form of the multiplicity index.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultiplicityJson {
    pub num: u64,
    pub den: u64,
    pub rounded: String,
}

impl From<Fraction> for MultiplicityJson {
    fn from(f: Fraction) -> Self {
        MultiplicityJson {
            num: f.num,
            den: f.den,
            rounded: f.rounded(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MdsReportEntry {
    pub members: VertexSet,
    pub independent: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub metrics: Option<DecompositionMetrics>,
}

/// Full analysis of one graph; serializes losslessly to the JSON schema
/// consumed by fixtures and downstream tools.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub n: usize,
    pub edges: usize,
    pub gamma: usize,
    pub always: VertexSet,
    pub possibly: VertexSet,
    pub never: VertexSet,
    pub multiplicity: MultiplicityJson,
    pub mds: Vec<MdsReportEntry>,
}

impl AnalysisReport {
    pub fn build(
        g: &Graph,
        partition: &DominationPartition,
        collection: &MdsCollection,
        with_metrics: bool,
    ) -> Result<AnalysisReport, EgoError> {
        let mut mds = Vec::with_capacity(collection.len());
        for entry in collection.iter() {
            let metrics = if with_metrics {
                Some(ego::metrics(g, &entry.members)?)
            } else {
                None
            };
            mds.push(MdsReportEntry {
                members: entry.members.clone(),
                independent: entry.independent,
                metrics,
            });
        }
        Ok(AnalysisReport {
            n: g.order(),
            edges: g.size(),
            gamma: partition.gamma,
            always: partition.always.clone(),
            possibly: partition.possibly.clone(),
            never: partition.never.clone(),
            multiplicity: partition.multiplicity.into(),
            mds,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

pub const METRIC_COLUMNS: [&str; 7] = [
    "v_private",
    "v_public",
    "ego_degree_sum",
    "e_private",
    "e_public",
    "e_private_public",
    "e_ego",
];

/// Plain-text metrics table, one row per dominating set.
pub fn metrics_table_text(rows: &[(VertexSet, DecompositionMetrics)]) -> String {
    let mut out = String::new();
    let width = rows
        .iter()
        .map(|(s, _)| s.bracketed().len())
        .max()
        .unwrap_or(3)
        .max(3);
    out.push_str(&format!("{:<width$}", "mds"));
    for c in METRIC_COLUMNS {
        out.push_str(&format!("  {c}"));
    }
    out.push('\n');
    for (set, m) in rows {
        out.push_str(&format!("{:<width$}", set.bracketed()));
        for (c, v) in METRIC_COLUMNS.iter().zip(m.as_row()) {
            out.push_str(&format!("  {v:>w$}", w = c.len()));
        }
        out.push('\n');
    }
    out
}

/// CSV rendering with a header row; members are the bracketed list.
pub fn metrics_table_csv(rows: &[(VertexSet, DecompositionMetrics)]) -> String {
    let mut out = String::from("mds,");
    out.push_str(&METRIC_COLUMNS.join(","));
    out.push('\n');
    for (set, m) in rows {
        out.push_str(&format!("\"{}\"", set.bracketed()));
        for v in m.as_row() {
            out.push_str(&format!(",{v}"));
        }
        out.push('\n');
    }
    out
}

fn quote(label: &str) -> String {
    format!("\"{}\"", label.replace('"', "\\\""))
}

/// DOT export in partition mode: vertex attribute
/// `role ∈ {always, possibly, never}`.
pub fn dot_partition(g: &Graph, partition: &DominationPartition) -> String {
    let mut out = String::from("graph {\n");
    for label in g.labels() {
        let role = if partition.always.contains(label) {
            "always"
        } else if partition.possibly.contains(label) {
            "possibly"
        } else {
            "never"
        };
        out.push_str(&format!("  {} [role={role}];\n", quote(label)));
    }
    for (u, v) in g.edge_list() {
        out.push_str(&format!("  {} -- {};\n", quote(u), quote(v)));
    }
    out.push_str("}\n");
    out
}

/// DOT export in decomposition mode: vertex attribute
/// `role ∈ {ego, private, public}` and edge attribute
/// `bridge ∈ {ego, private, public, private_public, ego_alter}`.
pub fn dot_decomposition(g: &Graph, dom: &VertexSet) -> Result<String, EgoError> {
    let vc = ego::classify_vertices(g, dom)?;
    let mut out = String::from("graph {\n");
    for (i, label) in g.labels().iter().enumerate() {
        out.push_str(&format!("  {} [role={}];\n", quote(label), vc.role_idx(i).name()));
    }
    for (u, v) in g.edge_list() {
        let (ui, vi) = (g.index_of(u).unwrap(), g.index_of(v).unwrap());
        let bridge = match (vc.role_idx(ui), vc.role_idx(vi)) {
            (Role::Ego, Role::Ego) => BridgeClass::Ego,
            (Role::Private, Role::Private) => BridgeClass::Private,
            (Role::Public, Role::Public) => BridgeClass::Public,
            (Role::Private, Role::Public) | (Role::Public, Role::Private) => {
                BridgeClass::PrivatePublic
            }
            _ => BridgeClass::EgoAlter,
        };
        out.push_str(&format!(
            "  {} -- {} [bridge={}];\n",
            quote(u),
            quote(v),
            bridge.name()
        ));
    }
    out.push_str("}\n");
    Ok(out)
}
