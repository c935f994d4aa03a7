//! Vertex sets in canonical (natural) label order.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::graph::{natural_cmp, Graph, GraphError};

/// A set of vertex labels kept sorted in natural order, the order all
/// output is emitted in.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet {
    members: Vec<String>,
}

impl VertexSet {
    pub fn new<I, S>(labels: I) -> VertexSet
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut members: Vec<String> = labels.into_iter().map(Into::into).collect();
        members.sort_by(|a, b| natural_cmp(a, b));
        members.dedup();
        VertexSet { members }
    }

    pub fn from_indices(g: &Graph, idx: impl IntoIterator<Item = usize>) -> VertexSet {
        VertexSet::new(idx.into_iter().map(|i| g.label(i).to_string()))
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, label: &str) -> bool {
        self.members
            .binary_search_by(|m| natural_cmp(m, label))
            .is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = &str> {
        self.members.iter().map(String::as_str)
    }

    pub fn members(&self) -> &[String] {
        &self.members
    }

    /// Resolves every member against `g`, failing on unknown labels.
    pub fn indices(&self, g: &Graph) -> Result<Vec<usize>, GraphError> {
        self.members.iter().map(|l| g.resolve(l)).collect()
    }

    /// Comma-separated member list in brackets, e.g. `[3, 8]`.
    pub fn bracketed(&self) -> String {
        format!("[{}]", self.members.join(", "))
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.bracketed())
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        let mut it = self.members.iter().zip(&other.members);
        for (a, b) in &mut it {
            let ord = natural_cmp(a, b);
            if ord != std::cmp::Ordering::Equal {
                return ord;
            }
        }
        self.members.len().cmp(&other.members.len())
    }
}

impl<S: Into<String>> FromIterator<S> for VertexSet {
    fn from_iter<I: IntoIterator<Item = S>>(iter: I) -> Self {
        VertexSet::new(iter)
    }
}
