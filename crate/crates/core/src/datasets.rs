//! The six bundled benchmark networks, stored as edge lists under
//! `data/` and embedded into the binary.

use std::fmt;
use std::str::FromStr;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DatasetId {
    Voyaging,
    Kite,
    Florentine,
    Karate,
    SouthernWomen,
    LesMiserables,
}

pub const ALL_DATASETS: [DatasetId; 6] = [
    DatasetId::Voyaging,
    DatasetId::Kite,
    DatasetId::Florentine,
    DatasetId::Karate,
    DatasetId::SouthernWomen,
    DatasetId::LesMiserables,
];

impl DatasetId {
    pub fn name(self) -> &'static str {
        match self {
            DatasetId::Voyaging => "voyaging",
            DatasetId::Kite => "kite",
            DatasetId::Florentine => "florentine",
            DatasetId::Karate => "karate",
            DatasetId::SouthernWomen => "southern_women",
            DatasetId::LesMiserables => "les_miserables",
        }
    }

    pub fn raw_edge_list(self) -> &'static str {
        match self {
            DatasetId::Voyaging => include_str!("../data/voyaging.edges"),
            DatasetId::Kite => include_str!("../data/kite.edges"),
            DatasetId::Florentine => include_str!("../data/florentine.edges"),
            DatasetId::Karate => include_str!("../data/karate.edges"),
            DatasetId::SouthernWomen => include_str!("../data/southern_women.edges"),
            DatasetId::LesMiserables => include_str!("../data/les_miserables.edges"),
        }
    }
}

impl fmt::Display for DatasetId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for DatasetId {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ALL_DATASETS
            .into_iter()
            .find(|d| d.name() == s)
            .ok_or_else(|| GraphError::UnknownDataset(s.to_string()))
    }
}

/// Loads a bundled dataset. The embedded files are trusted input; a
/// parse failure here is a build defect, not a user error.
pub fn builtin_dataset(id: DatasetId) -> Graph {
    Graph::parse_edge_list(id.raw_edge_list())
        .unwrap_or_else(|e| panic!("bundled dataset {id} is malformed: {e}"))
}
