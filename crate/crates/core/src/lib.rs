//! Exact domination analysis for simple undirected graphs: the
//! domination number, the always/possibly/never vertex partition, all
//! minimum dominating sets, and the dominating ego-centered
//! decompositions they induce.

pub mod datasets;
pub mod ego;
pub mod graph;
pub mod mds;
pub mod report;
pub mod set;
pub mod solver;

pub use datasets::{builtin_dataset, DatasetId, ALL_DATASETS};
pub use ego::{
    classify_edges, classify_vertices, ego_subgraphs, is_disjoint_union, metrics,
    select_decomposition, DecompositionMetrics, Direction, EdgePartition, EgoNet,
    SelectionCriterion, VertexClassification,
};
pub use graph::{natural_cmp, Graph, GraphError};
pub use mds::{
    all_minimum_dominating_sets, always_dominant, domination_partition, DominationPartition,
    EnumOptions, Fraction, MdsCollection, MdsEntry,
};
pub use report::AnalysisReport;
pub use set::VertexSet;
pub use solver::{
    brute_force_domination_number, domination_number, enclaves, greedy_upper_bound,
    is_dominating, is_enclaveless, is_independent, is_minimal_dominating,
    is_minimal_dominating_definitional, private_neighbors, SolverBudget, SolverError,
};
