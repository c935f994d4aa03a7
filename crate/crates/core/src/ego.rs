//! Dominating ego-centered decompositions: vertex roles, edge bridge
//! classes, the seven structural measures, and criteria-based selection
//! among the decompositions of a collection of minimum dominating sets.

use std::collections::BTreeSet;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, GraphError};
use crate::mds::MdsCollection;
use crate::set::VertexSet;
use crate::solver;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EgoError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("set is not dominating")]
    NotDominating,
    #[error("empty collection")]
    EmptyCollection,
    #[error("internal error: identity '{0}' violated; classification is inconsistent")]
    IdentityViolation(&'static str),
}

/// Role of a vertex relative to a dominating set D.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Role {
    Ego,
    Private,
    Public,
}

impl Role {
    pub fn name(self) -> &'static str {
        match self {
            Role::Ego => "ego",
            Role::Private => "private",
            Role::Public => "public",
        }
    }
}

/// D, its private alters and its public alters; a partition of V.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexClassification {
    pub egos: VertexSet,
    pub private_alters: VertexSet,
    pub public_alters: VertexSet,
    roles: Vec<Role>, // by vertex index
}

impl VertexClassification {
    pub fn role_idx(&self, v: usize) -> Role {
        self.roles[v]
    }
}

/// Bridge class of an edge, by the roles of its endpoints.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BridgeClass {
    Ego,
    Private,
    Public,
    PrivatePublic,
    EgoAlter,
}

impl BridgeClass {
    pub fn name(self) -> &'static str {
        match self {
            BridgeClass::Ego => "ego",
            BridgeClass::Private => "private",
            BridgeClass::Public => "public",
            BridgeClass::PrivatePublic => "private_public",
            BridgeClass::EgoAlter => "ego_alter",
        }
    }
}

/// The five-way partition of E induced by vertex roles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgePartition {
    pub ego_edges: Vec<(String, String)>,
    pub private_edges: Vec<(String, String)>,
    pub public_edges: Vec<(String, String)>,
    pub private_public_edges: Vec<(String, String)>,
    pub ego_alter_edges: Vec<(String, String)>,
}

/// The seven table columns of a decomposition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionMetrics {
    pub v_private: usize,
    pub v_public: usize,
    pub ego_degree_sum: usize,
    pub e_private: usize,
    pub e_public: usize,
    pub e_private_public: usize,
    pub e_ego: usize,
}

impl DecompositionMetrics {
    pub fn as_row(&self) -> [usize; 7] {
        [
            self.v_private,
            self.v_public,
            self.ego_degree_sum,
            self.e_private,
            self.e_public,
            self.e_private_public,
            self.e_ego,
        ]
    }
}

/// One ego-centered subgraph G(N[u]).
#[derive(Debug, Clone)]
pub struct EgoNet {
    pub ego: String,
    pub subgraph: Graph,
}

/// Classifies V ∖ D: an alter is private when it is adjacent to exactly
/// one ego u and N(w) ⊆ N[u]; every other alter (shared or with a
/// neighbor escaping its ego's closed neighborhood) is public.
pub fn classify_vertices(g: &Graph, dom: &VertexSet) -> Result<VertexClassification, EgoError> {
    if !solver::is_dominating(g, dom)? {
        return Err(EgoError::NotDominating);
    }
    let d: BTreeSet<usize> = dom.indices(g)?.into_iter().collect();
    let mut roles = Vec::with_capacity(g.order());
    let mut private = Vec::new();
    let mut public = Vec::new();
    for w in 0..g.order() {
        if d.contains(&w) {
            roles.push(Role::Ego);
            continue;
        }
        let egos: Vec<usize> = g
            .neighbors_idx(w)
            .iter()
            .copied()
            .filter(|u| d.contains(u))
            .collect();
        let role = if let [u] = egos.as_slice() {
            let ego_closed = g.closed_idx(*u);
            if g.neighbors_idx(w).iter().all(|x| ego_closed.contains(x)) {
                Role::Private
            } else {
                Role::Public
            }
        } else {
            // shared alters are public by definition
            Role::Public
        };
        roles.push(role);
        match role {
            Role::Private => private.push(g.label(w).to_string()),
            Role::Public => public.push(g.label(w).to_string()),
            Role::Ego => unreachable!(),
        }
    }
    Ok(VertexClassification {
        egos: dom.clone(),
        private_alters: VertexSet::new(private),
        public_alters: VertexSet::new(public),
        roles,
    })
}

fn bridge_of(a: Role, b: Role) -> BridgeClass {
    use Role::*;
    match (a, b) {
        (Ego, Ego) => BridgeClass::Ego,
        (Private, Private) => BridgeClass::Private,
        (Public, Public) => BridgeClass::Public,
        (Private, Public) | (Public, Private) => BridgeClass::PrivatePublic,
        (Ego, _) | (_, Ego) => BridgeClass::EgoAlter,
    }
}

/// Assigns every edge to exactly one bridge class by its endpoint roles.
pub fn classify_edges(g: &Graph, vc: &VertexClassification) -> EdgePartition {
    let mut ep = EdgePartition {
        ego_edges: Vec::new(),
        private_edges: Vec::new(),
        public_edges: Vec::new(),
        private_public_edges: Vec::new(),
        ego_alter_edges: Vec::new(),
    };
    for u in 0..g.order() {
        for &v in g.neighbors_idx(u) {
            if u >= v {
                continue;
            }
            let pair = (g.label(u).to_string(), g.label(v).to_string());
            match bridge_of(vc.role_idx(u), vc.role_idx(v)) {
                BridgeClass::Ego => ep.ego_edges.push(pair),
                BridgeClass::Private => ep.private_edges.push(pair),
                BridgeClass::Public => ep.public_edges.push(pair),
                BridgeClass::PrivatePublic => ep.private_public_edges.push(pair),
                BridgeClass::EgoAlter => ep.ego_alter_edges.push(pair),
            }
        }
    }
    ep
}

/// Computes the seven measures for (G, D) and checks both counting
/// identities before returning. An identity failure means the
/// classification itself is buggy and is reported as an internal error.
pub fn metrics(g: &Graph, dom: &VertexSet) -> Result<DecompositionMetrics, EgoError> {
    let vc = classify_vertices(g, dom)?;
    let ep = classify_edges(g, &vc);
    let ego_degree_sum = dom
        .indices(g)?
        .into_iter()
        .map(|v| g.degree_idx(v))
        .sum::<usize>();
    let m = DecompositionMetrics {
        v_private: vc.private_alters.len(),
        v_public: vc.public_alters.len(),
        ego_degree_sum,
        e_private: ep.private_edges.len(),
        e_public: ep.public_edges.len(),
        e_private_public: ep.private_public_edges.len(),
        e_ego: ep.ego_edges.len(),
    };
    if g.order() - m.v_private - m.v_public != dom.len() {
        return Err(EgoError::IdentityViolation("|V| - v_private - v_public = |D|"));
    }
    if g.size() - m.e_private - m.e_public
        != m.ego_degree_sum - m.e_ego + m.e_private_public
    {
        return Err(EgoError::IdentityViolation(
            "|E| - e_private - e_public = sum_deg - e_ego + e_private_public",
        ));
    }
    Ok(m)
}

/// One ego-net G(N[u]) per ego, in canonical ego order.
pub fn ego_subgraphs(g: &Graph, dom: &VertexSet) -> Result<Vec<EgoNet>, EgoError> {
    if !solver::is_dominating(g, dom)? {
        return Err(EgoError::NotDominating);
    }
    dom.iter()
        .map(|ego| {
            let mut closed = g.neighbors(ego)?;
            closed.push(ego);
            let subgraph = g.induced_subgraph(&closed)?;
            Ok(EgoNet {
                ego: ego.to_string(),
                subgraph,
            })
        })
        .collect()
}

/// G is the disjoint union of its ego-nets iff public alters and all
/// three cross-class bridge kinds are absent.
pub fn is_disjoint_union(vc: &VertexClassification, ep: &EdgePartition) -> bool {
    vc.public_alters.is_empty()
        && ep.ego_edges.is_empty()
        && ep.public_edges.is_empty()
        && ep.private_public_edges.is_empty()
}

/// The five comparison criteria over decompositions, numbered as in the
/// CLI (`--criterion 1..5`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SelectionCriterion {
    EgoDegreeSum,
    EEgo,
    EPrivate,
    EPublic,
    EPrivatePublic,
}

impl SelectionCriterion {
    pub fn extract(self, m: &DecompositionMetrics) -> usize {
        match self {
            SelectionCriterion::EgoDegreeSum => m.ego_degree_sum,
            SelectionCriterion::EEgo => m.e_ego,
            SelectionCriterion::EPrivate => m.e_private,
            SelectionCriterion::EPublic => m.e_public,
            SelectionCriterion::EPrivatePublic => m.e_private_public,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            SelectionCriterion::EgoDegreeSum => "ego_degree_sum",
            SelectionCriterion::EEgo => "e_ego",
            SelectionCriterion::EPrivate => "e_private",
            SelectionCriterion::EPublic => "e_public",
            SelectionCriterion::EPrivatePublic => "e_private_public",
        }
    }
}

impl FromStr for SelectionCriterion {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "1" | "ego_degree_sum" => Ok(SelectionCriterion::EgoDegreeSum),
            "2" | "e_ego" => Ok(SelectionCriterion::EEgo),
            "3" | "e_private" => Ok(SelectionCriterion::EPrivate),
            "4" | "e_public" => Ok(SelectionCriterion::EPublic),
            "5" | "e_private_public" => Ok(SelectionCriterion::EPrivatePublic),
            other => Err(format!("unknown criterion '{other}' (expected 1-5 or a column name)")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Max,
    Min,
}

impl FromStr for Direction {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "max" => Ok(Direction::Max),
            "min" => Ok(Direction::Min),
            other => Err(format!("unknown direction '{other}' (expected max|min)")),
        }
    }
}

/// All minimum dominating sets attaining the optimum of the chosen
/// column, ties preserved, in canonical order. Returns the optimal
/// value alongside the winners.
pub fn select_decomposition(
    g: &Graph,
    collection: &MdsCollection,
    criterion: SelectionCriterion,
    direction: Direction,
) -> Result<(usize, Vec<VertexSet>), EgoError> {
    if collection.is_empty() {
        return Err(EgoError::EmptyCollection);
    }
    let scored: Vec<(usize, &VertexSet)> = collection
        .iter()
        .map(|e| Ok((criterion.extract(&metrics(g, &e.members)?), &e.members)))
        .collect::<Result<_, EgoError>>()?;
    let best = match direction {
        Direction::Max => scored.iter().map(|(v, _)| *v).max(),
        Direction::Min => scored.iter().map(|(v, _)| *v).min(),
    }
    .expect("nonempty");
    let winners = scored
        .into_iter()
        .filter(|(v, _)| *v == best)
        .map(|(_, s)| s.clone())
        .collect();
    Ok((best, winners))
}
