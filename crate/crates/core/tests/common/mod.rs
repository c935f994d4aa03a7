//! Shared helpers for the integration suites: seeded random graphs and
//! adjacency-level oracles that stay independent of the library's
//! solver and enumeration code paths.

use std::collections::{BTreeMap, BTreeSet};

use domsets::graph::Graph;
use rand::Rng;

/// Raw labelled edge list plus vertex labels; the ground truth the
/// oracles work from.
pub struct RawGraph {
    pub labels: Vec<String>,
    pub adj: BTreeMap<String, BTreeSet<String>>,
    pub edges: Vec<(String, String)>,
}

impl RawGraph {
    pub fn to_graph(&self) -> Graph {
        Graph::from_edges(self.edges.clone(), &self.labels).unwrap()
    }
}

/// Random simple graph with `n` vertices and edge probability `p`;
/// every isolated vertex gets one random incident edge so the result is
/// isolated-vertex-free.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> RawGraph {
    assert!(n >= 2);
    let labels: Vec<String> = (0..n).map(|i| i.to_string()).collect();
    let mut adj: BTreeMap<String, BTreeSet<String>> =
        labels.iter().map(|l| (l.clone(), BTreeSet::new())).collect();
    let mut edges = Vec::new();
    let add = |adj: &mut BTreeMap<String, BTreeSet<String>>,
               edges: &mut Vec<(String, String)>,
               i: usize,
               j: usize| {
        let (a, b) = (i.to_string(), j.to_string());
        if adj.get_mut(&a).unwrap().insert(b.clone()) {
            adj.get_mut(&b).unwrap().insert(a.clone());
            edges.push((a, b));
        }
    };
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                add(&mut adj, &mut edges, i, j);
            }
        }
    }
    for i in 0..n {
        if adj[&i.to_string()].is_empty() {
            let j = loop {
                let j = rng.gen_range(0..n);
                if j != i {
                    break j;
                }
            };
            add(&mut adj, &mut edges, i, j);
        }
    }
    RawGraph { labels, adj, edges }
}

/// Oracle domination check straight off the raw adjacency.
pub fn oracle_dominates(raw: &RawGraph, set: &BTreeSet<String>) -> bool {
    raw.labels
        .iter()
        .all(|v| set.contains(v) || raw.adj[v].iter().any(|u| set.contains(u)))
}

fn combinations(items: &[String], k: usize) -> Vec<BTreeSet<String>> {
    let mut out = Vec::new();
    let mut pick = Vec::new();
    fn rec(
        items: &[String],
        k: usize,
        start: usize,
        pick: &mut Vec<String>,
        out: &mut Vec<BTreeSet<String>>,
    ) {
        if pick.len() == k {
            out.push(pick.iter().cloned().collect());
            return;
        }
        for i in start..items.len() {
            pick.push(items[i].clone());
            rec(items, k, i + 1, pick, out);
            pick.pop();
        }
    }
    rec(items, k, 0, &mut pick, &mut out);
    out
}

/// Oracle domination number: smallest k admitting a dominating k-subset.
pub fn oracle_gamma(raw: &RawGraph) -> usize {
    for k in 1..=raw.labels.len() {
        if combinations(&raw.labels, k)
            .into_iter()
            .any(|s| oracle_dominates(raw, &s))
        {
            return k;
        }
    }
    unreachable!()
}

/// Oracle enumeration of every minimum dominating set.
pub fn oracle_all_mds(raw: &RawGraph, gamma: usize) -> BTreeSet<BTreeSet<String>> {
    combinations(&raw.labels, gamma)
        .into_iter()
        .filter(|s| oracle_dominates(raw, s))
        .collect()
}
