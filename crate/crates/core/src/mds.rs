//! Always-dominant detection, enumeration of all minimum dominating
//! sets, and the always/possibly/never domination partition.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, GraphError};
use crate::set::VertexSet;
use crate::solver::{self, closed_masks, BitSet, SolverBudget, SolverError};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MdsError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Solver(#[from] SolverError),
    #[error("candidate pool too large: C({pool}, {pick}) exceeds cap {cap}")]
    CandidateCapExceeded { pool: usize, pick: usize, cap: u64 },
    #[error("internal error: {0}")]
    Internal(String),
}

/// Tuning knobs for enumeration. `prune` removes provably redundant
/// candidates before subset generation; disabling it reproduces the
/// plain exhaustive pool (used to test that pruning is sound).
#[derive(Debug, Clone, Copy)]
pub struct EnumOptions {
    pub budget: SolverBudget,
    pub candidate_cap: u64,
    pub prune: bool,
}

impl Default for EnumOptions {
    fn default() -> Self {
        EnumOptions {
            budget: SolverBudget::default(),
            candidate_cap: 100_000_000,
            prune: true,
        }
    }
}

/// One minimum dominating set plus its independence flag.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MdsEntry {
    pub members: VertexSet,
    pub independent: bool,
}

/// All minimum dominating sets of a graph, deduplicated and sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MdsCollection {
    pub gamma: usize,
    pub sets: Vec<MdsEntry>,
}

impl MdsCollection {
    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &MdsEntry> {
        self.sets.iter()
    }

    /// ⋃ 𝒟 — every vertex appearing in some minimum dominating set.
    pub fn union(&self) -> VertexSet {
        VertexSet::new(self.sets.iter().flat_map(|e| e.members.iter().map(String::from)))
    }

    /// ⋂ 𝒟 — vertices in every minimum dominating set.
    pub fn intersection(&self) -> VertexSet {
        let mut it = self.sets.iter();
        let Some(first) = it.next() else {
            return VertexSet::default();
        };
        let mut common: BTreeSet<&str> = first.members.iter().collect();
        for e in it {
            let m: BTreeSet<&str> = e.members.iter().collect();
            common.retain(|x| m.contains(x));
        }
        VertexSet::new(common)
    }

    pub fn position_of(&self, set: &VertexSet) -> Option<usize> {
        self.sets.iter().position(|e| &e.members == set)
    }
}

/// The always / possibly / never partition plus the multiplicity index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominationPartition {
    pub gamma: usize,
    pub always: VertexSet,
    pub possibly: VertexSet,
    pub never: VertexSet,
    pub multiplicity: Fraction,
}

/// Exact rational in lowest terms; `m = 1 − |𝔄|/γ` is always in [0, 1].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fraction {
    pub num: u64,
    pub den: u64,
}

impl Fraction {
    pub fn new(num: u64, den: u64) -> Fraction {
        assert!(den != 0, "zero denominator");
        if num == 0 {
            return Fraction { num: 0, den: 1 };
        }
        let g = gcd(num, den);
        Fraction {
            num: num / g,
            den: den / g,
        }
    }

    pub fn as_f64(&self) -> f64 {
        self.num as f64 / self.den as f64
    }

    /// Fixed 3-decimal rendering with trailing zeros trimmed, matching
    /// the report format ("0.333", "0.5", "1").
    pub fn rounded(&self) -> String {
        let s = format!("{:.3}", self.as_f64());
        let s = s.trim_end_matches('0').trim_end_matches('.');
        s.to_string()
    }
}

impl std::fmt::Display for Fraction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Always dominant vertices: v belongs to every minimum dominating set
/// exactly when the smallest dominating set avoiding v has size > γ (or
/// none exists at all, as for an isolated v). Testing γ(G − v) > γ
/// instead is not equivalent: a γ-sized set can dominate G − v while
/// leaving v itself uncovered. Each subproblem runs independently (and
/// in parallel).
pub fn always_dominant(
    g: &Graph,
    gamma: usize,
    budget: &SolverBudget,
) -> Result<VertexSet, MdsError> {
    let results: Vec<Result<Option<usize>, MdsError>> = (0..g.order())
        .into_par_iter()
        .map(|v| {
            let avoiding = solver::domination_number_avoiding(g, v, budget)?;
            match avoiding {
                Some(size) if size < gamma => Err(MdsError::Internal(format!(
                    "dominating set avoiding {} smaller than gamma = {gamma}",
                    g.label(v)
                ))),
                Some(size) if size == gamma => Ok(None),
                _ => Ok(Some(v)),
            }
        })
        .collect();
    let mut always = Vec::new();
    for r in results {
        if let Some(v) = r? {
            always.push(g.label(v).to_string());
        }
    }
    Ok(VertexSet::new(always))
}

/// Enumerates 𝒟(G): all subsets S ⊆ V ∖ 𝔄 with |S| = γ − |𝔄| such that
/// 𝔄 ∪ S dominates. Candidates with N[v] ⊆ N[𝔄] can never be needed
/// (dropping such a v from a dominating 𝔄 ∪ R still dominates) and are
/// pruned when `opts.prune` is set.
pub fn all_minimum_dominating_sets(
    g: &Graph,
    gamma: usize,
    always: &VertexSet,
    opts: &EnumOptions,
) -> Result<MdsCollection, MdsError> {
    let n = g.order();
    let masks = closed_masks(g);
    let full = BitSet::full(n);
    let always_idx = always.indices(g)?;
    let r = gamma
        .checked_sub(always.len())
        .ok_or_else(|| MdsError::Internal("|always| > gamma".into()))?;

    let mut base = BitSet::empty(n);
    for &v in &always_idx {
        base.union_with(&masks[v]);
    }

    if r == 0 {
        if !base.is_superset(&full) {
            return Err(MdsError::Internal(
                "always-dominant set of size gamma does not dominate".into(),
            ));
        }
        let independent = solver::is_independent(g, always)?;
        return Ok(MdsCollection {
            gamma,
            sets: vec![MdsEntry {
                members: always.clone(),
                independent,
            }],
        });
    }

    let always_set: BTreeSet<usize> = always_idx.into_iter().collect();
    let pool: Vec<usize> = (0..n)
        .filter(|v| !always_set.contains(v))
        .filter(|&v| !opts.prune || !base.is_superset(&masks[v]))
        .collect();

    let candidates = binomial(pool.len(), r);
    if candidates > opts.candidate_cap as u128 {
        return Err(MdsError::CandidateCapExceeded {
            pool: pool.len(),
            pick: r,
            cap: opts.candidate_cap,
        });
    }

    // parallel over the first chosen pool position, serial within
    let found: Vec<Vec<usize>> = (0..pool.len())
        .into_par_iter()
        .flat_map_iter(|first| {
            let mut hits = Vec::new();
            let mut covered = base.clone();
            covered.union_with(&masks[pool[first]]);
            let mut pick = vec![first];
            extend_combinations(&pool, &masks, &full, &covered, first, r - 1, &mut pick, &mut hits);
            hits.into_iter()
        })
        .collect();

    let mut sets: Vec<MdsEntry> = found
        .into_iter()
        .map(|positions| {
            let members = VertexSet::from_indices(
                g,
                positions
                    .iter()
                    .map(|&p| pool[p])
                    .chain(always_set.iter().copied()),
            );
            let independent = solver::is_independent(g, &members).expect("members are valid");
            MdsEntry {
                members,
                independent,
            }
        })
        .collect();
    sets.sort_by(|a, b| a.members.cmp(&b.members));
    sets.dedup();
    Ok(MdsCollection { gamma, sets })
}

#[allow(clippy::too_many_arguments)]
fn extend_combinations(
    pool: &[usize],
    masks: &[BitSet],
    full: &BitSet,
    covered: &BitSet,
    last: usize,
    remaining: usize,
    pick: &mut Vec<usize>,
    hits: &mut Vec<Vec<usize>>,
) {
    if remaining == 0 {
        if covered.is_superset(full) {
            hits.push(pick.clone());
        }
        return;
    }
    for next in last + 1..pool.len() {
        let mut c = covered.clone();
        c.union_with(&masks[pool[next]]);
        pick.push(next);
        extend_combinations(pool, masks, full, &c, next, remaining - 1, pick, hits);
        pick.pop();
    }
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul((n - i) as u128) / (i as u128 + 1);
    }
    acc
}

/// Full domination analysis: γ, 𝔄 (by vertex deletion), 𝒟 (by subset
/// completion), then 𝔓 = ⋃𝒟 ∖ 𝔄 and 𝔑 = V ∖ (𝔄 ∪ 𝔓). When |𝔄| = γ the
/// unique minimum dominating set is 𝔄 itself and enumeration is skipped.
pub fn domination_partition(
    g: &Graph,
    opts: &EnumOptions,
) -> Result<(DominationPartition, MdsCollection), MdsError> {
    let gamma = solver::domination_number(g, &opts.budget)?;
    let always = always_dominant(g, gamma, &opts.budget)?;
    let collection = all_minimum_dominating_sets(g, gamma, &always, opts)?;
    let union = collection.union();
    let possibly = VertexSet::new(
        union
            .iter()
            .filter(|l| !always.contains(l))
            .map(String::from),
    );
    let never = VertexSet::new(
        g.labels()
            .iter()
            .filter(|l| !union.contains(l))
            .cloned(),
    );
    let multiplicity = Fraction::new((gamma - always.len()) as u64, gamma as u64);
    Ok((
        DominationPartition {
            gamma,
            always,
            possibly,
            never,
            multiplicity,
        },
        collection,
    ))
}
