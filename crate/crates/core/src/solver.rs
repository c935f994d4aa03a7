//! Exact domination: predicates, a brute-force oracle, and a
//! branch-and-bound solver for the domination number.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::graph::{Graph, GraphError};
use crate::set::VertexSet;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SolverError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("search budget exceeded ({0} nodes)")]
    BudgetExceeded(u64),
    #[error("graph too large for brute force ({n} > {limit} vertices)")]
    TooLarge { n: usize, limit: usize },
    #[error("vertex '{0}' is not a member of the candidate set")]
    NotInSet(String),
    #[error("set is not dominating")]
    NotDominating,
}

/// Resource limits for the exact solvers. `max_nodes == 0` means
/// unlimited.
#[derive(Debug, Clone, Copy)]
pub struct SolverBudget {
    pub max_nodes: u64,
    pub brute_force_limit: usize,
}

impl Default for SolverBudget {
    fn default() -> Self {
        SolverBudget {
            max_nodes: 0,
            brute_force_limit: 24,
        }
    }
}

/// Growable bitset over vertex indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct BitSet {
    words: Vec<u64>,
}

impl BitSet {
    pub fn empty(n: usize) -> BitSet {
        BitSet {
            words: vec![0; n.div_ceil(64)],
        }
    }

    pub fn full(n: usize) -> BitSet {
        let mut s = BitSet::empty(n);
        for i in 0..n {
            s.insert(i);
        }
        s
    }

    pub fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn contains(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn union_with(&mut self, other: &BitSet) {
        for (w, o) in self.words.iter_mut().zip(&other.words) {
            *w |= o;
        }
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// |other ∖ self|
    pub fn count_missing(&self, other: &BitSet) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(w, o)| (o & !w).count_ones() as usize)
            .sum()
    }

    pub fn is_superset(&self, other: &BitSet) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(w, o)| o & !w == 0)
    }
}

/// Closed-neighborhood masks for all vertices of `g`.
pub(crate) fn closed_masks(g: &Graph) -> Vec<BitSet> {
    let n = g.order();
    (0..n)
        .map(|v| {
            let mut m = BitSet::empty(n);
            m.insert(v);
            for &u in g.neighbors_idx(v) {
                m.insert(u);
            }
            m
        })
        .collect()
}

/// N[D] = V, i.e. every vertex is in D or adjacent to it.
pub fn is_dominating(g: &Graph, set: &VertexSet) -> Result<bool, GraphError> {
    let idx = set.indices(g)?;
    let mut covered = BitSet::empty(g.order());
    for v in idx {
        covered.insert(v);
        for &u in g.neighbors_idx(v) {
            covered.insert(u);
        }
    }
    Ok(covered.count() == g.order())
}

/// No edge of G has both endpoints in `set`.
pub fn is_independent(g: &Graph, set: &VertexSet) -> Result<bool, GraphError> {
    let idx: BTreeSet<usize> = set.indices(g)?.into_iter().collect();
    for &v in &idx {
        if g.neighbors_idx(v).iter().any(|u| idx.contains(u)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Private neighbors of u with respect to D: vertices outside D whose
/// only dominator in D is u.
pub fn private_neighbors(
    g: &Graph,
    dom: &VertexSet,
    u: &str,
) -> Result<VertexSet, SolverError> {
    let d: BTreeSet<usize> = dom.indices(g)?.into_iter().collect();
    let ui = g.resolve(u)?;
    if !d.contains(&ui) {
        return Err(SolverError::NotInSet(u.to_string()));
    }
    let mut out = Vec::new();
    for v in 0..g.order() {
        if d.contains(&v) {
            continue;
        }
        let dominators: Vec<usize> = g
            .closed_idx(v)
            .into_iter()
            .filter(|x| d.contains(x))
            .collect();
        if dominators == [ui] {
            out.push(g.label(v).to_string());
        }
    }
    Ok(VertexSet::new(out))
}

/// Enclaves of D: members whose entire closed neighborhood lies in D.
pub fn enclaves(g: &Graph, set: &VertexSet) -> Result<VertexSet, GraphError> {
    let d: BTreeSet<usize> = set.indices(g)?.into_iter().collect();
    let out: Vec<String> = d
        .iter()
        .filter(|&&v| g.closed_idx(v).iter().all(|x| d.contains(x)))
        .map(|&v| g.label(v).to_string())
        .collect();
    Ok(VertexSet::new(out))
}

pub fn is_enclaveless(g: &Graph, set: &VertexSet) -> Result<bool, GraphError> {
    Ok(enclaves(g, set)?.is_empty())
}

/// Ore's characterization of minimality: every member is an isolate of D
/// or has a private neighbor.
pub fn is_minimal_dominating(g: &Graph, dom: &VertexSet) -> Result<bool, SolverError> {
    if !is_dominating(g, dom)? {
        return Err(SolverError::NotDominating);
    }
    let d: BTreeSet<usize> = dom.indices(g)?.into_iter().collect();
    for &u in &d {
        let isolate = g.neighbors_idx(u).iter().all(|v| !d.contains(v));
        if isolate {
            continue;
        }
        if private_neighbors(g, dom, g.label(u))?.is_empty() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Definitional minimality check: no proper subset of D dominates.
/// Kept as the oracle for [`is_minimal_dominating`]; it is enough to
/// drop one vertex at a time.
pub fn is_minimal_dominating_definitional(
    g: &Graph,
    dom: &VertexSet,
) -> Result<bool, SolverError> {
    if !is_dominating(g, dom)? {
        return Err(SolverError::NotDominating);
    }
    for drop in dom.iter() {
        let smaller = VertexSet::new(dom.iter().filter(|&l| l != drop));
        if is_dominating(g, &smaller)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Greedy dominating set: repeatedly take the vertex covering the most
/// undominated vertices, ties broken by canonical label order. Its size
/// is an upper bound for γ(G).
pub fn greedy_upper_bound(g: &Graph) -> VertexSet {
    let n = g.order();
    let masks = closed_masks(g);
    let mut covered = BitSet::empty(n);
    let mut chosen = Vec::new();
    while covered.count() < n {
        let best = (0..n)
            .max_by_key(|&v| (covered.count_missing(&masks[v]), std::cmp::Reverse(v)))
            .expect("nonempty graph with undominated vertices");
        chosen.push(best);
        covered.union_with(&masks[best]);
    }
    VertexSet::from_indices(g, chosen)
}

/// Exhaustive oracle: tries all subsets by increasing cardinality.
pub fn brute_force_domination_number(
    g: &Graph,
    budget: &SolverBudget,
) -> Result<usize, SolverError> {
    let n = g.order();
    if n > budget.brute_force_limit {
        return Err(SolverError::TooLarge {
            n,
            limit: budget.brute_force_limit,
        });
    }
    if n == 0 {
        return Ok(0);
    }
    let masks = closed_masks(g);
    let full = BitSet::full(n);
    for k in 1..=n {
        let mut pick = vec![0usize; k];
        if try_size(&masks, &full, &mut pick, 0, 0, n) {
            return Ok(k);
        }
    }
    unreachable!("the full vertex set always dominates")
}

fn try_size(
    masks: &[BitSet],
    full: &BitSet,
    pick: &mut [usize],
    depth: usize,
    start: usize,
    n: usize,
) -> bool {
    if depth == pick.len() {
        let mut covered = BitSet::empty(n);
        for &v in pick.iter() {
            covered.union_with(&masks[v]);
        }
        return covered == *full;
    }
    for v in start..n {
        pick[depth] = v;
        if try_size(masks, full, pick, depth + 1, v + 1, n) {
            return true;
        }
    }
    false
}

/// Exact domination number by branch-and-bound, solved per connected
/// component (γ is additive over components).
pub fn domination_number(g: &Graph, budget: &SolverBudget) -> Result<usize, SolverError> {
    let mut total = 0;
    let mut nodes_left = if budget.max_nodes == 0 {
        u64::MAX
    } else {
        budget.max_nodes
    };
    for comp in g.components_idx() {
        total += solve_component(g, &comp, None, &mut nodes_left, budget.max_nodes)?
            .expect("unconstrained component is always dominatable");
    }
    Ok(total)
}

/// Size of a smallest dominating set that does not contain `avoid`.
/// Returns `None` when no such set exists, i.e. `avoid` is isolated.
pub(crate) fn domination_number_avoiding(
    g: &Graph,
    avoid: usize,
    budget: &SolverBudget,
) -> Result<Option<usize>, SolverError> {
    let mut total = 0;
    let mut nodes_left = if budget.max_nodes == 0 {
        u64::MAX
    } else {
        budget.max_nodes
    };
    for comp in g.components_idx() {
        let forbidden = comp.contains(&avoid).then_some(avoid);
        match solve_component(g, &comp, forbidden, &mut nodes_left, budget.max_nodes)? {
            Some(size) => total += size,
            None => return Ok(None),
        }
    }
    Ok(Some(total))
}

fn solve_component(
    g: &Graph,
    comp: &[usize],
    forbidden: Option<usize>,
    nodes_left: &mut u64,
    max_nodes: u64,
) -> Result<Option<usize>, SolverError> {
    let k = comp.len();
    if k == 1 {
        // an isolated vertex dominates only itself, so forbidding it
        // makes the component undominatable
        return Ok(if forbidden.is_some() { None } else { Some(1) });
    }
    // re-index the component to 0..k
    let pos: std::collections::HashMap<usize, usize> =
        comp.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let masks: Vec<BitSet> = comp
        .iter()
        .map(|&v| {
            let mut m = BitSet::empty(k);
            m.insert(pos[&v]);
            for u in g.neighbors_idx(v) {
                if let Some(&i) = pos.get(u) {
                    m.insert(i);
                }
            }
            m
        })
        .collect();
    // with k > 1 every vertex has an allowed closed neighbor, so a
    // forbidden vertex never makes the component undominatable
    let forbidden = forbidden.map(|v| pos[&v]);
    let allowed = |v: usize| Some(v) != forbidden;
    // greedy incumbent on the component
    let mut best = {
        let mut covered = BitSet::empty(k);
        let mut size = 0;
        while covered.count() < k {
            let v = (0..k)
                .filter(|&v| allowed(v))
                .max_by_key(|&v| (covered.count_missing(&masks[v]), std::cmp::Reverse(v)))
                .unwrap();
            covered.union_with(&masks[v]);
            size += 1;
        }
        size
    };
    let mut search = Search {
        masks: &masks,
        n: k,
        forbidden,
        best,
        nodes_left,
        max_nodes,
    };
    search.run(&BitSet::empty(k), 0)?;
    best = search.best;
    Ok(Some(best))
}

struct Search<'a> {
    masks: &'a [BitSet],
    n: usize,
    forbidden: Option<usize>,
    best: usize,
    nodes_left: &'a mut u64,
    max_nodes: u64,
}

impl Search<'_> {
    fn run(&mut self, dominated: &BitSet, chosen: usize) -> Result<(), SolverError> {
        if *self.nodes_left == 0 {
            return Err(SolverError::BudgetExceeded(self.max_nodes));
        }
        *self.nodes_left -= 1;

        let undominated = self.n - dominated.count();
        if undominated == 0 {
            self.best = self.best.min(chosen);
            return Ok(());
        }
        // bound: each further pick covers at most max_cover new vertices
        let max_cover = (0..self.n)
            .filter(|&v| Some(v) != self.forbidden)
            .map(|v| dominated.count_missing(&self.masks[v]))
            .max()
            .unwrap_or(0);
        if max_cover == 0 {
            return Ok(());
        }
        let lower = undominated.div_ceil(max_cover);
        if chosen + lower >= self.best {
            return Ok(());
        }
        // branch on the undominated vertex with fewest potential
        // dominators; one of its closed neighbors must be picked
        let target = (0..self.n)
            .filter(|&v| !dominated.contains(v))
            .min_by_key(|&v| self.masks[v].count())
            .expect("undominated vertex exists");
        let mut dominators: Vec<usize> = (0..self.n)
            .filter(|&u| self.masks[target].contains(u) && Some(u) != self.forbidden)
            .collect();
        dominators.sort_by_key(|&u| std::cmp::Reverse(dominated.count_missing(&self.masks[u])));
        for u in dominators {
            let mut next = dominated.clone();
            next.union_with(&self.masks[u]);
            self.run(&next, chosen + 1)?;
        }
        Ok(())
    }
}
