//! Immutable simple undirected graphs with string vertex labels.
//!
//! Vertices are kept in a canonical order (natural label order, so "2"
//! sorts before "10") and every operation is deterministic with respect
//! to that order. Construction enforces simplicity: no self-loops and
//! symmetric adjacency.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};
use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("line {line}: self-loop on vertex '{label}'")]
    SelfLoop { line: usize, label: String },
    #[error("line {line}: expected two whitespace-separated labels, found {found} token(s)")]
    BadTokenCount { line: usize, found: usize },
    #[error("unknown vertex '{0}'")]
    UnknownVertex(String),
    #[error("unknown dataset '{0}'")]
    UnknownDataset(String),
}

/// Compares labels naturally: maximal digit runs compare as integers,
/// everything else byte-wise, and a digit run sorts before a non-digit
/// run. This makes "2" < "10" and "E7" < "E11" while staying a total
/// order over arbitrary strings.
pub fn natural_cmp(a: &str, b: &str) -> Ordering {
    let mut xa = chunks(a);
    let mut xb = chunks(b);
    loop {
        match (xa.next(), xb.next()) {
            (None, None) => return Ordering::Equal,
            (None, Some(_)) => return Ordering::Less,
            (Some(_), None) => return Ordering::Greater,
            (Some(ca), Some(cb)) => {
                let ord = match (ca, cb) {
                    (Chunk::Num(x, sa), Chunk::Num(y, sb)) => {
                        // leading zeros: fall back to string compare on ties
                        x.cmp(&y).then_with(|| sa.cmp(sb))
                    }
                    (Chunk::Num(..), Chunk::Text(_)) => Ordering::Less,
                    (Chunk::Text(_), Chunk::Num(..)) => Ordering::Greater,
                    (Chunk::Text(sa), Chunk::Text(sb)) => sa.cmp(sb),
                };
                if ord != Ordering::Equal {
                    return ord;
                }
            }
        }
    }
}

enum Chunk<'a> {
    Num(u128, &'a str),
    Text(&'a str),
}

fn chunks(s: &str) -> impl Iterator<Item = Chunk<'_>> {
    let bytes = s.as_bytes();
    let mut pos = 0;
    std::iter::from_fn(move || {
        if pos >= bytes.len() {
            return None;
        }
        let start = pos;
        let digit = bytes[pos].is_ascii_digit();
        while pos < bytes.len() && bytes[pos].is_ascii_digit() == digit {
            pos += 1;
        }
        let chunk = &s[start..pos];
        Some(if digit {
            // Labels longer than u128 digits are unrealistic; saturate.
            Chunk::Num(chunk.parse().unwrap_or(u128::MAX), chunk)
        } else {
            Chunk::Text(chunk)
        })
    })
}

/// Immutable simple undirected graph. Vertex indices are positions in
/// the canonical label order and stay valid for the lifetime of the
/// graph value.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    adj: Vec<BTreeSet<usize>>,
    edges: usize,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={})", self.order(), self.size())
    }
}

impl Graph {
    /// Builds a graph from labelled edges plus explicitly declared
    /// (possibly isolated) vertices. Duplicate edges collapse; self-loops
    /// are rejected.
    pub fn from_edges<I, S>(edges: I, declared: &[S]) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (String, String)>,
        S: AsRef<str>,
    {
        let edges: Vec<(String, String)> = edges.into_iter().collect();
        let mut labels: Vec<String> = Vec::new();
        for (u, v) in &edges {
            if u == v {
                return Err(GraphError::SelfLoop {
                    line: 0,
                    label: u.clone(),
                });
            }
            labels.push(u.clone());
            labels.push(v.clone());
        }
        labels.extend(declared.iter().map(|s| s.as_ref().to_string()));
        labels.sort_by(|a, b| natural_cmp(a, b));
        labels.dedup();
        let index: HashMap<String, usize> = labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.clone(), i))
            .collect();
        let mut adj = vec![BTreeSet::new(); labels.len()];
        let mut count = 0;
        for (u, v) in &edges {
            let (i, j) = (index[u], index[v]);
            if adj[i].insert(j) {
                adj[j].insert(i);
                count += 1;
            }
        }
        Ok(Graph {
            labels,
            index,
            adj,
            edges: count,
        })
    }

    /// Parses the line-oriented edge-list format: '#' comments, blank
    /// lines, "u v" edge lines and "v <label>" isolated-vertex
    /// declarations.
    pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
        let mut edges = Vec::new();
        let mut declared: Vec<String> = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let tokens: Vec<&str> = line.split_whitespace().collect();
            match tokens.as_slice() {
                ["v", label] => declared.push(label.to_string()),
                [u, v] => {
                    if u == v {
                        return Err(GraphError::SelfLoop {
                            line: lineno + 1,
                            label: u.to_string(),
                        });
                    }
                    edges.push((u.to_string(), v.to_string()));
                }
                toks => {
                    return Err(GraphError::BadTokenCount {
                        line: lineno + 1,
                        found: toks.len(),
                    })
                }
            }
        }
        Graph::from_edges(edges, &declared)
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.labels.len()
    }

    /// Number of edges (unordered pairs).
    pub fn size(&self) -> usize {
        self.edges
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, idx: usize) -> &str {
        &self.labels[idx]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn contains(&self, label: &str) -> bool {
        self.index.contains_key(label)
    }

    pub(crate) fn resolve(&self, label: &str) -> Result<usize, GraphError> {
        self.index_of(label)
            .ok_or_else(|| GraphError::UnknownVertex(label.to_string()))
    }

    pub fn degree_idx(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degree(&self, label: &str) -> Result<usize, GraphError> {
        Ok(self.adj[self.resolve(label)?].len())
    }

    pub fn adjacent_idx(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(&v)
    }

    pub fn neighbors_idx(&self, v: usize) -> &BTreeSet<usize> {
        &self.adj[v]
    }

    /// Open neighborhood N(v), as labels in canonical order.
    pub fn neighbors(&self, label: &str) -> Result<Vec<&str>, GraphError> {
        let v = self.resolve(label)?;
        Ok(self.adj[v].iter().map(|&u| self.label(u)).collect())
    }

    /// Closed neighborhood N[A] = N(A) ∪ A over a set of labels.
    pub fn closed_neighborhood<S: AsRef<str>>(
        &self,
        set: &[S],
    ) -> Result<Vec<&str>, GraphError> {
        let mut out = BTreeSet::new();
        for s in set {
            let v = self.resolve(s.as_ref())?;
            out.insert(v);
            out.extend(self.adj[v].iter().copied());
        }
        Ok(out.into_iter().map(|v| self.label(v)).collect())
    }

    pub(crate) fn closed_idx(&self, v: usize) -> BTreeSet<usize> {
        let mut s = self.adj[v].clone();
        s.insert(v);
        s
    }

    /// Induced subgraph G(U); edges with both endpoints in U survive.
    pub fn induced_subgraph<S: AsRef<str>>(&self, set: &[S]) -> Result<Graph, GraphError> {
        let mut keep = BTreeSet::new();
        for s in set {
            keep.insert(self.resolve(s.as_ref())?);
        }
        self.induced_idx(&keep)
    }

    pub(crate) fn induced_idx(&self, keep: &BTreeSet<usize>) -> Result<Graph, GraphError> {
        let mut edges = Vec::new();
        for &u in keep {
            for &v in &self.adj[u] {
                if u < v && keep.contains(&v) {
                    edges.push((self.labels[u].clone(), self.labels[v].clone()));
                }
            }
        }
        let declared: Vec<&str> = keep.iter().map(|&v| self.label(v)).collect();
        Graph::from_edges(edges, &declared)
    }

    /// G − v: induced subgraph on V ∖ {v}. May contain isolated vertices.
    pub fn delete_vertex(&self, label: &str) -> Result<Graph, GraphError> {
        let v = self.resolve(label)?;
        Ok(self.delete_vertex_idx(v))
    }

    pub(crate) fn delete_vertex_idx(&self, v: usize) -> Graph {
        let keep: BTreeSet<usize> = (0..self.order()).filter(|&u| u != v).collect();
        self.induced_idx(&keep).expect("subset of own vertices")
    }

    /// Edges as label pairs, each pair and the list in canonical order.
    pub fn edge_list(&self) -> Vec<(&str, &str)> {
        let mut out = Vec::with_capacity(self.edges);
        for u in 0..self.order() {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((self.label(u), self.label(v)));
                }
            }
        }
        out
    }

    /// Connected components as index sets, each sorted, ordered by
    /// smallest member.
    pub(crate) fn components_idx(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut comps = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut stack = vec![start];
            let mut comp = Vec::new();
            seen[start] = true;
            while let Some(u) = stack.pop() {
                comp.push(u);
                for &v in &self.adj[u] {
                    if !seen[v] {
                        seen[v] = true;
                        stack.push(v);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_path() {
        let g = Graph::parse_edge_list("a b\nb c").unwrap();
        assert_eq!(g.order(), 3);
        assert_eq!(g.size(), 2);
        assert_eq!(g.neighbors("b").unwrap(), vec!["a", "c"]);
    }

    #[test]
    fn parse_dedup_and_symmetry() {
        let g = Graph::parse_edge_list("a b\nb a\na b").unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.size(), 1);
    }

    #[test]
    fn parse_rejects_self_loop() {
        let err = Graph::parse_edge_list("a b\nx x").unwrap_err();
        assert_eq!(
            err,
            GraphError::SelfLoop {
                line: 2,
                label: "x".into()
            }
        );
    }

    #[test]
    fn parse_rejects_bad_token_count() {
        let err = Graph::parse_edge_list("a b c").unwrap_err();
        assert_eq!(err, GraphError::BadTokenCount { line: 1, found: 3 });
    }

    #[test]
    fn comments_blanks_and_declarations() {
        let g = Graph::parse_edge_list("# header\n\na b\nv lonely\n").unwrap();
        assert_eq!(g.order(), 3);
        assert_eq!(g.size(), 1);
        assert_eq!(g.degree("lonely").unwrap(), 0);
    }

    #[test]
    fn natural_order() {
        assert_eq!(natural_cmp("2", "10"), Ordering::Less);
        assert_eq!(natural_cmp("E7", "E11"), Ordering::Less);
        assert_eq!(natural_cmp("10", "Elato"), Ordering::Less);
        assert_eq!(natural_cmp("abc", "abd"), Ordering::Less);
        let g = Graph::parse_edge_list("10 2\n2 E7\nE7 E11").unwrap();
        assert_eq!(g.labels(), &["2", "10", "E7", "E11"]);
    }

    #[test]
    fn closed_neighborhood_edge_cases() {
        let g = Graph::parse_edge_list("a b\nb c").unwrap();
        assert!(g.closed_neighborhood::<&str>(&[]).unwrap().is_empty());
        assert_eq!(
            g.closed_neighborhood(&["a", "b", "c"]).unwrap(),
            vec!["a", "b", "c"]
        );
        assert_eq!(g.closed_neighborhood(&["a"]).unwrap(), vec!["a", "b"]);
        assert!(g.closed_neighborhood(&["zz"]).is_err());
    }

    #[test]
    fn delete_and_induced_agree() {
        let g = Graph::parse_edge_list("a b\nb c\nc a\nc d").unwrap();
        let del = g.delete_vertex("c").unwrap();
        let rest: Vec<&str> = g.labels().iter().map(|s| s.as_str()).filter(|&l| l != "c").collect();
        let ind = g.induced_subgraph(&rest).unwrap();
        assert_eq!(del, ind);
        assert_eq!(del.size(), 1);
        assert_eq!(del.degree("d").unwrap(), 0);
        // original untouched
        assert_eq!(g.order(), 4);
    }

    #[test]
    fn delete_commutes() {
        let g = Graph::parse_edge_list("a b\nb c\nc d\nd a").unwrap();
        let ab = g.delete_vertex("a").unwrap().delete_vertex("b").unwrap();
        let ba = g.delete_vertex("b").unwrap().delete_vertex("a").unwrap();
        assert_eq!(ab, ba);
    }

    #[test]
    fn components() {
        let g = Graph::parse_edge_list("a b\nc d\nv e").unwrap();
        assert_eq!(g.components_idx().len(), 3);
    }
}
