//! Simple undirected graphs with contiguous vertex ids.
//!
//! A [`Graph`] is immutable once built. Vertices are `0..n`, every adjacency
//! list is sorted, and the structure is always simple (no loops, no parallel
//! edges). Product constructions attach integer coordinate labels to
//! vertices; other generators attach singleton labels.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use serde::ser::{SerializeMap, SerializeStruct};
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};

pub type Label = Vec<i64>;

#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    labels: Option<Vec<Label>>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            labels: None,
        }
    }

    /// Builds a simple graph, rejecting loops, duplicates and out-of-range ids.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        let mut seen = HashSet::with_capacity(edges.len());
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::ContractViolation(format!(
                    "edge {u}-{v} out of range for {n} vertices"
                )));
            }
            if u == v {
                return Err(Error::ContractViolation(format!("self-loop at {u}")));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(Error::ContractViolation(format!("duplicate edge {u}-{v}")));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { adj, labels: None })
    }

    /// Like [`Graph::from_edges`] but silently drops loops and repeated edges.
    pub(crate) fn from_edges_lossy(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            if u != v {
                adj[u].push(v);
                adj[v].push(u);
            }
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Graph { adj, labels: None }
    }

    /// Attaches coordinate labels. They must be distinct and one per vertex.
    pub fn with_labels(mut self, labels: Vec<Label>) -> Result<Self> {
        if labels.len() != self.n() {
            return Err(Error::ContractViolation(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.n()
            )));
        }
        let distinct: HashSet<&Label> = labels.iter().collect();
        if distinct.len() != labels.len() {
            return Err(Error::ContractViolation("labels are not distinct".into()));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub(crate) fn singleton_labels(self) -> Self {
        let labels = (0..self.n() as i64).map(|v| vec![v]).collect();
        Graph {
            labels: Some(labels),
            ..self
        }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn labels(&self) -> Option<&[Label]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: usize) -> Option<&Label> {
        self.labels.as_ref().map(|l| &l[v])
    }

    /// Vertex carrying the given label, if labels are present.
    pub fn vertex_with_label(&self, label: &[i64]) -> Option<usize> {
        self.labels.as_ref()?.iter().position(|l| l == label)
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut degrees: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        degrees.sort_unstable();
        degrees
    }

    pub fn is_connected(&self) -> bool {
        if self.n() == 0 {
            return true;
        }
        let mut seen = vec![false; self.n()];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == self.n()
    }

    /// Connected and acyclic. The empty graph counts as the empty tree.
    pub fn is_tree(&self) -> bool {
        self.n() == 0 || (self.edge_count() + 1 == self.n() && self.is_connected())
    }

    /// Deletes a vertex set and renumbers the survivors in increasing order.
    pub fn remove_vertices(&self, doomed: &[usize]) -> Reindexed {
        let mut keep = vec![true; self.n()];
        for &v in doomed {
            keep[v] = false;
        }
        self.induced(&keep)
    }

    pub(crate) fn induced(&self, keep: &[bool]) -> Reindexed {
        let origin: Vec<usize> = (0..self.n()).filter(|&v| keep[v]).collect();
        let mut new_id = vec![usize::MAX; self.n()];
        for (i, &v) in origin.iter().enumerate() {
            new_id[v] = i;
        }
        let adj = origin
            .iter()
            .map(|&v| self.adj[v].iter().filter(|&&w| keep[w]).map(|&w| new_id[w]).collect())
            .collect();
        let labels = self
            .labels
            .as_ref()
            .map(|l| origin.iter().map(|&v| l[v].clone()).collect());
        Reindexed {
            graph: Graph { adj, labels },
            origin,
        }
    }

    /// Canonical edge-list text: a `n <count>` header, then one edge per line.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("n {}\n", self.n());
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("graph serialisation is infallible")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        #[derive(Deserialize)]
        struct Raw {
            n: usize,
            edges: Vec<(usize, usize)>,
            #[serde(default)]
            labels: Option<std::collections::HashMap<String, Label>>,
        }
        let raw: Raw = serde_json::from_str(text).map_err(|e| Error::parse(e.line(), e.to_string()))?;
        let graph = Graph::from_edges(raw.n, &raw.edges).map_err(|e| Error::parse(0, e.to_string()))?;
        match raw.labels {
            None => Ok(graph),
            Some(map) => {
                let mut labels = vec![None; raw.n];
                for (key, label) in map {
                    let v: usize = key
                        .parse()
                        .ok()
                        .filter(|&v| v < raw.n)
                        .ok_or_else(|| Error::parse(0, format!("bad label key {key:?}")))?;
                    labels[v] = Some(label);
                }
                let labels: Option<Vec<Label>> = labels.into_iter().collect();
                let labels = labels.ok_or_else(|| Error::parse(0, "labels do not cover every vertex"))?;
                graph.with_labels(labels).map_err(|e| Error::parse(0, e.to_string()))
            }
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

struct LabelMap<'a>(&'a [Label]);

impl Serialize for LabelMap<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.len()))?;
        for (v, label) in self.0.iter().enumerate() {
            map.serialize_entry(&v.to_string(), label)?;
        }
        map.end()
    }
}

impl Serialize for Graph {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let fields = if self.labels.is_some() { 3 } else { 2 };
        let mut s = serializer.serialize_struct("Graph", fields)?;
        s.serialize_field("n", &self.n())?;
        s.serialize_field("edges", &self.edges().map(|(u, v)| [u, v]).collect::<Vec<_>>())?;
        if let Some(labels) = &self.labels {
            s.serialize_field("labels", &LabelMap(labels))?;
        }
        s.end()
    }
}

/// A graph produced by deleting vertices, with `origin[new] = old`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reindexed {
    pub graph: Graph,
    pub origin: Vec<usize>,
}

/// Parses the strict edge-list format: duplicates and loops are errors.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    parse_edge_list_with(text, true)
}

/// Parses `u v` lines with an optional leading `n <count>` header.
///
/// Blank lines and `#` comments are skipped. Without a header the vertex
/// count is one more than the largest id. In lenient mode loops and repeated
/// edges are dropped instead of rejected.
pub fn parse_edge_list_with(text: &str, strict: bool) -> Result<Graph> {
    let mut declared: Option<usize> = None;
    let mut edges = Vec::new();
    let mut seen = HashSet::new();
    let mut saw_edge = false;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim_end_matches('\r').trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens[0] == "n" {
            if saw_edge || declared.is_some() {
                return Err(Error::parse(line_no, "header must precede all edges"));
            }
            if tokens.len() != 2 {
                return Err(Error::parse(line_no, "expected `n <count>`"));
            }
            let count = tokens[1]
                .parse()
                .map_err(|_| Error::parse(line_no, format!("malformed vertex count {:?}", tokens[1])))?;
            declared = Some(count);
            continue;
        }
        if tokens.len() != 2 {
            return Err(Error::parse(line_no, format!("expected two vertex ids, got {line:?}")));
        }
        let parse_id = |t: &str| -> Result<usize> {
            t.parse()
                .map_err(|_| Error::parse(line_no, format!("malformed vertex id {t:?}")))
        };
        let (u, v) = (parse_id(tokens[0])?, parse_id(tokens[1])?);
        saw_edge = true;
        if let Some(n) = declared {
            if u >= n || v >= n {
                return Err(Error::parse(line_no, format!("vertex id out of range for n = {n}")));
            }
        }
        if u == v {
            if strict {
                return Err(Error::parse(line_no, format!("self-loop at vertex {u}")));
            }
            continue;
        }
        if !seen.insert((u.min(v), u.max(v))) {
            if strict {
                return Err(Error::parse(line_no, format!("duplicate edge {u}-{v}")));
            }
            continue;
        }
        edges.push((u, v));
    }

    let n = declared.unwrap_or_else(|| edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0));
    Ok(Graph::from_edges_lossy(n, edges))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_path_without_header() {
        let g = parse_edge_list("0 1\n1 2").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn parses_cycle_with_header_and_crlf() {
        let g = parse_edge_list("# a square\r\nn 4\r\n0 1\r\n1 2\r\n\r\n2 3\r\n3 0\r\n").unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.edge_count(), 4);
        assert!((0..4).all(|v| g.degree(v) == 2));
    }

    #[test]
    fn header_keeps_isolated_vertices() {
        let g = parse_edge_list("n 5\n0 1").unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.degree(4), 0);
    }

    #[test]
    fn rejects_self_loop() {
        assert!(matches!(parse_edge_list("0 0"), Err(Error::Parse { line: 1, .. })));
    }

    #[test]
    fn rejects_duplicate_in_strict_mode_only() {
        let text = "0 1\n2 1\n1 0\n";
        assert!(matches!(parse_edge_list(text), Err(Error::Parse { line: 3, .. })));
        let g = parse_edge_list_with(text, false).unwrap();
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn rejects_malformed_tokens() {
        assert!(matches!(parse_edge_list("0 x"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_edge_list("0 1 2"), Err(Error::Parse { .. })));
        assert!(matches!(parse_edge_list("n 3\n0 3"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_edge_list("0 1\nn 3"), Err(Error::Parse { line: 2, .. })));
    }

    #[test]
    fn empty_text_is_empty_graph() {
        assert_eq!(parse_edge_list("").unwrap().n(), 0);
    }

    #[test]
    fn edge_list_round_trip() {
        let g = parse_edge_list("n 6\n4 1\n0 3\n1 2").unwrap();
        assert_eq!(parse_edge_list(&g.to_edge_list()).unwrap(), g);
    }

    #[test]
    fn json_export_has_fixed_key_order() {
        let g = Graph::from_edges(3, &[(2, 1), (0, 1)]).unwrap();
        assert_eq!(g.to_json(), r#"{"n":3,"edges":[[0,1],[1,2]]}"#);
        let labelled = g.singleton_labels();
        assert_eq!(
            labelled.to_json(),
            r#"{"n":3,"edges":[[0,1],[1,2]],"labels":{"0":[0],"1":[1],"2":[2]}}"#
        );
        assert_eq!(Graph::from_json(&labelled.to_json()).unwrap(), labelled);
    }

    #[test]
    fn labels_must_be_distinct_and_complete() {
        let g = Graph::empty(2);
        assert!(g.clone().with_labels(vec![vec![1]]).is_err());
        assert!(g.clone().with_labels(vec![vec![1], vec![1]]).is_err());
        assert!(g.with_labels(vec![vec![1], vec![2]]).is_ok());
    }

    #[test]
    fn remove_vertices_reports_origin() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let r = g.remove_vertices(&[1]);
        assert_eq!(r.origin, vec![0, 2, 3]);
        assert_eq!(r.graph.edges().collect::<Vec<_>>(), vec![(1, 2)]);
    }

    #[test]
    fn tree_and_connectivity() {
        let path = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(path.is_tree());
        let split = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!split.is_connected());
        assert!(!split.is_tree());
        assert!(Graph::empty(1).is_tree());
    }
}
