//! Simple undirected graphs over dense `0..n` vertex indices.
//!
//! A [`Graph`] is immutable once built. Every constructor enforces the same
//! invariants: adjacency lists are sorted, symmetric, free of self-loops and
//! in range. Semantic vertex names (group elements, ring elements, ideals)
//! travel as optional display labels so the algorithms never look at them.

use std::borrow::Cow;
use std::collections::VecDeque;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex index {index} out of range for a graph on {n} vertices")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("self-loop at vertex {0} rejected")]
    SelfLoopRejected(usize),
    #[error("composition base has {expected} vertices but {got} factors were given")]
    ArityMismatch { expected: usize, got: usize },
    #[error("expected {expected} labels, got {got}")]
    LabelCount { expected: usize, got: usize },
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

/// Immutable simple graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// Builds a graph on `n` vertices. Duplicate pairs (in either orientation)
    /// collapse to a single edge.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::IndexOutOfRange { index: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoopRejected(u));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Graph {
            adjacency,
            labels: None,
        })
    }

    pub fn empty(n: usize) -> Self {
        Graph {
            adjacency: vec![Vec::new(); n],
            labels: None,
        }
    }

    pub fn complete(n: usize) -> Self {
        let adjacency = (0..n)
            .map(|v| (0..n).filter(|&u| u != v).collect())
            .collect();
        Graph {
            adjacency,
            labels: None,
        }
    }

    /// Builds a graph from a symmetric adjacency predicate evaluated on all
    /// pairs `u < v`.
    pub fn from_predicate(n: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Self {
        let mut adjacency = vec![Vec::new(); n];
        for u in 0..n {
            for v in (u + 1)..n {
                if adjacent(u, v) {
                    adjacency[u].push(v);
                    adjacency[v].push(u);
                }
            }
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Graph {
            adjacency,
            labels: None,
        }
    }

    /// Attaches display labels, one per vertex.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, GraphError> {
        if labels.len() != self.n() {
            return Err(GraphError::LabelCount {
                expected: self.n(),
                got: labels.len(),
            });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn without_labels(mut self) -> Self {
        self.labels = None;
        self
    }

    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display label of `v`; the decimal index when the graph is unlabeled.
    pub fn label(&self, v: usize) -> Cow<'_, str> {
        match &self.labels {
            Some(labels) => Cow::Borrowed(labels[v].as_str()),
            None => Cow::Owned(v.to_string()),
        }
    }

    /// Open neighbourhood `N(v)`, sorted ascending.
    pub fn neighbors(&self, v: usize) -> Result<&[usize], GraphError> {
        self.adjacency
            .get(v)
            .map(Vec::as_slice)
            .ok_or(GraphError::IndexOutOfRange {
                index: v,
                n: self.n(),
            })
    }

    /// Unchecked neighbour access for hot loops; panics when `v` is out of range.
    #[inline]
    pub(crate) fn adj(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut edges = Vec::with_capacity(self.edge_count());
        for (u, list) in self.adjacency.iter().enumerate() {
            edges.extend(list.iter().filter(|&&v| v > u).map(|&v| (u, v)));
        }
        edges
    }

    /// True iff the graph has at most one connected component. The graph on
    /// zero vertices counts as connected.
    pub fn is_connected(&self) -> bool {
        if self.n() <= 1 {
            return true;
        }
        self.bfs(0).iter().all(Option::is_some)
    }

    /// Hop counts from `source`; `None` marks unreachable vertices.
    pub fn bfs(&self, source: usize) -> Vec<Option<u32>> {
        let mut dist = vec![None; self.n()];
        let mut queue = VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let next = dist[u].map(|d| d + 1);
            for &v in &self.adjacency[u] {
                if dist[v].is_none() {
                    dist[v] = next;
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// One breadth-first search per vertex.
    pub fn all_pairs_distances(&self) -> DistanceMatrix {
        let n = self.n();
        let mut entries = Vec::with_capacity(n * n);
        for s in 0..n {
            entries.extend(self.bfs(s));
        }
        DistanceMatrix { n, entries }
    }

    /// Subgraph induced by `vertices`, re-indexed `0..|S|` in ascending order
    /// of the original indices. Returns the graph and the map from new index
    /// to original index.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<(Graph, Vec<usize>), GraphError> {
        let n = self.n();
        let mut keep: Vec<usize> = vertices.to_vec();
        keep.sort_unstable();
        keep.dedup();
        if let Some(&bad) = keep.iter().find(|&&v| v >= n) {
            return Err(GraphError::IndexOutOfRange { index: bad, n });
        }
        let mut position = vec![usize::MAX; n];
        for (i, &v) in keep.iter().enumerate() {
            position[v] = i;
        }
        let adjacency = keep
            .iter()
            .map(|&v| {
                self.adjacency[v]
                    .iter()
                    .filter(|&&u| position[u] != usize::MAX)
                    .map(|&u| position[u])
                    .collect()
            })
            .collect();
        let labels = self
            .labels
            .as_ref()
            .map(|labels| keep.iter().map(|&v| labels[v].clone()).collect());
        Ok((Graph { adjacency, labels }, keep))
    }

    /// Renames vertex `v` to `perm[v]`. `perm` must be a permutation of `0..n`.
    pub fn relabeled(&self, perm: &[usize]) -> Result<Graph, GraphError> {
        let n = self.n();
        if perm.len() != n {
            return Err(GraphError::LabelCount {
                expected: n,
                got: perm.len(),
            });
        }
        let mut seen = vec![false; n];
        for &p in perm {
            if p >= n || seen[p] {
                return Err(GraphError::IndexOutOfRange { index: p, n });
            }
            seen[p] = true;
        }
        let mut adjacency = vec![Vec::new(); n];
        for (v, list) in self.adjacency.iter().enumerate() {
            let mut mapped: Vec<usize> = list.iter().map(|&u| perm[u]).collect();
            mapped.sort_unstable();
            adjacency[perm[v]] = mapped;
        }
        let labels = self.labels.as_ref().map(|labels| {
            let mut out = vec![String::new(); n];
            for (v, label) in labels.iter().enumerate() {
                out[perm[v]] = label.clone();
            }
            out
        });
        Ok(Graph { adjacency, labels })
    }

    /// Same vertex count and edge set, ignoring labels.
    pub fn same_edges(&self, other: &Graph) -> bool {
        self.adjacency == other.adjacency
    }
}

/// Hop-count matrix produced by [`Graph::all_pairs_distances`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    entries: Vec<Option<u32>>,
}

impl DistanceMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    /// `None` when `v` is unreachable from `u`.
    #[inline]
    pub fn get(&self, u: usize, v: usize) -> Option<u32> {
        self.entries[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[Option<u32>] {
        &self.entries[u * self.n..(u + 1) * self.n]
    }
}

/// A base graph `H` on `k` vertices and one factor graph per base vertex.
#[derive(Debug, Clone)]
pub struct CompositionSpec {
    pub base: Graph,
    pub factors: Vec<Graph>,
}

impl CompositionSpec {
    pub fn new(base: Graph, factors: Vec<Graph>) -> Result<Self, GraphError> {
        if factors.len() != base.n() {
            return Err(GraphError::ArityMismatch {
                expected: base.n(),
                got: factors.len(),
            });
        }
        Ok(CompositionSpec { base, factors })
    }

    /// First vertex index of each factor block in the composed graph.
    pub fn block_offsets(&self) -> Vec<usize> {
        let mut offsets = Vec::with_capacity(self.factors.len() + 1);
        let mut acc = 0;
        for f in &self.factors {
            offsets.push(acc);
            acc += f.n();
        }
        offsets.push(acc);
        offsets
    }
}

/// Builds `H[G_1, ..., G_k]`: factor `i` occupies a contiguous block of
/// vertices (blocks in base order), each block keeps its internal edges, and
/// two blocks are completely joined exactly when their base vertices are
/// adjacent.
pub fn generalized_composition(spec: &CompositionSpec) -> Result<Graph, GraphError> {
    let base = &spec.base;
    if spec.factors.len() != base.n() {
        return Err(GraphError::ArityMismatch {
            expected: base.n(),
            got: spec.factors.len(),
        });
    }
    let offsets = spec.block_offsets();
    let total = offsets[base.n()];
    let mut adjacency: Vec<Vec<usize>> = Vec::with_capacity(total);
    for (i, factor) in spec.factors.iter().enumerate() {
        for p in 0..factor.n() {
            let mut list = Vec::new();
            for &j in base.adj(i) {
                if j < i {
                    list.extend(offsets[j]..offsets[j + 1]);
                }
            }
            list.extend(factor.adj(p).iter().map(|&q| offsets[i] + q));
            for &j in base.adj(i) {
                if j > i {
                    list.extend(offsets[j]..offsets[j + 1]);
                }
            }
            adjacency.push(list);
        }
    }
    let labels = if spec.factors.iter().any(|f| f.labels.is_some()) {
        let mut labels = Vec::with_capacity(total);
        for (i, factor) in spec.factors.iter().enumerate() {
            for p in 0..factor.n() {
                labels.push(match &factor.labels {
                    Some(l) => l[p].clone(),
                    None => format!("{i}.{p}"),
                });
            }
        }
        Some(labels)
    } else {
        None
    };
    Ok(Graph { adjacency, labels })
}

/// Text formats understood by [`parse_graph`] and [`render_graph`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GraphFormat {
    EdgeList,
    Json,
    Dot,
}

impl std::str::FromStr for GraphFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "edge-list" | "edgelist" | "edges" => Ok(GraphFormat::EdgeList),
            "json" => Ok(GraphFormat::Json),
            "dot" => Ok(GraphFormat::Dot),
            other => Err(format!(
                "unknown graph format {other:?} (expected edge-list, json or dot)"
            )),
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphJson {
    n: usize,
    edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
}

/// Parses the edge-list or JSON format. DOT is export-only.
pub fn parse_graph(text: &str, format: GraphFormat) -> Result<Graph, GraphError> {
    match format {
        GraphFormat::EdgeList => parse_edge_list(text),
        GraphFormat::Json => parse_json(text),
        GraphFormat::Dot => Err(GraphError::Parse {
            line: 1,
            column: 1,
            message: "DOT input is not supported".into(),
        }),
    }
}

fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut tokens = Vec::new();
        let mut rest = raw;
        let mut consumed = 0;
        while let Some(start) = rest.find(|c: char| !c.is_whitespace()) {
            let tail = &rest[start..];
            let len = tail.find(char::is_whitespace).unwrap_or(tail.len());
            tokens.push((consumed + start + 1, &tail[..len]));
            consumed += start + len;
            rest = &tail[len..];
        }
        let number = |(column, token): (usize, &str)| {
            token.parse::<usize>().map_err(|_| GraphError::Parse {
                line,
                column,
                message: format!("expected a non-negative integer, found {token:?}"),
            })
        };
        match n {
            None => {
                if tokens.len() != 1 {
                    return Err(GraphError::Parse {
                        line,
                        column: tokens.get(1).map_or(1, |t| t.0),
                        message: "header must be a single vertex count".into(),
                    });
                }
                n = Some(number(tokens[0])?);
            }
            Some(count) => {
                if tokens.len() != 2 {
                    return Err(GraphError::Parse {
                        line,
                        column: tokens.get(2).map_or(1, |t| t.0),
                        message: format!("expected two vertex indices, found {}", tokens.len()),
                    });
                }
                let u = number(tokens[0])?;
                let v = number(tokens[1])?;
                for (w, column) in [(u, tokens[0].0), (v, tokens[1].0)] {
                    if w >= count {
                        return Err(GraphError::Parse {
                            line,
                            column,
                            message: format!(
                                "vertex index {w} out of range for a graph on {count} vertices"
                            ),
                        });
                    }
                }
                if u == v {
                    return Err(GraphError::Parse {
                        line,
                        column: tokens[0].0,
                        message: format!("self-loop at vertex {u} rejected"),
                    });
                }
                edges.push((u, v));
            }
        }
    }
    let n = n.ok_or(GraphError::Parse {
        line: 1,
        column: 1,
        message: "missing vertex count header".into(),
    })?;
    Graph::new(n, &edges)
}

fn parse_json(text: &str) -> Result<Graph, GraphError> {
    let raw: GraphJson = serde_json::from_str(text).map_err(|e| GraphError::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let edges: Vec<(usize, usize)> = raw.edges.iter().map(|e| (e[0], e[1])).collect();
    let graph = Graph::new(raw.n, &edges)?;
    match raw.labels {
        Some(labels) => graph.with_labels(labels),
        None => Ok(graph),
    }
}

/// Deterministic rendering; edges are emitted as `u v` with `u < v` in
/// lexicographic order.
pub fn render_graph(g: &Graph, format: GraphFormat) -> String {
    match format {
        GraphFormat::EdgeList => {
            let mut out = format!("{}\n", g.n());
            for (u, v) in g.edges() {
                let _ = writeln!(out, "{u} {v}");
            }
            out
        }
        GraphFormat::Json => {
            let json = GraphJson {
                n: g.n(),
                edges: g.edges().into_iter().map(|(u, v)| [u, v]).collect(),
                labels: g.labels.clone(),
            };
            let mut out = serde_json::to_string(&json).expect("graph json is always serializable");
            out.push('\n');
            out
        }
        GraphFormat::Dot => {
            let mut out = String::from("graph G {\n");
            for v in 0..g.n() {
                match &g.labels {
                    Some(labels) => {
                        let escaped = labels[v].replace('\\', "\\\\").replace('"', "\\\"");
                        let _ = writeln!(out, "  {v} [label=\"{escaped}\"];");
                    }
                    None => {
                        let _ = writeln!(out, "  {v};");
                    }
                }
            }
            for (u, v) in g.edges() {
                let _ = writeln!(out, "  {u} -- {v};");
            }
            out.push_str("}\n");
            out
        }
    }
}
