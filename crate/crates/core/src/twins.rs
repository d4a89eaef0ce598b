//! Twin classes and the reduced graph.
//!
//! Two vertices `u`, `v` are twins when `N(u) \ {v} = N(v) \ {u}`. The
//! relation is an equivalence; each class induces either a clique (true
//! twins) or an edgeless graph (false twins), and a graph is recovered as the
//! generalized composition of its reduced graph with the class subgraphs.

use std::collections::HashMap;

use thiserror::Error;

use crate::graph::{generalized_composition, CompositionSpec, Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TwinError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("recomposed graph differs from the source graph")]
    ReconstructionMismatch,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClassKind {
    /// Two or more pairwise adjacent vertices.
    Complete,
    /// Two or more pairwise non-adjacent vertices.
    Empty,
    Singleton,
}

impl ClassKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ClassKind::Complete => "complete",
            ClassKind::Empty => "empty",
            ClassKind::Singleton => "singleton",
        }
    }
}

impl std::fmt::Display for ClassKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// `u` and `v` are twins iff `N(u) \ {v} = N(v) \ {u}`.
pub fn are_twins(g: &Graph, u: usize, v: usize) -> Result<bool, GraphError> {
    let nu = g.neighbors(u)?;
    let nv = g.neighbors(v)?;
    if u == v {
        return Ok(true);
    }
    let a = nu.iter().filter(|&&w| w != v);
    let b = nv.iter().filter(|&&w| w != u);
    Ok(a.eq(b))
}

/// Partition of a graph into twin classes together with its reduced graph.
#[derive(Debug, Clone)]
pub struct TwinDecomposition {
    source: Graph,
    classes: Vec<Vec<usize>>,
    kinds: Vec<ClassKind>,
    class_of: Vec<usize>,
    reduced: Graph,
}

impl TwinDecomposition {
    pub fn source(&self) -> &Graph {
        &self.source
    }

    /// Classes ordered by their minimum member; members ascending.
    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn kinds(&self) -> &[ClassKind] {
        &self.kinds
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        self.classes.iter().map(Vec::len).collect()
    }

    /// Minimum member of each class.
    pub fn representatives(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c[0]).collect()
    }

    /// Index of the class containing vertex `v`.
    pub fn class_of(&self, v: usize) -> usize {
        self.class_of[v]
    }

    /// The graph induced on the representatives, vertex `i` standing for
    /// class `i`.
    pub fn reduced(&self) -> &Graph {
        &self.reduced
    }
}

struct DisjointSets {
    parent: Vec<usize>,
}

impl DisjointSets {
    fn new(n: usize) -> Self {
        DisjointSets {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            // keep the smaller index as root
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }
}

/// Computes the twin classes by bucketing vertices on their open
/// neighbourhood (false twins) and on their closed neighbourhood (true twins)
/// and merging both bucketings.
pub fn twin_partition(g: &Graph) -> TwinDecomposition {
    let n = g.n();
    let mut sets = DisjointSets::new(n);

    let mut open: HashMap<&[usize], usize> = HashMap::with_capacity(n);
    for v in 0..n {
        let first = *open.entry(g.adj(v)).or_insert(v);
        sets.union(first, v);
    }

    let mut closed: HashMap<Vec<usize>, usize> = HashMap::with_capacity(n);
    for v in 0..n {
        let nbrs = g.adj(v);
        let at = nbrs.partition_point(|&w| w < v);
        let mut key = Vec::with_capacity(nbrs.len() + 1);
        key.extend_from_slice(&nbrs[..at]);
        key.push(v);
        key.extend_from_slice(&nbrs[at..]);
        let first = *closed.entry(key).or_insert(v);
        sets.union(first, v);
    }

    let mut class_of = vec![usize::MAX; n];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for v in 0..n {
        let root = sets.find(v);
        if class_of[root] == usize::MAX {
            class_of[root] = classes.len();
            classes.push(Vec::new());
        }
        let c = class_of[root];
        class_of[v] = c;
        classes[c].push(v);
    }

    let kinds = classes
        .iter()
        .map(|c| match c.as_slice() {
            [_] => ClassKind::Singleton,
            [a, b, ..] if g.has_edge(*a, *b) => ClassKind::Complete,
            _ => ClassKind::Empty,
        })
        .collect();

    let representatives: Vec<usize> = classes.iter().map(|c| c[0]).collect();
    let (reduced, _) = g
        .induced_subgraph(&representatives)
        .expect("representatives are valid vertices");

    TwinDecomposition {
        source: g.clone(),
        classes,
        kinds,
        class_of,
        reduced,
    }
}

/// Rebuilds the source graph as the generalized composition of the reduced
/// graph with the subgraphs induced by the classes, mapped back to the
/// original vertex indices.
pub fn recompose(d: &TwinDecomposition) -> Result<Graph, TwinError> {
    let factors = d
        .classes
        .iter()
        .map(|c| d.source.induced_subgraph(c).map(|(g, _)| g))
        .collect::<Result<Vec<_>, _>>()?;
    let spec = CompositionSpec::new(d.reduced.clone().without_labels(), factors)?;
    let composed = generalized_composition(&spec)?;

    let mut to_source = Vec::with_capacity(d.source.n());
    for c in &d.classes {
        to_source.extend_from_slice(c);
    }
    let mut rebuilt = composed.without_labels().relabeled(&to_source)?;
    if let Some(labels) = d.source.labels() {
        rebuilt = rebuilt.with_labels(labels.to_vec())?;
    }
    if rebuilt != d.source {
        return Err(TwinError::ReconstructionMismatch);
    }
    Ok(rebuilt)
}
