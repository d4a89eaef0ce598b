//! Exact Steiner distances and the brute-force Wiener / Steiner–Wiener
//! indices.
//!
//! `d(S)` is the number of edges of a smallest subtree containing every
//! vertex of `S`. It is computed with the Dreyfus–Wagner dynamic program over
//! (terminal subset, anchor vertex) states on top of an all-pairs hop matrix.

use rayon::prelude::*;
use thiserror::Error;

use crate::graph::{DistanceMatrix, Graph};

/// Exact index value.
pub type Count = u128;

/// Largest terminal set accepted by [`steiner_distance`].
pub const DEFAULT_TERMINAL_CAP: usize = 20;

/// Largest graph accepted by [`steiner_distance_bruteforce`].
pub const BRUTE_FORCE_VERTEX_CAP: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IndexError {
    #[error("graph is disconnected")]
    DisconnectedGraph,
    #[error("terminals do not lie in one connected component")]
    DisconnectedTerminals,
    #[error("terminal set is empty")]
    EmptyTerminalSet,
    #[error("vertex index {index} out of range for a graph on {n} vertices")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("subset size {m} is outside 1..={n}")]
    BadSubsetSize { m: usize, n: usize },
    #[error("{got} terminals exceed the cap of {cap}")]
    TerminalCapExceeded { got: usize, cap: usize },
    #[error("brute force is limited to {cap} vertices, graph has {n}")]
    GraphTooLargeForBruteForce { n: usize, cap: usize },
    #[error("complete multipartite graph needs at least two parts")]
    NeedTwoParts,
    #[error("integer overflow while accumulating the index")]
    Overflow,
}

/// `C(n, k)` with overflow detection.
pub fn binomial(n: usize, k: usize) -> Result<Count, IndexError> {
    if k > n {
        return Ok(0);
    }
    let k = k.min(n - k);
    let mut acc: Count = 1;
    for i in 0..k {
        // acc * (n - i) is divisible by (i + 1) at every step
        acc = acc
            .checked_mul((n - i) as Count)
            .ok_or(IndexError::Overflow)?
            / (i as Count + 1);
    }
    Ok(acc)
}

pub(crate) fn checked_add(a: Count, b: Count) -> Result<Count, IndexError> {
    a.checked_add(b).ok_or(IndexError::Overflow)
}

pub(crate) fn checked_mul(a: Count, b: Count) -> Result<Count, IndexError> {
    a.checked_mul(b).ok_or(IndexError::Overflow)
}

const INF: u32 = u32::MAX / 4;

/// Reusable Steiner distance evaluator for one graph. Holds the hop matrix
/// and the DP scratch buffer, so repeated queries only pay for the DP.
#[derive(Debug, Clone)]
pub struct SteinerSolver<'g> {
    graph: &'g Graph,
    dist: DistanceMatrix,
    cap: usize,
    scratch: Vec<u32>,
}

impl<'g> SteinerSolver<'g> {
    pub fn new(graph: &'g Graph) -> Self {
        Self::with_distances(graph, graph.all_pairs_distances())
    }

    pub fn with_distances(graph: &'g Graph, dist: DistanceMatrix) -> Self {
        SteinerSolver {
            graph,
            dist,
            cap: DEFAULT_TERMINAL_CAP,
            scratch: Vec::new(),
        }
    }

    pub fn with_terminal_cap(mut self, cap: usize) -> Self {
        self.cap = cap;
        self
    }

    pub fn graph(&self) -> &Graph {
        self.graph
    }

    pub fn distances(&self) -> &DistanceMatrix {
        &self.dist
    }

    /// Steiner distance of `terminals`. Duplicate entries are ignored.
    pub fn distance(&mut self, terminals: &[usize]) -> Result<u32, IndexError> {
        let n = self.graph.n();
        let mut terms: Vec<usize> = terminals.to_vec();
        terms.sort_unstable();
        terms.dedup();
        let Some(&first) = terms.first() else {
            return Err(IndexError::EmptyTerminalSet);
        };
        if let Some(&bad) = terms.iter().find(|&&t| t >= n) {
            return Err(IndexError::IndexOutOfRange { index: bad, n });
        }
        if terms.len() > self.cap {
            return Err(IndexError::TerminalCapExceeded {
                got: terms.len(),
                cap: self.cap,
            });
        }
        if terms.iter().any(|&t| self.dist.get(first, t).is_none()) {
            return Err(IndexError::DisconnectedTerminals);
        }
        Ok(self.distance_unchecked(&terms))
    }

    /// Dreyfus–Wagner on distinct, in-range, mutually reachable terminals.
    pub(crate) fn distance_unchecked(&mut self, terms: &[usize]) -> u32 {
        let k = terms.len();
        match k {
            0 | 1 => return 0,
            2 => return self.hop(terms[0], terms[1]),
            _ => {}
        }
        let n = self.graph.n();
        // DP over the first k-1 terminals; the last one is read off at the end.
        let last = terms[k - 1];
        let base = &terms[..k - 1];
        let full = (1usize << (k - 1)) - 1;
        self.scratch.clear();
        self.scratch.resize((full + 1) * n, INF);
        let dist = &self.dist;
        let table = &mut self.scratch;

        for (i, &t) in base.iter().enumerate() {
            let row = &mut table[(1 << i) * n..(1 << i) * n + n];
            for (v, slot) in row.iter_mut().enumerate() {
                *slot = dist.get(t, v).unwrap_or(INF);
            }
        }

        let mut merged = vec![INF; n];
        for mask in 1..=full {
            if mask & (mask - 1) == 0 {
                continue;
            }
            merged.fill(INF);
            // split mask = sub | rest; fixing the lowest bit in `sub` visits
            // every unordered split once
            let low = mask & mask.wrapping_neg();
            let mut sub = (mask - 1) & mask;
            while sub > 0 {
                if sub & low != 0 {
                    let rest = mask ^ sub;
                    let (a, b) = (&table[sub * n..sub * n + n], &table[rest * n..rest * n + n]);
                    for v in 0..n {
                        let c = (a[v] + b[v]).min(INF);
                        if c < merged[v] {
                            merged[v] = c;
                        }
                    }
                }
                sub = (sub - 1) & mask;
            }
            let row = &mut table[mask * n..mask * n + n];
            for (v, slot) in row.iter_mut().enumerate() {
                let mut best = merged[v];
                for (u, hop) in dist.row(v).iter().enumerate() {
                    if let Some(h) = hop {
                        let c = merged[u] + h;
                        if c < best {
                            best = c;
                        }
                    }
                }
                *slot = best.min(INF);
            }
        }
        table[full * n + last]
    }

    fn hop(&self, u: usize, v: usize) -> u32 {
        self.dist.get(u, v).unwrap_or(INF)
    }
}

/// Steiner distance of `terminals` in `g`.
pub fn steiner_distance(g: &Graph, terminals: &[usize]) -> Result<u32, IndexError> {
    SteinerSolver::new(g).distance(terminals)
}

/// Steiner distance by exhaustive search over vertex supersets `W ⊇ S`
/// inducing a connected subgraph; the answer is `min |W| - 1`.
pub fn steiner_distance_bruteforce(g: &Graph, terminals: &[usize]) -> Result<u32, IndexError> {
    let n = g.n();
    if n > BRUTE_FORCE_VERTEX_CAP {
        return Err(IndexError::GraphTooLargeForBruteForce {
            n,
            cap: BRUTE_FORCE_VERTEX_CAP,
        });
    }
    if terminals.is_empty() {
        return Err(IndexError::EmptyTerminalSet);
    }
    let mut required = 0u32;
    for &t in terminals {
        if t >= n {
            return Err(IndexError::IndexOutOfRange { index: t, n });
        }
        required |= 1 << t;
    }
    let neighbour_masks: Vec<u32> = (0..n)
        .map(|v| g.adj(v).iter().fold(0, |m, &u| m | (1 << u)))
        .collect();
    let induces_connected = |set: u32| {
        let start = set.trailing_zeros() as usize;
        let mut reached = 1u32 << start;
        let mut frontier = reached;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = neighbour_masks[v] & set & !reached;
            reached |= fresh;
            frontier |= fresh;
        }
        reached == set
    };
    let free = !required & ((1u64 << n) - 1) as u32;
    let mut best: Option<u32> = None;
    // enumerate subsets of the free vertices
    let mut extra = free;
    loop {
        let set = required | extra;
        let size = set.count_ones();
        if best.is_none_or(|b| size - 1 < b) && induces_connected(set) {
            best = Some(size - 1);
        }
        if extra == 0 {
            break;
        }
        extra = (extra - 1) & free;
    }
    best.ok_or(IndexError::DisconnectedTerminals)
}

fn check_subset_size(n: usize, m: usize) -> Result<(), IndexError> {
    if m == 0 || m > n {
        Err(IndexError::BadSubsetSize { m, n })
    } else {
        Ok(())
    }
}

/// Advances `comb` (strictly increasing) to the next combination in
/// colexicographic order among subsets of `0..limit`. Returns false once
/// exhausted.
fn next_colex(comb: &mut [usize], limit: usize) -> bool {
    let k = comb.len();
    for i in 0..k {
        let cap = if i + 1 < k { comb[i + 1] } else { limit };
        if comb[i] + 1 < cap {
            comb[i] += 1;
            for (j, slot) in comb.iter_mut().enumerate().take(i) {
                *slot = j;
            }
            return true;
        }
    }
    false
}

/// Calls `visit` on every `k`-subset of `0..limit` in colexicographic order.
pub fn for_each_subset_colex(limit: usize, k: usize, mut visit: impl FnMut(&[usize])) {
    if k > limit {
        return;
    }
    let mut comb: Vec<usize> = (0..k).collect();
    loop {
        visit(&comb);
        if k == 0 || !next_colex(&mut comb, limit) {
            break;
        }
    }
}

/// Sum of Steiner distances over all `m`-subsets of the vertex set.
///
/// The subsets are split by their largest element and the buckets are summed
/// on the current rayon pool; each worker owns its DP scratch.
pub fn steiner_wiener_naive(g: &Graph, m: usize) -> Result<Count, IndexError> {
    let n = g.n();
    check_subset_size(n, m)?;
    if !g.is_connected() {
        return Err(IndexError::DisconnectedGraph);
    }
    if m > DEFAULT_TERMINAL_CAP {
        return Err(IndexError::TerminalCapExceeded {
            got: m,
            cap: DEFAULT_TERMINAL_CAP,
        });
    }
    if m == 1 {
        return Ok(0);
    }
    let solver = SteinerSolver::new(g);
    let partials: Vec<Result<Count, IndexError>> = ((m - 1)..n)
        .into_par_iter()
        .map_init(
            || (solver.clone(), vec![0usize; m]),
            |(solver, terms), top| {
                let mut sum: Count = 0;
                let mut overflow = false;
                for_each_subset_colex(top, m - 1, |rest| {
                    terms[..m - 1].copy_from_slice(rest);
                    terms[m - 1] = top;
                    let d = solver.distance_unchecked(terms);
                    match sum.checked_add(Count::from(d)) {
                        Some(s) => sum = s,
                        None => overflow = true,
                    }
                });
                if overflow {
                    Err(IndexError::Overflow)
                } else {
                    Ok(sum)
                }
            },
        )
        .collect();
    partials
        .into_iter()
        .try_fold(0, |acc, part| checked_add(acc, part?))
}

/// Number of `m`-subsets [`steiner_wiener_naive`] evaluates on `n` vertices.
pub fn naive_query_count(n: usize, m: usize) -> Result<Count, IndexError> {
    binomial(n, m)
}

/// Sum of hop distances over unordered vertex pairs.
pub fn wiener_index(g: &Graph) -> Result<Count, IndexError> {
    let dist = g.all_pairs_distances();
    let mut total: Count = 0;
    for u in 0..g.n() {
        for v in (u + 1)..g.n() {
            let d = dist.get(u, v).ok_or(IndexError::DisconnectedGraph)?;
            total = checked_add(total, Count::from(d))?;
        }
    }
    Ok(total)
}
