#![allow(dead_code)]

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use twindex::{generalized_composition, CompositionSpec, Graph};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    Graph::from_predicate(n, |_, _| rng.gen_bool(p))
}

/// Random spanning tree plus independent extra edges with probability `p`.
pub fn random_connected_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut edges = Vec::new();
    for i in 1..n {
        let parent = order[rng.gen_range(0..i)];
        edges.push((parent, order[i]));
    }
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).expect("valid edges")
}

/// A factor that is complete, edgeless or random, so compositions carry
/// both kinds of twins.
pub fn random_factor(rng: &mut impl Rng, size: usize) -> Graph {
    match rng.gen_range(0..3) {
        0 => Graph::complete(size),
        1 => Graph::empty(size),
        _ => random_graph(rng, size, 0.5),
    }
}

/// Connected `H[G_1, ..., G_k]` on at most `max_n` vertices.
pub fn random_composition(rng: &mut impl Rng, max_n: usize) -> Graph {
    let k = rng.gen_range(1..=max_n.min(6));
    let base = random_connected_graph(rng, k, 0.3);
    let mut budget = max_n - k;
    let mut factors = Vec::with_capacity(k);
    for _ in 0..k {
        let extra = rng.gen_range(0..=budget.min(4));
        budget -= extra;
        factors.push(random_factor(rng, 1 + extra));
    }
    let g = generalized_composition(&CompositionSpec::new(base, factors).expect("arity"))
        .expect("composition");
    if g.n() == 1 || g.is_connected() {
        g
    } else {
        // a single-vertex base over an edgeless factor
        Graph::complete(g.n())
    }
}

/// `K_p[G_1, ..., G_p]` with `p >= 2` and at most `max_n` vertices.
pub fn completely_joined(rng: &mut impl Rng, max_n: usize) -> Graph {
    let p = rng.gen_range(2..=max_n.min(5));
    let mut sizes = vec![1usize; p];
    for _ in 0..rng.gen_range(0..=(max_n - p)) {
        let i = rng.gen_range(0..p);
        sizes[i] += 1;
    }
    let factors = sizes.iter().map(|&s| random_factor(rng, s)).collect();
    generalized_composition(&CompositionSpec::new(Graph::complete(p), factors).expect("arity"))
        .expect("composition")
}

/// Twin partition straight from the definition, for cross-checking.
pub fn pairwise_twin_classes(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let nbhd = |u: usize, skip: usize| -> BTreeSet<usize> {
        g.neighbors(u)
            .unwrap()
            .iter()
            .copied()
            .filter(|&w| w != skip)
            .collect()
    };
    let mut class_of: Vec<Option<usize>> = vec![None; n];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for u in 0..n {
        if class_of[u].is_some() {
            continue;
        }
        class_of[u] = Some(classes.len());
        let mut class = vec![u];
        for (v, slot) in class_of.iter_mut().enumerate().skip(u + 1) {
            if slot.is_none() && nbhd(u, v) == nbhd(v, u) {
                *slot = Some(classes.len());
                class.push(v);
            }
        }
        classes.push(class);
    }
    classes
}

/// Edge mask over the pairs `(i, j)`, `i < j`, in row-major order.
fn edge_code(g: &Graph, order: &[usize]) -> u64 {
    let n = order.len();
    let mut code = 0u64;
    let mut bit = 0;
    for i in 0..n {
        for j in (i + 1)..n {
            if g.has_edge(order[i], order[j]) {
                code |= 1 << bit;
            }
            bit += 1;
        }
    }
    code
}

/// Canonical form: the smallest edge code over vertex orders that sort by
/// degree, permuting freely inside each degree cell.
pub fn canonical_code(g: &Graph) -> u64 {
    let n = g.n();
    let mut by_degree: Vec<usize> = (0..n).collect();
    by_degree.sort_by_key(|&v| g.degree(v));
    let slot_degree: Vec<usize> = by_degree.iter().map(|&v| g.degree(v)).collect();
    let mut best = u64::MAX;
    let mut order = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn walk(
        g: &Graph,
        slot_degree: &[usize],
        order: &mut Vec<usize>,
        used: &mut [bool],
        best: &mut u64,
    ) {
        let i = order.len();
        if i == slot_degree.len() {
            *best = (*best).min(edge_code(g, order));
            return;
        }
        for v in 0..slot_degree.len() {
            if !used[v] && g.degree(v) == slot_degree[i] {
                used[v] = true;
                order.push(v);
                walk(g, slot_degree, order, used, best);
                order.pop();
                used[v] = false;
            }
        }
    }
    walk(g, &slot_degree, &mut order, &mut used, &mut best);
    best
}

/// One representative per isomorphism class of connected graphs on
/// `1..=max_n` vertices, grouped by vertex count.
pub fn connected_graphs_up_to_iso(max_n: usize) -> Vec<Vec<Graph>> {
    let mut levels: Vec<Vec<Graph>> = vec![vec![Graph::empty(1)]];
    for n in 2..=max_n {
        let mut seen = BTreeSet::new();
        let mut next = Vec::new();
        for g in levels.last().expect("previous level") {
            let old = g.edges();
            for mask in 1u32..(1 << (n - 1)) {
                let mut edges = old.clone();
                edges.extend(
                    (0..n - 1)
                        .filter(|v| mask & (1 << v) != 0)
                        .map(|v| (v, n - 1)),
                );
                let h = Graph::new(n, &edges).expect("valid edges");
                if seen.insert(canonical_code(&h)) {
                    next.push(h);
                }
            }
        }
        levels.push(next);
    }
    levels
}
