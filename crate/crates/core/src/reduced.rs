//! Wiener and Steiner–Wiener indices computed through twin classes.
//!
//! For a connected graph with classes `C_1..C_k` (sizes `n_i`) and an
//! `m`-subset `S` with `t_i = |S ∩ C_i|`, the Steiner distance depends only on
//! the count vector `t`:
//!
//! * one class, complete (or a singleton): `m - 1`
//! * one class, edgeless: `m`
//! * `l > 1` classes: `d_H(S_r) + Σ (t_i - 1)`, where `S_r` are the
//!   representatives of the touched classes in the reduced graph `H`.
//!
//! Summing over count vectors weighted by `Π C(n_i, t_i)` replaces the walk
//! over all `C(n, m)` subsets; `d_H` is evaluated once per distinct support.

use std::collections::HashMap;

use crate::graph::Graph;
use crate::steiner::{
    binomial, checked_add, checked_mul, Count, IndexError, SteinerSolver, DEFAULT_TERMINAL_CAP,
};
use crate::twins::{ClassKind, TwinDecomposition};

/// Intersection sizes `(t_1, ..., t_k)` of a vertex subset with the twin
/// classes.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ClassProfile {
    counts: Vec<usize>,
}

impl ClassProfile {
    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    pub fn size(&self) -> usize {
        self.counts.iter().sum()
    }

    /// Indices of the classes the subset touches.
    pub fn support(&self) -> Vec<usize> {
        self.counts
            .iter()
            .enumerate()
            .filter(|(_, &t)| t > 0)
            .map(|(i, _)| i)
            .collect()
    }

    /// Number of subsets sharing this profile: `Π C(n_i, t_i)`.
    pub fn multiplicity(&self, sizes: &[usize]) -> Result<Count, IndexError> {
        self.counts
            .iter()
            .zip(sizes)
            .try_fold(1, |acc, (&t, &n)| checked_mul(acc, binomial(n, t)?))
    }
}

/// Every vector `t` with `0 <= t_i <= sizes[i]` and `Σ t_i = m`, in
/// descending lexicographic order.
#[derive(Debug, Clone)]
pub struct Profiles {
    sizes: Vec<usize>,
    current: Option<Vec<usize>>,
}

/// Enumerates class profiles of `m`-subsets for classes of the given sizes.
pub fn profiles(sizes: &[usize], m: usize) -> Result<Profiles, IndexError> {
    let total: usize = sizes.iter().sum();
    if m == 0 || m > total {
        return Err(IndexError::BadSubsetSize { m, n: total });
    }
    let mut first = vec![0; sizes.len()];
    fill_greedy(&mut first, sizes, 0, m);
    Ok(Profiles {
        sizes: sizes.to_vec(),
        current: Some(first),
    })
}

// Places `amount` into slots `from..` taking as much as possible on the left;
// that is the lexicographically largest completion.
fn fill_greedy(counts: &mut [usize], sizes: &[usize], from: usize, mut amount: usize) {
    for i in from..counts.len() {
        let take = amount.min(sizes[i]);
        counts[i] = take;
        amount -= take;
    }
    debug_assert_eq!(amount, 0);
}

impl Iterator for Profiles {
    type Item = ClassProfile;

    fn next(&mut self) -> Option<ClassProfile> {
        let current = self.current.take()?;
        let k = current.len();
        let mut next = current.clone();
        // rightmost position (not the last) that can give one unit to its suffix
        let mut suffix_sum = 0;
        let mut suffix_cap = 0;
        for i in (0..k).rev() {
            if i + 1 < k && next[i] > 0 && suffix_cap > suffix_sum {
                next[i] -= 1;
                fill_greedy(&mut next, &self.sizes, i + 1, suffix_sum + 1);
                self.current = Some(next);
                break;
            }
            suffix_sum += next[i];
            suffix_cap += self.sizes[i];
        }
        Some(ClassProfile { counts: current })
    }
}

fn ensure_connected(d: &TwinDecomposition) -> Result<(), IndexError> {
    if d.source().is_connected() {
        Ok(())
    } else {
        Err(IndexError::DisconnectedGraph)
    }
}

/// Steiner distance of a single-class subset of size `m`.
fn within_class(kind: ClassKind, m: usize) -> usize {
    match kind {
        ClassKind::Complete | ClassKind::Singleton => m - 1,
        ClassKind::Empty if m > 1 => m,
        ClassKind::Empty => 0,
    }
}

/// Steiner distance of `terminals` in the source graph, derived from class
/// counts and a Steiner query on the reduced graph.
pub fn steiner_distance_via_classes(
    d: &TwinDecomposition,
    terminals: &[usize],
) -> Result<u32, IndexError> {
    let n = d.source().n();
    let mut terms = terminals.to_vec();
    terms.sort_unstable();
    terms.dedup();
    if terms.is_empty() {
        return Err(IndexError::EmptyTerminalSet);
    }
    if let Some(&bad) = terms.iter().find(|&&t| t >= n) {
        return Err(IndexError::IndexOutOfRange { index: bad, n });
    }
    ensure_connected(d)?;
    let mut counts = vec![0usize; d.num_classes()];
    for &t in &terms {
        counts[d.class_of(t)] += 1;
    }
    let profile = ClassProfile { counts };
    let support = profile.support();
    let m = terms.len();
    if let [only] = support.as_slice() {
        return Ok(within_class(d.kinds()[*only], m) as u32);
    }
    let dh = SteinerSolver::new(d.reduced()).distance(&support)?;
    Ok(dh + (m - support.len()) as u32)
}

/// Value of a reduced-method evaluation together with work counters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedEvaluation {
    pub value: Count,
    pub num_classes: usize,
    pub num_profiles: u64,
    /// Distinct supports for which a Steiner query on `H` was run.
    pub dh_evaluations: u64,
    pub dh_cache_hits: u64,
}

/// `SW_m` of the source graph via class profiles.
pub fn steiner_wiener_reduced(d: &TwinDecomposition, m: usize) -> Result<Count, IndexError> {
    steiner_wiener_reduced_detailed(d, m).map(|e| e.value)
}

pub fn steiner_wiener_reduced_detailed(
    d: &TwinDecomposition,
    m: usize,
) -> Result<ReducedEvaluation, IndexError> {
    let n = d.source().n();
    if m == 0 || m > n {
        return Err(IndexError::BadSubsetSize { m, n });
    }
    ensure_connected(d)?;
    let sizes = d.class_sizes();
    let kinds = d.kinds();
    let mut solver = SteinerSolver::new(d.reduced());
    let mut memo: HashMap<Vec<usize>, u32> = HashMap::new();
    let mut eval = ReducedEvaluation {
        value: 0,
        num_classes: sizes.len(),
        num_profiles: 0,
        dh_evaluations: 0,
        dh_cache_hits: 0,
    };
    for profile in profiles(&sizes, m)? {
        eval.num_profiles += 1;
        let support = profile.support();
        let distance = if let [only] = support.as_slice() {
            within_class(kinds[*only], m) as Count
        } else {
            if support.len() > DEFAULT_TERMINAL_CAP {
                return Err(IndexError::TerminalCapExceeded {
                    got: support.len(),
                    cap: DEFAULT_TERMINAL_CAP,
                });
            }
            let extra = (m - support.len()) as Count;
            let dh = match memo.get(&support) {
                Some(&dh) => {
                    eval.dh_cache_hits += 1;
                    dh
                }
                None => {
                    eval.dh_evaluations += 1;
                    let dh = solver.distance_unchecked(&support);
                    memo.insert(support, dh);
                    dh
                }
            };
            Count::from(dh) + extra
        };
        let weight = profile.multiplicity(&sizes)?;
        eval.value = checked_add(eval.value, checked_mul(weight, distance)?)?;
    }
    Ok(eval)
}

/// Wiener index from class sizes, class kinds and hop distances in `H`.
pub fn wiener_reduced(d: &TwinDecomposition) -> Result<Count, IndexError> {
    ensure_connected(d)?;
    let sizes = d.class_sizes();
    let mut total: Count = 0;
    for (&size, &kind) in sizes.iter().zip(d.kinds()) {
        let pairs = binomial(size, 2)?;
        let per_pair = match kind {
            ClassKind::Empty => 2,
            _ => 1,
        };
        total = checked_add(total, checked_mul(per_pair, pairs)?)?;
    }
    let dist = d.reduced().all_pairs_distances();
    for i in 0..sizes.len() {
        for j in (i + 1)..sizes.len() {
            let hops = dist.get(i, j).ok_or(IndexError::DisconnectedGraph)?;
            let term = checked_mul(
                checked_mul(sizes[i] as Count, sizes[j] as Count)?,
                Count::from(hops),
            )?;
            total = checked_add(total, term)?;
        }
    }
    Ok(total)
}

/// `SW_m(K_{n_1, ..., n_p}) = C(n, m)(m - 1) + Σ C(n_i, m)`.
pub fn sw_complete_multipartite(parts: &[usize], m: usize) -> Result<Count, IndexError> {
    if parts.len() < 2 {
        return Err(IndexError::NeedTwoParts);
    }
    let n: usize = parts.iter().sum();
    if m == 0 || m > n {
        return Err(IndexError::BadSubsetSize { m, n });
    }
    if m == 1 {
        return Ok(0);
    }
    let spanning = checked_mul(binomial(n, m)?, (m - 1) as Count)?;
    parts
        .iter()
        .try_fold(spanning, |acc, &p| checked_add(acc, binomial(p, m)?))
}

/// Upper bound `C(n, m) * m` on `SW_m` of any graph on `n` vertices whose
/// reduced structure is a complete graph `K_p[G_1, ..., G_p]`.
pub fn sw_completely_joined_bound(n: usize, m: usize) -> Result<Count, IndexError> {
    if m == 0 || m > n {
        return Err(IndexError::BadSubsetSize { m, n });
    }
    checked_mul(binomial(n, m)?, m as Count)
}

/// Convenience: `SW_m` of a graph through its own twin decomposition.
pub fn steiner_wiener_of(g: &Graph, m: usize) -> Result<Count, IndexError> {
    steiner_wiener_reduced(&crate::twins::twin_partition(g), m)
}
