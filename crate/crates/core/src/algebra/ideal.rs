use std::collections::{BTreeSet, HashSet};

use super::ring::FiniteRing;
use super::AlgebraError;

/// Largest ring for which the ideal lattice is enumerated.
pub const IDEAL_ENUM_CAP: usize = 256;

/// An ideal of a [`FiniteRing`], stored as its sorted element set.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ideal {
    elements: Vec<usize>,
    ring: u64,
}

impl Ideal {
    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    pub fn is_proper(&self, r: &FiniteRing) -> bool {
        self.elements.len() < r.size()
    }

    pub fn is_subset_of(&self, other: &Ideal) -> bool {
        self.elements.iter().all(|&x| other.contains(x))
    }

    fn check_ring(&self, r: &FiniteRing) -> Result<(), AlgebraError> {
        if self.ring == r.fingerprint() {
            Ok(())
        } else {
            Err(AlgebraError::RingMismatch)
        }
    }
}

/// Additive closure of `seeds` together with zero.
fn additive_span(r: &FiniteRing, seeds: &BTreeSet<usize>) -> Vec<usize> {
    let mut inside = vec![false; r.size()];
    inside[r.zero()] = true;
    let mut stack = vec![r.zero()];
    let mut members = vec![r.zero()];
    while let Some(x) = stack.pop() {
        for &s in seeds {
            let y = r.add(x, s);
            if !inside[y] {
                inside[y] = true;
                members.push(y);
                stack.push(y);
            }
        }
    }
    members.sort_unstable();
    members
}

/// Smallest ideal containing `gens`: the additive span of `{r g}`.
pub fn ideal_generated(r: &FiniteRing, gens: &[usize]) -> Result<Ideal, AlgebraError> {
    let mut seeds = BTreeSet::new();
    for &g in gens {
        if g >= r.size() {
            return Err(AlgebraError::IndexOutOfRange {
                index: g,
                size: r.size(),
            });
        }
        seeds.extend((0..r.size()).map(|x| r.mul(x, g)));
    }
    Ok(Ideal {
        elements: additive_span(r, &seeds),
        ring: r.fingerprint(),
    })
}

/// `I + J`.
pub fn ideal_sum(r: &FiniteRing, a: &Ideal, b: &Ideal) -> Result<Ideal, AlgebraError> {
    a.check_ring(r)?;
    b.check_ring(r)?;
    let seeds: BTreeSet<usize> = a.elements.iter().chain(&b.elements).copied().collect();
    Ok(Ideal {
        elements: additive_span(r, &seeds),
        ring: r.fingerprint(),
    })
}

fn check_enum_cap(r: &FiniteRing) -> Result<(), AlgebraError> {
    if r.size() > IDEAL_ENUM_CAP {
        Err(AlgebraError::RingTooLarge {
            size: r.size(),
            cap: IDEAL_ENUM_CAP,
        })
    } else {
        Ok(())
    }
}

/// Every ideal of `r` once, sorted by (size, elements). Built as the closure
/// of the principal ideals under pairwise sums.
pub fn all_ideals(r: &FiniteRing) -> Result<Vec<Ideal>, AlgebraError> {
    check_enum_cap(r)?;
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut ideals: Vec<Ideal> = Vec::new();
    for x in 0..r.size() {
        let principal = ideal_generated(r, &[x])?;
        if seen.insert(principal.elements.clone()) {
            ideals.push(principal);
        }
    }
    let principal_count = ideals.len();
    // every ideal is a sum of principal ideals; extend by one principal
    // summand at a time until nothing new appears
    let mut frontier: Vec<usize> = (0..ideals.len()).collect();
    while !frontier.is_empty() {
        let mut fresh = Vec::new();
        for &i in &frontier {
            for p in 0..principal_count {
                let sum = ideal_sum(r, &ideals[i], &ideals[p])?;
                if seen.insert(sum.elements.clone()) {
                    fresh.push(ideals.len());
                    ideals.push(sum);
                }
            }
        }
        frontier = fresh;
    }
    ideals.sort_by(|a, b| (a.len(), &a.elements).cmp(&(b.len(), &b.elements)));
    Ok(ideals)
}

/// Proper ideals not strictly contained in another proper ideal.
pub fn maximal_ideals(r: &FiniteRing) -> Result<Vec<Ideal>, AlgebraError> {
    let proper: Vec<Ideal> = all_ideals(r)?
        .into_iter()
        .filter(|i| i.is_proper(r))
        .collect();
    Ok(proper
        .iter()
        .filter(|i| {
            !proper
                .iter()
                .any(|j| j.len() > i.len() && i.is_subset_of(j))
        })
        .cloned()
        .collect())
}

/// Intersection of all maximal ideals.
pub fn jacobson_radical(r: &FiniteRing) -> Result<Ideal, AlgebraError> {
    let maximal = maximal_ideals(r)?;
    let elements = (0..r.size())
        .filter(|&x| maximal.iter().all(|m| m.contains(x)))
        .collect();
    Ok(Ideal {
        elements,
        ring: r.fingerprint(),
    })
}

/// `I + J = R`.
pub fn is_comaximal(r: &FiniteRing, a: &Ideal, b: &Ideal) -> Result<bool, AlgebraError> {
    Ok(ideal_sum(r, a, b)?.contains(r.one()))
}

/// Short description of an ideal. Product rings are described factor by
/// factor (`"(0)xZ2"`); otherwise the whole ring prints as its name, the zero
/// ideal as `(0)`, and anything else by a generating set `(g, ...)`.
pub fn describe_ideal(r: &FiniteRing, ideal: &Ideal) -> String {
    if r.factors().is_empty() {
        return describe_in(r, ideal.elements());
    }
    let mut projections: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); r.factors().len()];
    for &x in ideal.elements() {
        for (slot, c) in projections.iter_mut().zip(r.coordinates(x)) {
            slot.insert(c);
        }
    }
    r.factors()
        .iter()
        .zip(projections)
        .map(|(f, set)| describe_in(f, &set.into_iter().collect::<Vec<_>>()))
        .collect::<Vec<_>>()
        .join("x")
}

fn describe_in(r: &FiniteRing, elements: &[usize]) -> String {
    if elements.len() == r.size() {
        return r.name().to_string();
    }
    if elements.len() <= 1 {
        return "(0)".to_string();
    }
    // greedy generating set, smallest element indices first
    let mut gens: Vec<usize> = Vec::new();
    let mut span = vec![r.zero()];
    for &x in elements {
        if span.binary_search(&x).is_err() {
            gens.push(x);
            span = ideal_generated(r, &gens)
                .expect("generators are ring elements")
                .elements;
            if span.len() == elements.len() {
                break;
            }
        }
    }
    let names: Vec<&str> = gens.iter().map(|&g| r.label(g)).collect();
    format!("({})", names.join(","))
}
