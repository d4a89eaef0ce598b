//! Published reference values for the algebraic graph families, checked by
//! the `verify-paper` subcommand against both index routes.

use std::time::Instant;

use crate::generators::{family_from_spec, multipartite_parts, GeneratorError};
use crate::reduced::{steiner_wiener_reduced, sw_complete_multipartite};
use crate::steiner::{binomial, steiner_wiener_naive, Count, IndexError};
use crate::twins::twin_partition;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReferenceCase {
    pub name: String,
    pub family: String,
    pub m: usize,
    pub expected: Count,
}

impl ReferenceCase {
    fn new(name: &str, family: &str, m: usize, expected: Count) -> Self {
        ReferenceCase {
            name: name.to_string(),
            family: family.to_string(),
            m,
            expected,
        }
    }
}

/// `m C(n-1, m) + (m-1) C(n-1, m-1)`: `SW_m` of the star `K_{1, n-1}`.
pub fn star_formula(n: usize, m: usize) -> Result<Count, IndexError> {
    let leaves_only = binomial(n - 1, m)? * m as Count;
    let with_centre = binomial(n - 1, m - 1)? * (m as Count - 1);
    leaves_only
        .checked_add(with_centre)
        .ok_or(IndexError::Overflow)
}

pub fn reference_cases() -> Vec<ReferenceCase> {
    let mut cases = vec![
        ReferenceCase::new("SW_3 power graph Z6", "power:Z6", 3, 41),
        ReferenceCase::new("W power graph D12", "power:D12", 2, 113),
        ReferenceCase::new("SW_6 power graph Q8", "power:Q8", 6, 141),
        ReferenceCase::new("SW_5 K_{3,3,3}", "multipartite:3,3,3", 5, 504),
        ReferenceCase::new(
            "SW_8 ideal zero-divisor Z24, I=(8)",
            "izdg:Z24:I=(8)",
            8,
            63,
        ),
        ReferenceCase::new(
            "SW_4 ideal zero-divisor Z2[x]/(x^3)xZ2, I=(0)xZ2",
            "izdg:Z2[x]/(x^3)xZ2:I=((0,1))",
            4,
            46,
        ),
        ReferenceCase::new(
            "W ideal zero-divisor Z6xZ2, I=(0)xZ2",
            "izdg:Z6xZ2:I=((0,1))",
            2,
            22,
        ),
        ReferenceCase::new("SW_8 comaximal Z2xZ2xZ4", "comax:Z2xZ2xZ4", 8, 65),
        ReferenceCase::new("W comaximal Z8xZ9", "comax:Z8xZ9", 2, 14),
        ReferenceCase::new("W comaximal Z3xZ5xZ9", "comax:Z3xZ5xZ9", 2, 69),
    ];
    for n in 4..=10 {
        for m in 2..n {
            let expected = star_formula(n, m).expect("small star values fit");
            cases.push(ReferenceCase {
                name: format!("SW_{m} star K_1,{}", n - 1),
                family: format!("star:{n}"),
                m,
                expected,
            });
        }
    }
    cases
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CaseError {
    Generator(GeneratorError),
    Index(IndexError),
}

impl std::fmt::Display for CaseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CaseError::Generator(e) => e.fmt(f),
            CaseError::Index(e) => e.fmt(f),
        }
    }
}

#[derive(Debug, Clone)]
pub struct CaseOutcome {
    pub case: ReferenceCase,
    pub naive: Result<Count, CaseError>,
    pub reduced: Result<Count, CaseError>,
    /// Present for complete multipartite families.
    pub closed_form: Option<Result<Count, CaseError>>,
    pub elapsed_ms: f64,
}

impl CaseOutcome {
    pub fn passed(&self) -> bool {
        let hit = |r: &Result<Count, CaseError>| r.as_ref().is_ok_and(|&v| v == self.case.expected);
        hit(&self.naive) && hit(&self.reduced) && self.closed_form.as_ref().is_none_or(hit)
    }
}

pub fn evaluate(case: &ReferenceCase) -> CaseOutcome {
    let started = Instant::now();
    let generated = family_from_spec(&case.family).map_err(CaseError::Generator);
    let (naive, reduced) = match &generated {
        Ok(g) => {
            let naive = steiner_wiener_naive(&g.graph, case.m).map_err(CaseError::Index);
            let reduced =
                steiner_wiener_reduced(&twin_partition(&g.graph), case.m).map_err(CaseError::Index);
            (naive, reduced)
        }
        Err(e) => (Err(e.clone()), Err(e.clone())),
    };
    let closed_form = multipartite_parts(&case.family)
        .map(|parts| sw_complete_multipartite(&parts, case.m).map_err(CaseError::Index));
    CaseOutcome {
        case: case.clone(),
        naive,
        reduced,
        closed_form,
        elapsed_ms: started.elapsed().as_secs_f64() * 1e3,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn star_formula_small() {
        // K_{1,3}, m = 2: three leaf pairs at distance 2, three centre pairs at 1
        assert_eq!(star_formula(4, 2).unwrap(), 9);
        assert_eq!(star_formula(4, 3).unwrap(), 3 + 2 * 3);
    }

    #[test]
    fn catalog_shape() {
        let cases = reference_cases();
        assert_eq!(cases.len(), 10 + (2..=8).sum::<usize>());
        assert!(cases.iter().all(|c| c.m >= 2));
    }
}
