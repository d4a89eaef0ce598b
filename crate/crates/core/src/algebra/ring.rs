use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};

use super::AlgebraError;

/// Largest ring accepted; axioms are checked with `O(size^3)` scans.
pub const RING_SIZE_CAP: usize = 512;

/// Finite commutative ring with unity given by addition and multiplication
/// tables over the elements `0..size`.
#[derive(Debug, Clone)]
pub struct FiniteRing {
    name: String,
    size: usize,
    add: Vec<usize>,
    mul: Vec<usize>,
    zero: usize,
    one: usize,
    labels: Vec<String>,
    factors: Vec<FiniteRing>,
    fingerprint: u64,
}

impl PartialEq for FiniteRing {
    fn eq(&self, other: &Self) -> bool {
        self.fingerprint == other.fingerprint
            && self.size == other.size
            && self.add == other.add
            && self.mul == other.mul
    }
}

impl Eq for FiniteRing {}

impl FiniteRing {
    /// Validates every ring axiom on explicit tables
    /// (`add[a * size + b] = a + b`, likewise `mul`).
    pub fn from_tables(
        name: impl Into<String>,
        add: Vec<usize>,
        mul: Vec<usize>,
        labels: Vec<String>,
    ) -> Result<Self, AlgebraError> {
        Self::assemble(name.into(), add, mul, labels, Vec::new())
    }

    fn assemble(
        name: String,
        add: Vec<usize>,
        mul: Vec<usize>,
        labels: Vec<String>,
        factors: Vec<FiniteRing>,
    ) -> Result<Self, AlgebraError> {
        let size = labels.len();
        if size == 0 {
            return Err(AlgebraError::BadParameter(
                "a ring needs at least one element".into(),
            ));
        }
        if size > RING_SIZE_CAP {
            return Err(AlgebraError::BadParameter(format!(
                "ring size {size} exceeds the cap of {RING_SIZE_CAP}"
            )));
        }
        if add.len() != size * size
            || mul.len() != size * size
            || add.iter().chain(&mul).any(|&x| x >= size)
        {
            return Err(AlgebraError::AxiomViolated(
                "operation tables have the wrong shape or out-of-range entries".into(),
            ));
        }
        let plus = |a: usize, b: usize| add[a * size + b];
        let times = |a: usize, b: usize| mul[a * size + b];
        let violated = |what: &str| Err(AlgebraError::AxiomViolated(what.to_string()));

        let zero = match (0..size).find(|&z| (0..size).all(|a| plus(z, a) == a)) {
            Some(z) => z,
            None => return violated("no additive identity"),
        };
        let one = match (0..size).find(|&e| (0..size).all(|a| times(e, a) == a)) {
            Some(e) => e,
            None => return violated("no multiplicative identity"),
        };
        if size >= 2 && zero == one {
            return violated("zero equals one");
        }
        for a in 0..size {
            if !(0..size).any(|b| plus(a, b) == zero) {
                return violated("missing additive inverse");
            }
            for b in 0..size {
                if plus(a, b) != plus(b, a) {
                    return violated("addition is not commutative");
                }
                if times(a, b) != times(b, a) {
                    return violated("multiplication is not commutative");
                }
            }
        }
        for a in 0..size {
            for b in 0..size {
                let (ab_sum, ab_prod) = (plus(a, b), times(a, b));
                for c in 0..size {
                    if plus(ab_sum, c) != plus(a, plus(b, c)) {
                        return violated("addition is not associative");
                    }
                    if times(ab_prod, c) != times(a, times(b, c)) {
                        return violated("multiplication is not associative");
                    }
                    if times(a, plus(b, c)) != plus(ab_prod, times(a, c)) {
                        return violated("multiplication does not distribute over addition");
                    }
                }
            }
        }
        let mut hasher = DefaultHasher::new();
        (&name, &add, &mul).hash(&mut hasher);
        Ok(FiniteRing {
            name,
            size,
            add,
            mul,
            zero,
            one,
            labels,
            factors,
            fingerprint: hasher.finish(),
        })
    }

    fn from_fn(
        name: String,
        labels: Vec<String>,
        factors: Vec<FiniteRing>,
        add: impl Fn(usize, usize) -> usize,
        mul: impl Fn(usize, usize) -> usize,
    ) -> Result<Self, AlgebraError> {
        let size = labels.len();
        if size > RING_SIZE_CAP {
            return Err(AlgebraError::BadParameter(format!(
                "ring size {size} exceeds the cap of {RING_SIZE_CAP}"
            )));
        }
        let mut add_table = Vec::with_capacity(size * size);
        let mut mul_table = Vec::with_capacity(size * size);
        for a in 0..size {
            for b in 0..size {
                add_table.push(add(a, b));
                mul_table.push(mul(a, b));
            }
        }
        Self::assemble(name, add_table, mul_table, labels, factors)
    }

    /// `Z_n`, labels `"0".."n-1"`.
    pub fn zmod(n: usize) -> Result<Self, AlgebraError> {
        if n < 2 {
            return Err(AlgebraError::BadParameter("Z_n needs n >= 2".into()));
        }
        Self::from_fn(
            format!("Z{n}"),
            (0..n).map(|x| x.to_string()).collect(),
            Vec::new(),
            |a, b| (a + b) % n,
            |a, b| (a * b) % n,
        )
    }

    /// `Z_p[x] / (f)` for prime `p` and monic `f` given by ascending
    /// coefficients. Element index `Σ c_i p^i` stands for `Σ c_i x^i`.
    pub fn quotient_poly(p: usize, modulus: &[usize]) -> Result<Self, AlgebraError> {
        if !is_prime(p) {
            return Err(AlgebraError::BadParameter(format!("{p} is not prime")));
        }
        let degree = modulus.len().saturating_sub(1);
        if degree == 0 || modulus[degree] % p != 1 {
            return Err(AlgebraError::BadParameter(
                "modulus must be monic of degree at least 1".into(),
            ));
        }
        let size = p
            .checked_pow(degree as u32)
            .filter(|&s| s <= RING_SIZE_CAP)
            .ok_or_else(|| {
                AlgebraError::BadParameter(format!("ring size exceeds the cap of {RING_SIZE_CAP}"))
            })?;
        let f: Vec<usize> = modulus.iter().map(|c| c % p).collect();
        let digits = |mut x: usize| {
            let mut c = vec![0; degree];
            for slot in &mut c {
                *slot = x % p;
                x /= p;
            }
            c
        };
        let pack = |c: &[usize]| c.iter().rev().fold(0, |acc, &d| acc * p + d);
        let mul = |a: usize, b: usize| {
            let (ca, cb) = (digits(a), digits(b));
            let mut prod = vec![0usize; 2 * degree];
            for (i, &x) in ca.iter().enumerate() {
                for (j, &y) in cb.iter().enumerate() {
                    prod[i + j] = (prod[i + j] + x * y) % p;
                }
            }
            // reduce with x^degree = -(f_0 + ... + f_{degree-1} x^{degree-1})
            for top in (degree..2 * degree).rev() {
                let c = prod[top];
                if c == 0 {
                    continue;
                }
                prod[top] = 0;
                for (k, &fk) in f.iter().enumerate().take(degree) {
                    let slot = &mut prod[top - degree + k];
                    *slot = (*slot + (p - c) * fk) % p;
                }
            }
            pack(&prod[..degree])
        };
        let add = |a: usize, b: usize| {
            let (ca, cb) = (digits(a), digits(b));
            let sum: Vec<usize> = ca.iter().zip(&cb).map(|(x, y)| (x + y) % p).collect();
            pack(&sum)
        };
        let labels = (0..size).map(|x| poly_label(&digits(x))).collect();
        let name = format!("Z{p}[x]/({})", poly_text(&f));
        Self::from_fn(name, labels, Vec::new(), add, mul)
    }

    /// Direct product. Nested products are flattened; element labels are
    /// tuples `"(a,b,...)"` and the first factor is most significant.
    pub fn product(parts: &[FiniteRing]) -> Result<Self, AlgebraError> {
        let mut factors = Vec::new();
        for part in parts {
            if part.factors.is_empty() {
                factors.push(part.clone());
            } else {
                factors.extend(part.factors.iter().cloned());
            }
        }
        match factors.len() {
            0 => return Err(AlgebraError::BadParameter("empty ring product".into())),
            1 => return Ok(factors.pop().expect("one factor")),
            _ => {}
        }
        let size = factors
            .iter()
            .try_fold(1usize, |acc, f| acc.checked_mul(f.size))
            .filter(|&s| s <= RING_SIZE_CAP)
            .ok_or_else(|| {
                AlgebraError::BadParameter(format!("ring size exceeds the cap of {RING_SIZE_CAP}"))
            })?;
        let split = |mut x: usize| {
            let mut coords = vec![0; factors.len()];
            for (slot, f) in coords.iter_mut().zip(&factors).rev() {
                *slot = x % f.size;
                x /= f.size;
            }
            coords
        };
        let combine = |a: usize, b: usize, op: fn(&FiniteRing, usize, usize) -> usize| {
            split(a)
                .iter()
                .zip(split(b))
                .zip(&factors)
                .fold(0, |acc, ((&x, y), f)| acc * f.size + op(f, x, y))
        };
        let labels = (0..size)
            .map(|x| {
                let coords: Vec<&str> = split(x)
                    .iter()
                    .zip(&factors)
                    .map(|(&c, f)| f.labels[c].as_str())
                    .collect();
                format!("({})", coords.join(","))
            })
            .collect();
        let name = factors
            .iter()
            .map(|f| f.name.as_str())
            .collect::<Vec<_>>()
            .join("x");
        Self::from_fn(
            name,
            labels,
            factors.clone(),
            |a, b| combine(a, b, FiniteRing::add),
            |a, b| combine(a, b, FiniteRing::mul),
        )
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn one(&self) -> usize {
        self.one
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Direct factors when built as a product; empty otherwise.
    pub fn factors(&self) -> &[FiniteRing] {
        &self.factors
    }

    /// Coordinates of `x` in the direct factors (empty for non-products).
    pub fn coordinates(&self, mut x: usize) -> Vec<usize> {
        let mut coords = vec![0; self.factors.len()];
        for (slot, f) in coords.iter_mut().zip(&self.factors).rev() {
            *slot = x % f.size;
            x /= f.size;
        }
        coords
    }

    pub(crate) fn fingerprint(&self) -> u64 {
        self.fingerprint
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.size + b]
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.size + b]
    }

    pub fn is_unit(&self, a: usize) -> bool {
        (0..self.size).any(|b| self.mul(a, b) == self.one)
    }
}

pub(crate) fn is_prime(p: usize) -> bool {
    p >= 2
        && (2..)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d))
}

fn poly_label(coeffs: &[usize]) -> String {
    let terms: Vec<String> = coeffs
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(i, &c)| {
            let coef = if c == 1 && i > 0 {
                String::new()
            } else {
                c.to_string()
            };
            match i {
                0 => coef,
                1 => format!("{coef}x"),
                _ => format!("{coef}x{i}"),
            }
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join("+")
    }
}

/// Polynomial in the `x^k` notation used by ring specs, highest degree first.
fn poly_text(coeffs: &[usize]) -> String {
    let terms: Vec<String> = coeffs
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, &c)| c != 0)
        .map(|(i, &c)| {
            let coef = if c == 1 && i > 0 {
                String::new()
            } else {
                c.to_string()
            };
            match i {
                0 => coef,
                1 => format!("{coef}x"),
                _ => format!("{coef}x^{i}"),
            }
        })
        .collect();
    terms.join("+")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integers_mod_n() {
        let z24 = FiniteRing::zmod(24).unwrap();
        assert_eq!(z24.size(), 24);
        assert_eq!(z24.label(z24.one()), "1");
        assert_eq!(z24.mul(5, 7), 11);
        assert!(z24.is_unit(5) && !z24.is_unit(6));
        assert!(FiniteRing::zmod(1).is_err());
    }

    #[test]
    fn truncated_polynomials() {
        let r = FiniteRing::quotient_poly(2, &[0, 0, 0, 1]).unwrap();
        assert_eq!(r.size(), 8);
        assert_eq!(r.name(), "Z2[x]/(x^3)");
        let x = r.index_of("x").unwrap();
        let x2 = r.mul(x, x);
        assert_eq!(r.label(x2), "x2");
        assert_eq!(r.mul(x2, x), r.zero());
        assert!(r.index_of("x+x2").is_some());
        assert!(r.index_of("1+x").is_some());
    }

    #[test]
    fn finite_field_of_four() {
        let f4 = FiniteRing::quotient_poly(2, &[1, 1, 1]).unwrap();
        assert!((0..4).filter(|&a| a != f4.zero()).all(|a| f4.is_unit(a)));
        let z3x = FiniteRing::quotient_poly(3, &[0, 0, 1]).unwrap();
        assert_eq!(z3x.size(), 9);
        assert_eq!(z3x.label(z3x.add(z3x.index_of("2x").unwrap(), 1)), "1+2x");
    }

    #[test]
    fn bad_quotients() {
        assert!(FiniteRing::quotient_poly(4, &[0, 1]).is_err());
        assert!(FiniteRing::quotient_poly(2, &[1]).is_err());
        assert!(FiniteRing::quotient_poly(2, &[0, 0, 2]).is_err());
    }

    #[test]
    fn products() {
        let r = FiniteRing::product(&[FiniteRing::zmod(6).unwrap(), FiniteRing::zmod(2).unwrap()])
            .unwrap();
        assert_eq!(r.size(), 12);
        assert_eq!(r.name(), "Z6xZ2");
        assert_eq!(r.label(r.one()), "(1,1)");
        let a = r.index_of("(3,1)").unwrap();
        let b = r.index_of("(2,1)").unwrap();
        assert_eq!(r.label(r.mul(a, b)), "(0,1)");
        assert_eq!(r.coordinates(a), vec![3, 1]);

        let nested = FiniteRing::product(&[r.clone(), FiniteRing::zmod(3).unwrap()]).unwrap();
        assert_eq!(nested.factors().len(), 3);
        assert_eq!(nested.size(), 36);
    }

    #[test]
    fn axiom_checks() {
        // Z_2 tables with a broken multiplication (1 * 1 = 0)
        let add = vec![0, 1, 1, 0];
        let mul = vec![0, 0, 0, 0];
        let err = FiniteRing::from_tables("bad", add, mul, vec!["0".into(), "1".into()]);
        assert!(matches!(err, Err(AlgebraError::AxiomViolated(_))));
        assert!(is_prime(2) && is_prime(97) && !is_prime(1) && !is_prime(91));
    }
}
