use super::AlgebraError;

/// Largest group order accepted; construction checks associativity with an
/// `O(order^3)` scan.
pub const GROUP_ORDER_CAP: usize = 1024;

/// Finite group given by its Cayley table. Elements are `0..order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<usize>,
    identity: usize,
    labels: Vec<String>,
}

impl FiniteGroup {
    /// Validates the group axioms on an explicit Cayley table
    /// (`table[a * order + b] = a·b`).
    pub fn from_table(table: Vec<usize>, labels: Vec<String>) -> Result<Self, AlgebraError> {
        let order = labels.len();
        if order == 0 {
            return Err(AlgebraError::BadParameter(
                "a group needs at least one element".into(),
            ));
        }
        if order > GROUP_ORDER_CAP {
            return Err(AlgebraError::BadParameter(format!(
                "group order {order} exceeds the cap of {GROUP_ORDER_CAP}"
            )));
        }
        if table.len() != order * order || table.iter().any(|&x| x >= order) {
            return Err(AlgebraError::AxiomViolated(
                "Cayley table has the wrong shape or out-of-range entries".into(),
            ));
        }
        let op = |a: usize, b: usize| table[a * order + b];
        let identity = (0..order)
            .find(|&e| (0..order).all(|a| op(e, a) == a && op(a, e) == a))
            .ok_or_else(|| AlgebraError::AxiomViolated("no identity element".into()))?;
        for (a, label) in labels.iter().enumerate() {
            if !(0..order).any(|b| op(a, b) == identity) {
                return Err(AlgebraError::AxiomViolated(format!(
                    "element {label} has no inverse"
                )));
            }
        }
        for a in 0..order {
            for b in 0..order {
                let ab = op(a, b);
                for c in 0..order {
                    if op(ab, c) != op(a, op(b, c)) {
                        return Err(AlgebraError::AxiomViolated(format!(
                            "operation is not associative on ({}, {}, {})",
                            labels[a], labels[b], labels[c]
                        )));
                    }
                }
            }
        }
        Ok(FiniteGroup {
            order,
            table,
            identity,
            labels,
        })
    }

    fn from_fn(
        order: usize,
        labels: Vec<String>,
        op: impl Fn(usize, usize) -> usize,
    ) -> Result<Self, AlgebraError> {
        if order > GROUP_ORDER_CAP {
            return Err(AlgebraError::BadParameter(format!(
                "group order {order} exceeds the cap of {GROUP_ORDER_CAP}"
            )));
        }
        let mut table = Vec::with_capacity(order * order);
        for a in 0..order {
            for b in 0..order {
                table.push(op(a, b));
            }
        }
        Self::from_table(table, labels)
    }

    /// `Z_n` under addition, labels `"0".."n-1"`.
    pub fn cyclic(n: usize) -> Result<Self, AlgebraError> {
        if n == 0 {
            return Err(AlgebraError::BadParameter(
                "cyclic group needs n >= 1".into(),
            ));
        }
        Self::from_fn(n, (0..n).map(|x| x.to_string()).collect(), |a, b| {
            (a + b) % n
        })
    }

    /// Dihedral group of order `2n`: index `i < n` is `r^i`, index `n + i`
    /// is `s r^i`. Uses `r^i s = s r^{-i}`.
    pub fn dihedral(n: usize) -> Result<Self, AlgebraError> {
        if n < 3 {
            return Err(AlgebraError::BadParameter(
                "dihedral group needs n >= 3".into(),
            ));
        }
        let power = |i: usize| match i {
            0 => String::new(),
            1 => "r".to_string(),
            _ => format!("r{i}"),
        };
        let mut labels: Vec<String> = (0..n)
            .map(|i| if i == 0 { "1".to_string() } else { power(i) })
            .collect();
        labels.extend((0..n).map(|i| format!("s{}", power(i))));
        Self::from_fn(2 * n, labels, |a, b| {
            let (fa, ia) = (a / n, a % n);
            let (fb, ib) = (b / n, b % n);
            // (s^fa r^ia)(s^fb r^ib) = s^(fa+fb) r^((-1)^fb ia + ib)
            let rot = if fb == 0 {
                (ia + ib) % n
            } else {
                (n - ia + ib) % n
            };
            ((fa + fb) % 2) * n + rot
        })
    }

    /// `Q_8 = <a, b | a^4 = 1, b^2 = a^2, b^-1 a b = a^-1>`; index
    /// `f * 4 + i` is `a^i b^f`.
    pub fn quaternion8() -> Result<Self, AlgebraError> {
        let labels = ["1", "a", "a2", "a3", "b", "ab", "a2b", "a3b"]
            .map(String::from)
            .to_vec();
        Self::from_fn(8, labels, |x, y| {
            let (fx, ix) = (x / 4, x % 4);
            let (fy, iy) = (y / 4, y % 4);
            // b a^j = a^-j b, and b^2 = a^2
            let mut rot = if fx == 0 { ix + iy } else { ix + 4 - iy };
            let mut f = fx + fy;
            if f == 2 {
                rot += 2;
                f = 0;
            }
            f * 4 + rot % 4
        })
    }

    /// `(Z_2)^k` with bit-string labels, most significant coordinate first.
    pub fn elementary_abelian_2(k: usize) -> Result<Self, AlgebraError> {
        if k == 0 || k > 10 {
            return Err(AlgebraError::BadParameter(
                "elementary abelian 2-group needs 1 <= k <= 10".into(),
            ));
        }
        let order = 1usize << k;
        let labels = (0..order).map(|x| format!("{x:0k$b}")).collect();
        Self::from_fn(order, labels, |a, b| a ^ b)
    }

    /// Direct product; element index is mixed-radix with the first factor
    /// most significant.
    pub fn product(factors: &[FiniteGroup]) -> Result<Self, AlgebraError> {
        if factors.is_empty() {
            return Err(AlgebraError::BadParameter("empty group product".into()));
        }
        let order = factors
            .iter()
            .try_fold(1usize, |acc, f| acc.checked_mul(f.order))
            .filter(|&o| o <= GROUP_ORDER_CAP)
            .ok_or_else(|| {
                AlgebraError::BadParameter(format!(
                    "group order exceeds the cap of {GROUP_ORDER_CAP}"
                ))
            })?;
        let split = |mut x: usize| {
            let mut parts = vec![0; factors.len()];
            for (slot, f) in parts.iter_mut().zip(factors).rev() {
                *slot = x % f.order;
                x /= f.order;
            }
            parts
        };
        let labels = (0..order)
            .map(|x| {
                let parts: Vec<&str> = split(x)
                    .iter()
                    .zip(factors)
                    .map(|(&p, f)| f.labels[p].as_str())
                    .collect();
                format!("({})", parts.join(","))
            })
            .collect();
        Self::from_fn(order, labels, |a, b| {
            split(a)
                .iter()
                .zip(split(b))
                .zip(factors)
                .fold(0, |acc, ((&x, y), f)| acc * f.order + f.op(x, y))
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    #[inline]
    pub fn op(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    /// Order of the element `a`.
    pub fn element_order(&self, a: usize) -> Result<usize, AlgebraError> {
        Ok(self.cyclic_subgroup(a)?.len())
    }

    /// `<a> = {a^0, a^1, ...}`, sorted by element index.
    pub fn cyclic_subgroup(&self, a: usize) -> Result<Vec<usize>, AlgebraError> {
        if a >= self.order {
            return Err(AlgebraError::IndexOutOfRange {
                index: a,
                size: self.order,
            });
        }
        let mut members = vec![self.identity];
        let mut x = a;
        while x != self.identity {
            members.push(x);
            x = self.op(x, a);
        }
        members.sort_unstable();
        Ok(members)
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }
}
