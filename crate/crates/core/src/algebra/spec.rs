//! Compact textual specs for groups and rings.
//!
//! ```text
//! group   := gfactor ('x' gfactor)*
//! gfactor := 'Z' N | 'D' N | 'Q8' | 'E2^' K        (D N has order N)
//! ring    := rfactor ('x' rfactor)*
//! rfactor := 'Z' N ( '[x]/(' poly ')' )?
//! poly    := term ('+' term)*
//! term    := C | C? 'x' ('^' E)?
//! ```
//!
//! Examples: `Z6`, `D12`, `Q8`, `E2^3`, `Z2xZ2xZ4`, `Z2[x]/(x^3)xZ2`.

use super::group::FiniteGroup;
use super::ring::FiniteRing;
use super::AlgebraError;

struct Cursor<'a> {
    input: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(input: &'a str) -> Self {
        Cursor { input, pos: 0 }
    }

    fn rest(&self) -> &'a str {
        &self.input[self.pos..]
    }

    fn peek(&self) -> Option<char> {
        self.rest().chars().next()
    }

    fn eat(&mut self, token: &str) -> bool {
        if self.rest().starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<(), AlgebraError> {
        if self.eat(token) {
            Ok(())
        } else {
            Err(self.error(format!("expected {token:?}")))
        }
    }

    fn number(&mut self) -> Result<usize, AlgebraError> {
        let digits = self.rest().chars().take_while(char::is_ascii_digit).count();
        if digits == 0 {
            return Err(self.error("expected a number"));
        }
        let text = &self.rest()[..digits];
        let value = text
            .parse()
            .map_err(|_| self.error(format!("number {text} is too large")))?;
        self.pos += digits;
        Ok(value)
    }

    fn error(&self, message: impl Into<String>) -> AlgebraError {
        AlgebraError::Syntax {
            input: self.input.to_string(),
            offset: self.pos,
            message: message.into(),
        }
    }

    fn finish(&self) -> Result<(), AlgebraError> {
        if self.pos == self.input.len() {
            Ok(())
        } else {
            Err(self.error("unexpected trailing input"))
        }
    }
}

pub fn parse_group_spec(input: &str) -> Result<FiniteGroup, AlgebraError> {
    let mut cur = Cursor::new(input.trim());
    let mut factors = vec![group_factor(&mut cur)?];
    while cur.eat("x") {
        factors.push(group_factor(&mut cur)?);
    }
    cur.finish()?;
    if factors.len() == 1 {
        Ok(factors.pop().expect("one factor"))
    } else {
        FiniteGroup::product(&factors)
    }
}

fn group_factor(cur: &mut Cursor<'_>) -> Result<FiniteGroup, AlgebraError> {
    let start = cur.pos;
    let at = |cur: &mut Cursor<'_>, e: AlgebraError| match e {
        AlgebraError::BadParameter(message) => {
            cur.pos = start;
            cur.error(message)
        }
        other => other,
    };
    match cur.peek() {
        Some('Z') => {
            cur.pos += 1;
            let n = cur.number()?;
            FiniteGroup::cyclic(n).map_err(|e| at(cur, e))
        }
        Some('D') => {
            cur.pos += 1;
            let order = cur.number()?;
            if order % 2 != 0 || order < 6 {
                cur.pos = start;
                return Err(cur.error("dihedral group order must be even and at least 6"));
            }
            FiniteGroup::dihedral(order / 2).map_err(|e| at(cur, e))
        }
        Some('Q') => {
            cur.expect("Q8")?;
            FiniteGroup::quaternion8()
        }
        Some('E') => {
            cur.expect("E2^")?;
            let k = cur.number()?;
            FiniteGroup::elementary_abelian_2(k).map_err(|e| at(cur, e))
        }
        _ => Err(cur.error("expected a group factor (Z, D, Q8 or E2^)")),
    }
}

pub fn parse_ring_spec(input: &str) -> Result<FiniteRing, AlgebraError> {
    let mut cur = Cursor::new(input.trim());
    let mut factors = vec![ring_factor(&mut cur)?];
    while cur.eat("x") {
        factors.push(ring_factor(&mut cur)?);
    }
    cur.finish()?;
    if factors.len() == 1 {
        Ok(factors.pop().expect("one factor"))
    } else {
        FiniteRing::product(&factors)
    }
}

fn ring_factor(cur: &mut Cursor<'_>) -> Result<FiniteRing, AlgebraError> {
    let start = cur.pos;
    cur.expect("Z")?;
    let n = cur.number()?;
    let relocate = |cur: &mut Cursor<'_>, e: AlgebraError| match e {
        AlgebraError::BadParameter(message) => {
            cur.pos = start;
            cur.error(message)
        }
        other => other,
    };
    if cur.eat("[x]/(") {
        let modulus = polynomial(cur, n)?;
        cur.expect(")")?;
        FiniteRing::quotient_poly(n, &modulus).map_err(|e| relocate(cur, e))
    } else {
        FiniteRing::zmod(n).map_err(|e| relocate(cur, e))
    }
}

/// Ascending coefficient vector of a polynomial in `x`.
fn polynomial(cur: &mut Cursor<'_>, p: usize) -> Result<Vec<usize>, AlgebraError> {
    let mut coeffs: Vec<usize> = Vec::new();
    loop {
        let coef = if cur.peek().is_some_and(|c| c.is_ascii_digit()) {
            cur.number()?
        } else {
            1
        };
        let degree = if cur.eat("x") {
            if cur.eat("^") {
                cur.number()?
            } else {
                1
            }
        } else {
            0
        };
        if degree > 16 {
            return Err(cur.error("polynomial degree too large"));
        }
        if coeffs.len() <= degree {
            coeffs.resize(degree + 1, 0);
        }
        coeffs[degree] = (coeffs[degree] + coef) % p.max(1);
        if !cur.eat("+") {
            break;
        }
    }
    while coeffs.len() > 1 && coeffs.last() == Some(&0) {
        coeffs.pop();
    }
    Ok(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn groups() {
        assert_eq!(parse_group_spec("Z6").unwrap().order(), 6);
        assert_eq!(parse_group_spec("D12").unwrap().order(), 12);
        assert_eq!(parse_group_spec("Q8").unwrap().order(), 8);
        assert_eq!(parse_group_spec("E2^3").unwrap().order(), 8);
        assert_eq!(parse_group_spec("Z2xZ3").unwrap().order(), 6);
        assert_eq!(parse_group_spec("D8xZ3").unwrap().order(), 24);
    }

    #[test]
    fn group_errors() {
        let offset = |s: &str| match parse_group_spec(s) {
            Err(AlgebraError::Syntax { offset, .. }) => offset,
            other => panic!("{s}: expected a syntax error, got {other:?}"),
        };
        assert_eq!(offset("D7"), 0);
        assert_eq!(offset("Z6y"), 2);
        assert_eq!(offset("Q9"), 0);
        assert_eq!(offset("Z"), 1);
        assert_eq!(offset("Z6xZ0"), 3);
    }

    #[test]
    fn rings() {
        let r = parse_ring_spec("Z2[x]/(x^3)xZ2").unwrap();
        assert_eq!(r.size(), 16);
        assert_eq!(r.factors().len(), 2);
        assert_eq!(r.name(), "Z2[x]/(x^3)xZ2");
        assert_eq!(parse_ring_spec("Z2xZ2xZ4").unwrap().size(), 16);
        assert_eq!(parse_ring_spec(" Z24 ").unwrap().size(), 24);
        let f4 = parse_ring_spec("Z2[x]/(x^2+x+1)").unwrap();
        assert_eq!(f4.name(), "Z2[x]/(x^2+x+1)");
        assert_eq!(parse_ring_spec("Z3[x]/(x^2+2)").unwrap().size(), 9);
    }

    #[test]
    fn ring_errors() {
        assert!(matches!(
            parse_ring_spec("Z4[x]/(x^2)"),
            Err(AlgebraError::Syntax { offset: 0, .. })
        ));
        assert!(matches!(
            parse_ring_spec("Z2[x]/(x^2"),
            Err(AlgebraError::Syntax { offset: 10, .. })
        ));
        assert!(matches!(
            parse_ring_spec("Z2xQ8"),
            Err(AlgebraError::Syntax { offset: 3, .. })
        ));
        assert!(parse_ring_spec("Z1").is_err());
        assert!(parse_ring_spec("Z2[x]/(2x^2)").is_err());
    }
}
