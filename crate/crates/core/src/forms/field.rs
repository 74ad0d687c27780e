use crate::arith::is_prime;
use crate::error::{Error, Result};

/// Arithmetic in `F_p`; elements are residues in `0..p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::input(format!("{p} is not prime")));
        }
        Ok(PrimeField { p })
    }

    /// For moduli already known to be prime.
    pub(crate) fn trusted(p: u64) -> Self {
        PrimeField { p }
    }

    pub fn p(self) -> u64 {
        self.p
    }

    pub fn reduce(self, a: i128) -> u64 {
        a.rem_euclid(i128::from(self.p)) as u64
    }

    pub fn add(self, a: u64, b: u64) -> u64 {
        ((u128::from(a) + u128::from(b)) % u128::from(self.p)) as u64
    }

    pub fn sub(self, a: u64, b: u64) -> u64 {
        self.add(a, self.neg(b))
    }

    pub fn neg(self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    pub fn mul(self, a: u64, b: u64) -> u64 {
        (u128::from(a) * u128::from(b) % u128::from(self.p)) as u64
    }

    pub fn pow(self, mut a: u64, mut e: u64) -> u64 {
        let mut acc = 1 % self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        acc
    }

    /// Inverse of a nonzero residue.
    pub fn inv(self, a: u64) -> Option<u64> {
        (!a.is_multiple_of(self.p)).then(|| self.pow(a, self.p - 2))
    }

    pub fn is_square(self, a: u64) -> bool {
        a.is_multiple_of(self.p) || self.p == 2 || self.pow(a, (self.p - 1) / 2) == 1
    }
}

/// Parses a univariate polynomial such as `"t^2 - 1"` or `"3t^3+2*t+1"`
/// into coefficients mod `p`, lowest degree first, trailing zeros trimmed.
pub fn parse_univariate(s: &str, field: PrimeField) -> Result<Vec<u64>> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(Error::input("empty polynomial"));
    }
    let mut coeffs: Vec<i128> = Vec::new();
    let mut rest = compact.as_str();
    while !rest.is_empty() {
        let (sign, body) = match rest.as_bytes()[0] {
            b'-' => (-1, &rest[1..]),
            b'+' => (1, &rest[1..]),
            _ => (1, rest),
        };
        let end = body.find(['+', '-']).unwrap_or(body.len());
        let (term, tail) = body.split_at(end);
        let (c, e) = parse_term(term).ok_or_else(|| Error::input(format!("cannot parse term '{term}' in '{s}'")))?;
        if coeffs.len() <= e {
            coeffs.resize(e + 1, 0);
        }
        coeffs[e] += sign * c;
        rest = tail;
    }
    let mut out: Vec<u64> = coeffs.into_iter().map(|c| field.reduce(c)).collect();
    while out.last() == Some(&0) {
        out.pop();
    }
    Ok(out)
}

fn parse_term(term: &str) -> Option<(i128, usize)> {
    let Some(at) = term.find('t') else {
        return Some((term.parse().ok()?, 0));
    };
    let coef = term[..at].trim_end_matches('*');
    let coef = if coef.is_empty() { 1 } else { coef.parse().ok()? };
    let power = &term[at + 1..];
    let e = match power.strip_prefix('^') {
        Some(digits) => digits.parse().ok()?,
        None if power.is_empty() => 1,
        None => return None,
    };
    Some((coef, e))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_ops() {
        let f = PrimeField::new(5).unwrap();
        assert_eq!(f.inv(2), Some(3));
        assert_eq!(f.inv(0), None);
        assert_eq!(f.reduce(-1), 4);
        assert!(!f.is_square(2) && !f.is_square(3) && f.is_square(4));
        assert!(PrimeField::new(9).is_err());
    }

    #[test]
    fn parsing() {
        let f = PrimeField::new(5).unwrap();
        assert_eq!(parse_univariate("t^2-1", f).unwrap(), vec![4, 0, 1]);
        assert_eq!(parse_univariate("t", f).unwrap(), vec![0, 1]);
        assert_eq!(parse_univariate("3*t^3 + 2t + 7", f).unwrap(), vec![2, 2, 0, 3]);
        assert_eq!(parse_univariate("-t^2 + t^2", f).unwrap(), Vec::<u64>::new());
        assert!(parse_univariate("t^x", f).is_err());
        assert!(parse_univariate("", f).is_err());
    }
}
