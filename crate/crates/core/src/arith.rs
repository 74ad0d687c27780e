//! Group orders under divisibility: factorization, prime valuations and
//! the valuation distance `Σ_p |ν_p(m) − ν_p(n)|`.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};

/// `n = ∏ p^e` with every exponent positive.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Factorization {
    n: u64,
    factors: BTreeMap<u64, u32>,
}

impl Factorization {
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn factors(&self) -> &BTreeMap<u64, u32> {
        &self.factors
    }

    /// `ν_p(n)`
    pub fn valuation(&self, p: u64) -> u32 {
        self.factors.get(&p).copied().unwrap_or(0)
    }

    /// `Ω(n)`, prime factors counted with multiplicity.
    pub fn big_omega(&self) -> u32 {
        self.factors.values().sum()
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.keys().copied()
    }
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    (a as u128 * b as u128 % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for all `u64`.
pub fn is_prime(n: u64) -> bool {
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for p in WITNESSES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for a in WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// A nontrivial factor of an odd composite `n` (Pollard rho, Brent's cycle).
fn rho_factor(n: u64) -> u64 {
    for c in 1.. {
        let f = |x: u64| (mul_mod(x, x, n) + c) % n;
        let (mut x, mut y, mut g) = (2u64, 2u64, 1u64);
        let mut q = 1u64;
        let mut r = 1u64;
        let mut ys = 0;
        while g == 1 {
            x = y;
            for _ in 0..r {
                y = f(y);
            }
            let mut k = 0;
            while k < r && g == 1 {
                ys = y;
                for _ in 0..(128.min(r - k)) {
                    y = f(y);
                    q = mul_mod(q, x.abs_diff(y), n);
                }
                g = gcd(q, n);
                k += 128;
            }
            r *= 2;
        }
        if g == n {
            loop {
                ys = f(ys);
                g = gcd(x.abs_diff(ys), n);
                if g > 1 {
                    break;
                }
            }
        }
        if g != n {
            return g;
        }
    }
    unreachable!()
}

fn split(n: u64, out: &mut BTreeMap<u64, u32>) {
    if n == 1 {
        return;
    }
    if is_prime(n) {
        *out.entry(n).or_default() += 1;
        return;
    }
    let d = rho_factor(n);
    split(d, out);
    split(n / d, out);
}

/// Complete factorization of `n ≥ 1`.
pub fn factorize(n: u64) -> Result<Factorization> {
    if n == 0 {
        return Err(Error::input("cannot factor 0"));
    }
    let mut factors = BTreeMap::new();
    let mut m = n;
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47] {
        while m.is_multiple_of(p) {
            *factors.entry(p).or_default() += 1;
            m /= p;
        }
    }
    split(m, &mut factors);
    Ok(Factorization { n, factors })
}

pub fn divides(m: u64, n: u64) -> bool {
    m != 0 && n.is_multiple_of(m)
}

/// `Σ_p |ν_p(m) − ν_p(n)|`, a metric on the positive integers.
pub fn order_distance(m: u64, n: u64) -> Result<u64> {
    let (fm, fn_) = (factorize(m)?, factorize(n)?);
    let mut primes: Vec<u64> = fm.primes().chain(fn_.primes()).collect();
    primes.sort_unstable();
    primes.dedup();
    Ok(primes.into_iter().map(|p| u64::from(fm.valuation(p).abs_diff(fn_.valuation(p)))).sum())
}

/// Cover neighbours of `n` under divisibility, through the listed primes:
/// `n·p` above, `n/p` below when `p | n`. Products that overflow are skipped.
pub fn divisor_cover_neighbors(n: u64, primes: &[u64]) -> Result<(Vec<u64>, Vec<u64>)> {
    if n == 0 {
        return Err(Error::input("group orders are positive"));
    }
    if let Some(&q) = primes.iter().find(|&&q| !is_prime(q)) {
        return Err(Error::input(format!("{q} is not prime")));
    }
    let mut primes = primes.to_vec();
    primes.sort_unstable();
    primes.dedup();
    let above = primes.iter().filter_map(|&p| n.checked_mul(p)).collect();
    let below = primes.iter().filter(|&&p| n.is_multiple_of(p)).map(|&p| n / p).collect();
    Ok((above, below))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_factorizations() {
        assert!(factorize(1).unwrap().factors().is_empty());
        assert_eq!(factorize(12).unwrap().factors(), &BTreeMap::from([(2, 2), (3, 1)]));
        let f = factorize(64 * 81 * 5).unwrap();
        assert_eq!(f.factors().values().copied().collect::<Vec<_>>(), vec![6, 4, 1]);
        assert!(factorize(0).is_err());
    }

    #[test]
    fn large_factorizations_multiply_back() {
        for n in [(1u64 << 63) - 1, 4_294_967_291 * 4_294_967_279, 999_999_999_989, 600_851_475_143] {
            let f = factorize(n).unwrap();
            let back = f.factors().iter().fold(1u64, |acc, (&p, &e)| acc * p.pow(e));
            assert_eq!(back, n);
            assert!(f.primes().all(is_prime));
        }
    }

    #[test]
    fn divisibility() {
        assert!(divides(4, 8));
        assert!(!divides(8, 4));
        assert!(divides(7, 7));
    }

    #[test]
    fn distances() {
        assert_eq!(order_distance(9, 9).unwrap(), 0);
        assert_eq!(order_distance(8, 12).unwrap(), 2);
        assert_eq!(order_distance(16, 15).unwrap(), 6);
        assert_eq!(order_distance(16, 2).unwrap(), 3);
    }

    #[test]
    fn neighbours() {
        let (above, below) = divisor_cover_neighbors(4, &[2, 3]).unwrap();
        assert_eq!(above, vec![8, 12]);
        assert_eq!(below, vec![2]);
        let (_, below) = divisor_cover_neighbors(1, &[2, 3]).unwrap();
        assert!(below.is_empty());
        let (_, below) = divisor_cover_neighbors(9, &[2]).unwrap();
        assert!(below.is_empty());
        assert!(divisor_cover_neighbors(4, &[4]).is_err());
    }
}
