//! Divisor chains `d₁ | d₂ | … | dₙ` of finite abelian groups and the
//! quotient order between them.
//!
//! A chain is stored primewise: for every prime `p` the nonzero
//! valuations `ν_p(dᵢ)` form a partition, read bottom-up and aligned with
//! the top of the chain. `c ≤ e` (the group of `c` maps onto the group of
//! `e`) holds exactly when each partition of `e` fits inside the
//! matching partition of `c`, so covers are single-box moves.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::arith::{factorize, is_prime};
use crate::error::{Error, Result};

/// Default cap on the source group order in [`surjection_exists`].
pub const DEFAULT_SURJECTION_CAP: u64 = 1 << 12;

/// States visited by the distance search before it switches to counting
/// boxes directly.
const BFS_STATE_BUDGET: usize = 1 << 16;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DivisorChain {
    /// prime -> weakly increasing positive exponents, top-aligned
    partitions: BTreeMap<u64, Vec<u32>>,
    parts: Vec<u64>,
}

impl DivisorChain {
    pub fn trivial() -> Self {
        DivisorChain { partitions: BTreeMap::new(), parts: Vec::new() }
    }

    /// Accepts an explicit chain: every part at least 2, each dividing the next.
    pub fn from_parts(parts: &[u64]) -> Result<Self> {
        if let Some(&d) = parts.iter().find(|&&d| d < 2) {
            return Err(Error::input(format!("chain part {d} is below 2")));
        }
        if let Some(w) = parts.windows(2).find(|w| w[1] % w[0] != 0) {
            return Err(Error::input(format!("{} does not divide {}", w[0], w[1])));
        }
        canonical_chain(parts)
    }

    fn from_partitions(partitions: BTreeMap<u64, Vec<u32>>) -> Option<Self> {
        let n = partitions.values().map(Vec::len).max().unwrap_or(0);
        let mut parts = vec![1u64; n];
        for (&p, lambda) in &partitions {
            let offset = n - lambda.len();
            for (i, &e) in lambda.iter().enumerate() {
                let pe = p.checked_pow(e)?;
                parts[offset + i] = parts[offset + i].checked_mul(pe)?;
            }
        }
        Some(DivisorChain { partitions, parts })
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    /// Same as [`is_trivial`](Self::is_trivial).
    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn is_trivial(&self) -> bool {
        self.parts.is_empty()
    }

    /// The partition `λ_p`, weakly increasing; empty when `p` does not divide the order.
    pub fn partition(&self, p: u64) -> &[u32] {
        self.partitions.get(&p).map_or(&[], Vec::as_slice)
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.partitions.keys().copied()
    }

    /// Group order, `None` when it does not fit in a `u64`.
    pub fn order(&self) -> Option<u64> {
        self.parts.iter().try_fold(1u64, |acc, &d| acc.checked_mul(d))
    }

    /// `Ω` of the group order: the total number of boxes.
    pub fn big_omega(&self) -> u64 {
        self.partitions.values().flatten().map(|&e| u64::from(e)).sum()
    }
}

impl fmt::Display for DivisorChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("()");
        }
        let text: Vec<String> = self.parts.iter().map(u64::to_string).collect();
        f.write_str(&text.join(","))
    }
}

impl FromStr for DivisorChain {
    type Err = Error;

    /// `"2,2,4"`, optionally parenthesised; `"()"` or `""` is the trivial group.
    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim();
        let body = body.strip_prefix('(').and_then(|b| b.strip_suffix(')')).unwrap_or(body).trim();
        if body.is_empty() {
            return Ok(DivisorChain::trivial());
        }
        let parts = parse_moduli(body)?;
        DivisorChain::from_parts(&parts)
    }
}

/// Parses a comma-separated list of positive integers.
pub fn parse_moduli(s: &str) -> Result<Vec<u64>> {
    s.split(',')
        .map(|t| {
            let t = t.trim();
            t.parse::<u64>().map_err(|_| Error::input(format!("'{t}' is not a positive integer")))
        })
        .collect()
}

impl Serialize for DivisorChain {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(s)
    }
}

impl<'de> Deserialize<'de> for DivisorChain {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<u64>::deserialize(d)?;
        DivisorChain::from_parts(&parts).map_err(serde::de::Error::custom)
    }
}

/// The divisor chain of `⊕ Z/mᵢ`.
pub fn canonical_chain(moduli: &[u64]) -> Result<DivisorChain> {
    let mut partitions: BTreeMap<u64, Vec<u32>> = BTreeMap::new();
    for &m in moduli {
        if m == 0 {
            return Err(Error::input("moduli must be positive"));
        }
        for (&p, &e) in factorize(m)?.factors() {
            partitions.entry(p).or_default().push(e);
        }
    }
    for lambda in partitions.values_mut() {
        lambda.sort_unstable();
    }
    DivisorChain::from_partitions(partitions).ok_or_else(|| Error::limit("an invariant factor exceeds 64 bits"))
}

fn contains(outer: &[u32], inner: &[u32]) -> bool {
    inner.len() <= outer.len() && inner.iter().rev().zip(outer.iter().rev()).all(|(i, o)| i <= o)
}

/// `c ≤ e`: the group of `c` surjects onto the group of `e`.
pub fn chain_leq(c: &DivisorChain, e: &DivisorChain) -> bool {
    e.partitions.iter().all(|(p, lambda)| contains(c.partition(*p), lambda))
}

/// Chains covering `c` from above (one fewer box, a prime-index
/// quotient) and chains covered by `c` from below (one more box at a
/// prime from `primes`). Both lists are sorted and free of duplicates;
/// chains whose parts overflow 64 bits are left out.
pub fn chain_neighbors(c: &DivisorChain, primes: &[u64]) -> (Vec<DivisorChain>, Vec<DivisorChain>) {
    let mut above = BTreeSet::new();
    for (&p, lambda) in &c.partitions {
        for i in 0..lambda.len() {
            if i > 0 && lambda[i - 1] == lambda[i] {
                continue;
            }
            let mut next = c.partitions.clone();
            let l = next.get_mut(&p).expect("prime present");
            l[i] -= 1;
            if l[i] == 0 {
                l.remove(i);
            }
            if l.is_empty() {
                next.remove(&p);
            }
            above.extend(DivisorChain::from_partitions(next));
        }
    }
    let mut below = BTreeSet::new();
    for &p in primes.iter().filter(|&&p| is_prime(p)) {
        let lambda = c.partition(p);
        let mut grow = |edit: &dyn Fn(&mut Vec<u32>)| {
            let mut next = c.partitions.clone();
            edit(next.entry(p).or_default());
            below.extend(DivisorChain::from_partitions(next));
        };
        grow(&|l| l.insert(0, 1));
        for i in 0..lambda.len() {
            if i + 1 == lambda.len() || lambda[i + 1] > lambda[i] {
                grow(&|l| l[i] += 1);
            }
        }
    }
    (above.into_iter().collect(), below.into_iter().collect())
}

fn neighbors_both_ways(c: &DivisorChain, primes: &[u64]) -> Vec<DivisorChain> {
    let (mut above, below) = chain_neighbors(c, primes);
    above.extend(below);
    above
}

/// Shortest-path length between `a` and `b` in the cover graph of the
/// chain order, by bidirectional breadth-first search over chains whose
/// primes divide `|a|·|b|`.
pub fn chain_distance(a: &DivisorChain, b: &DivisorChain) -> u64 {
    if a == b {
        return 0;
    }
    let primes: Vec<u64> = a.primes().chain(b.primes()).collect::<BTreeSet<_>>().into_iter().collect();
    let cap = a.big_omega() + b.big_omega();
    let mut dist = [HashMap::new(), HashMap::new()];
    let mut frontier = [vec![a.clone()], vec![b.clone()]];
    dist[0].insert(a.clone(), 0u64);
    dist[1].insert(b.clone(), 0u64);
    let mut depth = [0u64, 0u64];
    while depth[0] + depth[1] < cap {
        if dist[0].len() + dist[1].len() > BFS_STATE_BUDGET {
            return box_distance(a, b);
        }
        let side = usize::from(frontier[1].len() < frontier[0].len());
        depth[side] += 1;
        let mut next = Vec::new();
        let mut best: Option<u64> = None;
        for c in std::mem::take(&mut frontier[side]) {
            for n in neighbors_both_ways(&c, &primes) {
                if dist[side].contains_key(&n) {
                    continue;
                }
                if let Some(&other) = dist[1 - side].get(&n) {
                    let total = depth[side] + other;
                    best = Some(best.map_or(total, |b| b.min(total)));
                }
                dist[side].insert(n.clone(), depth[side]);
                next.push(n);
            }
        }
        if let Some(total) = best {
            return total;
        }
        frontier[side] = next;
    }
    cap
}

/// Size of the symmetric difference of the diagrams, summed over primes.
fn box_distance(a: &DivisorChain, b: &DivisorChain) -> u64 {
    let primes: BTreeSet<u64> = a.primes().chain(b.primes()).collect();
    primes
        .into_iter()
        .map(|p| {
            let (x, y) = (a.partition(p), b.partition(p));
            let len = x.len().max(y.len());
            let at = |l: &[u32], k: usize| if k < l.len() { l[l.len() - 1 - k] } else { 0 };
            (0..len).map(|k| u64::from(at(x, k).abs_diff(at(y, k)))).sum::<u64>()
        })
        .sum()
}

/// Whether some homomorphism `⊕ Z/aᵢ → ⊕ Z/bⱼ` is onto, decided by
/// tracking which subgroups of the target the images of the first `i`
/// generators can span.
pub fn surjection_exists(a: &[u64], b: &[u64]) -> Result<bool> {
    surjection_exists_with_cap(a, b, DEFAULT_SURJECTION_CAP)
}

pub fn surjection_exists_with_cap(a: &[u64], b: &[u64], cap: u64) -> Result<bool> {
    if a.iter().chain(b).any(|&m| m == 0) {
        return Err(Error::input("moduli must be positive"));
    }
    let order = |ms: &[u64]| ms.iter().try_fold(1u64, |acc, &m| acc.checked_mul(m).filter(|&o| o <= cap));
    let size_a = order(a).ok_or_else(|| Error::limit(format!("source group order exceeds {cap}")))?;
    let Some(size_b) = order(b) else { return Ok(false) };
    if size_b > size_a {
        return Ok(false);
    }
    let target = Target::new(b);
    let mut reachable: BTreeSet<Vec<u64>> = BTreeSet::from([target.trivial()]);
    for &m in a {
        let images: Vec<usize> = (0..target.size).filter(|&h| target.order_divides(h, m)).collect();
        let mut next = BTreeSet::new();
        for k in &reachable {
            for &h in &images {
                next.insert(target.span_with(k, h));
            }
        }
        reachable = next;
    }
    Ok(reachable.contains(&target.full()))
}

/// Elements of `⊕ Z/bⱼ` indexed in mixed radix; subgroups are bitsets.
struct Target {
    moduli: Vec<u64>,
    size: usize,
}

impl Target {
    fn new(moduli: &[u64]) -> Self {
        let size = moduli.iter().product::<u64>() as usize;
        Target { moduli: moduli.to_vec(), size }
    }

    fn add(&self, x: usize, y: usize) -> usize {
        let (mut x, mut y, mut out, mut scale) = (x, y, 0usize, 1usize);
        for &m in &self.moduli {
            let m = m as usize;
            out += ((x % m + y % m) % m) * scale;
            x /= m;
            y /= m;
            scale *= m;
        }
        out
    }

    fn order_divides(&self, h: usize, m: u64) -> bool {
        let mut h = h;
        self.moduli.iter().all(|&b| {
            let c = (h as u64) % b;
            h /= b as usize;
            (c * m).is_multiple_of(b)
        })
    }

    fn trivial(&self) -> Vec<u64> {
        let mut set = vec![0u64; self.size.div_ceil(64)];
        set[0] |= 1;
        set
    }

    fn full(&self) -> Vec<u64> {
        let mut set = vec![u64::MAX; self.size.div_ceil(64)];
        if !self.size.is_multiple_of(64) {
            *set.last_mut().expect("nonempty") = (1u64 << (self.size % 64)) - 1;
        }
        set
    }

    fn span_with(&self, k: &[u64], h: usize) -> Vec<u64> {
        let members: Vec<usize> = (0..self.size).filter(|&x| k[x / 64] >> (x % 64) & 1 == 1).collect();
        let mut out = k.to_vec();
        let mut shift = h;
        while shift != 0 {
            for &x in &members {
                let y = self.add(x, shift);
                out[y / 64] |= 1 << (y % 64);
            }
            shift = self.add(shift, h);
        }
        out
    }
}
