use std::collections::HashMap;

use super::polynomial::IntPolynomial;
use super::{bits, components, SimpleGraph};
use crate::error::{Error, Result};

/// Default number of deletion-contraction branchings before giving up.
pub const DEFAULT_DC_BUDGET: u64 = 2_000_000;

/// `χ_g(t)` by deletion-contraction.
pub fn chromatic_polynomial(g: &SimpleGraph) -> Result<IntPolynomial> {
    chromatic_polynomial_with_budget(g, DEFAULT_DC_BUDGET)
}

pub fn chromatic_polynomial_with_budget(g: &SimpleGraph, budget: u64) -> Result<IntPolynomial> {
    let mut engine = Engine { memo: HashMap::new(), branchings: 0, budget };
    engine.graph(g.adjacency())
}

struct Engine {
    memo: HashMap<Vec<u64>, IntPolynomial>,
    branchings: u64,
    budget: u64,
}

impl Engine {
    /// Product over connected components.
    fn graph(&mut self, adj: &[u64]) -> Result<IntPolynomial> {
        let mut isolated = 0;
        let mut product = IntPolynomial::one();
        for mask in components(adj) {
            if mask.count_ones() == 1 {
                isolated += 1;
            } else {
                let part = self.connected(induced(adj, mask))?;
                product = product.checked_mul(&part)?;
            }
        }
        product.checked_mul(&IntPolynomial::monomial(isolated))
    }

    fn connected(&mut self, adj: Vec<u64>) -> Result<IntPolynomial> {
        let n = adj.len();
        let m = adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2;
        let t = IntPolynomial::monomial(1);
        if m + 1 == n {
            return t.checked_mul(&IntPolynomial::new(vec![-1, 1]).pow(n - 1)?);
        }
        if 2 * m == n * (n - 1) {
            return (0..n).try_fold(IntPolynomial::one(), |acc, r| acc.times_linear(r as i128));
        }
        if m == n && adj.iter().all(|a| a.count_ones() == 2) {
            let shifted = IntPolynomial::new(vec![-1, 1]);
            let sign = if n.is_multiple_of(2) { 1 } else { -1 };
            return shifted.pow(n)?.checked_sub(&IntPolynomial::new(vec![sign, -sign]));
        }
        let adj = relabel(adj);
        if let Some(p) = self.memo.get(&adj) {
            return Ok(p.clone());
        }
        self.branchings += 1;
        if self.branchings > self.budget {
            return Err(Error::limit(format!("deletion-contraction exceeded {} branchings", self.budget)));
        }
        let (u, v) = pick_edge(&adj);
        let g = SimpleGraph::from_adjacency(adj.clone());
        let deleted = self.graph(g.delete_edge(u, v)?.adjacency())?;
        let contracted = self.graph(g.contract_edge(u, v)?.adjacency())?;
        let p = deleted.checked_sub(&contracted)?;
        self.memo.insert(adj, p.clone());
        Ok(p)
    }
}

/// Edge lying in the most triangles, so contraction merges the most edges.
fn pick_edge(adj: &[u64]) -> (usize, usize) {
    (0..adj.len())
        .flat_map(|u| bits(adj[u] >> u >> 1).map(move |d| (u, u + 1 + d)))
        .max_by_key(|&(u, v)| ((adj[u] & adj[v]).count_ones(), std::cmp::Reverse((u, v))))
        .expect("graph has an edge")
}

fn induced(adj: &[u64], mask: u64) -> Vec<u64> {
    let index: Vec<usize> = bits(mask).collect();
    index
        .iter()
        .map(|&v| index.iter().enumerate().filter(|&(_, &w)| adj[v] >> w & 1 == 1).fold(0u64, |m, (i, _)| m | 1 << i))
        .collect()
}

/// Orders vertices by degree and then by the sorted degrees of their
/// neighbours, so that many isomorphic graphs share one memo entry.
fn relabel(adj: Vec<u64>) -> Vec<u64> {
    let degree = |v: usize| adj[v].count_ones();
    let signature: Vec<(u32, Vec<u32>)> = (0..adj.len())
        .map(|v| {
            let mut around: Vec<u32> = bits(adj[v]).map(degree).collect();
            around.sort_unstable();
            (degree(v), around)
        })
        .collect();
    let mut order: Vec<usize> = (0..adj.len()).collect();
    order.sort_by(|&a, &b| signature[a].cmp(&signature[b]));
    let mut position = vec![0; adj.len()];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    order.iter().map(|&v| bits(adj[v]).fold(0u64, |m, w| m | 1 << position[w])).collect()
}

/// Monic with nonzero coefficients alternating in sign from the top,
/// the shape every chromatic polynomial has.
fn check_chromatic_shape(f: &IntPolynomial) -> Result<usize> {
    let n = f.degree().filter(|_| f.leading() == 1).ok_or_else(|| Error::input(format!("{f} is not monic")))?;
    for (k, &c) in f.coeffs().iter().enumerate() {
        let expected = if (n - k) % 2 == 0 { 1 } else { -1 };
        if c != 0 && c.signum() != expected {
            return Err(Error::input(format!("coefficients of {f} do not alternate in sign")));
        }
    }
    Ok(n)
}

/// `f ≤ g` iff `deg f < deg g`, or the degrees agree and
/// `|[t^k]f| ≤ |[t^k]g|` for every `k`.
pub fn chrompoly_leq(f: &IntPolynomial, g: &IntPolynomial) -> Result<bool> {
    let (nf, ng) = (check_chromatic_shape(f)?, check_chromatic_shape(g)?);
    Ok(nf < ng || nf == ng && (0..=nf).all(|k| f.coeff(k).unsigned_abs() <= g.coeff(k).unsigned_abs()))
}

/// `(−t)^n · f(−1/t)` for `n ≥ deg f`.
pub fn reciprocal_transform(f: &IntPolynomial, n: usize) -> Result<IntPolynomial> {
    if f.degree().is_some_and(|d| d > n) {
        return Err(Error::input(format!("degree of {f} exceeds {n}")));
    }
    let mut c = vec![0i128; n + 1];
    for (k, &a) in f.coeffs().iter().enumerate() {
        c[n - k] =
            if (n + k).is_multiple_of(2) { a } else { a.checked_neg().ok_or_else(|| Error::limit("overflow"))? };
    }
    Ok(IntPolynomial::new(c))
}

/// `|n₁ − n₂| + Σ_k |b₁,k − b₂,k|` where `bᵢ` are the coefficients of
/// `(−t)^{nᵢ} χᵢ(−1/t)` and `nᵢ = deg χᵢ`.
pub fn chrompoly_distance_of(f: &IntPolynomial, g: &IntPolynomial) -> Result<u64> {
    let (nf, ng) = (check_chromatic_shape(f)?, check_chromatic_shape(g)?);
    let (bf, bg) = (reciprocal_transform(f, nf)?, reciprocal_transform(g, ng)?);
    let len = nf.max(ng) + 1;
    let coefficient_gap = (0..len).try_fold(0u128, |acc, k| acc.checked_add(bf.coeff(k).abs_diff(bg.coeff(k))));
    coefficient_gap
        .and_then(|s| s.checked_add(nf.abs_diff(ng) as u128))
        .and_then(|s| u64::try_from(s).ok())
        .ok_or_else(|| Error::limit("chromatic polynomial distance exceeds 64 bits"))
}

/// [`chrompoly_distance_of`] applied to the chromatic polynomials.
pub fn chrompoly_distance(g1: &SimpleGraph, g2: &SimpleGraph) -> Result<u64> {
    chrompoly_distance_of(&chromatic_polynomial(g1)?, &chromatic_polynomial(g2)?)
}
