use super::{bits, SimpleGraph};
use crate::error::{Error, Result};

/// Least `k` admitting a proper `k`-colouring.
pub fn chromatic_number(g: &SimpleGraph) -> Result<usize> {
    if g.vertex_count() == 0 {
        return Err(Error::input("the chromatic number of the empty graph is not defined"));
    }
    let adj = g.adjacency();
    let lower = greedy_clique(adj);
    let upper = dsatur_greedy(adj);
    for k in lower..upper {
        if colorable(adj, k) {
            return Ok(k);
        }
    }
    Ok(upper)
}

/// `|χ(g1) − χ(g2)|`
pub fn chromatic_distance(g1: &SimpleGraph, g2: &SimpleGraph) -> Result<u64> {
    Ok(chromatic_number(g1)?.abs_diff(chromatic_number(g2)?) as u64)
}

fn greedy_clique(adj: &[u64]) -> usize {
    (0..adj.len())
        .map(|v| {
            let mut size = 1;
            let mut candidates = adj[v];
            while candidates != 0 {
                let w = bits(candidates).max_by_key(|&w| (adj[w] & candidates).count_ones()).expect("nonempty");
                size += 1;
                candidates &= adj[w];
            }
            size
        })
        .max()
        .unwrap_or(0)
}

/// Vertex with the most distinctly coloured neighbours, ties to higher degree.
fn most_saturated(adj: &[u64], colors: &[usize]) -> Option<(usize, u64)> {
    (0..adj.len())
        .filter(|&v| colors[v] == 0)
        .map(|v| {
            let used = bits(adj[v]).filter(|&w| colors[w] > 0).fold(0u64, |m, w| m | 1 << (colors[w] - 1));
            (v, used)
        })
        .max_by_key(|&(v, used)| (used.count_ones(), adj[v].count_ones(), std::cmp::Reverse(v)))
}

fn dsatur_greedy(adj: &[u64]) -> usize {
    let mut colors = vec![0usize; adj.len()];
    let mut used_max = 0;
    while let Some((v, used)) = most_saturated(adj, &colors) {
        let c = (!used).trailing_zeros() as usize + 1;
        colors[v] = c;
        used_max = used_max.max(c);
    }
    used_max
}

fn colorable(adj: &[u64], k: usize) -> bool {
    fn extend(adj: &[u64], k: usize, colors: &mut [usize], used_max: usize) -> bool {
        let Some((v, used)) = most_saturated(adj, colors) else {
            return true;
        };
        // a fresh colour is interchangeable with any other fresh colour
        for c in 1..=k.min(used_max + 1) {
            if used >> (c - 1) & 1 == 0 {
                colors[v] = c;
                if extend(adj, k, colors, used_max.max(c)) {
                    return true;
                }
            }
        }
        colors[v] = 0;
        false
    }
    let mut colors = vec![0usize; adj.len()];
    extend(adj, k, &mut colors, 0)
}
