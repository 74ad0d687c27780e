//! Finite simple graphs and their chromatic invariants.

mod coloring;
mod deletion;
mod embed;
mod polynomial;

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub use coloring::{chromatic_distance, chromatic_number};
pub use deletion::{
    chromatic_polynomial, chromatic_polynomial_with_budget, chrompoly_distance, chrompoly_distance_of, chrompoly_leq,
    reciprocal_transform, DEFAULT_DC_BUDGET,
};
pub use embed::{embeds, embeds_with_cap, DEFAULT_EMBED_CAP};
pub use polynomial::IntPolynomial;

/// Vertices are stored as bitmasks, which caps graphs at this size.
pub const MAX_VERTICES: usize = 64;

/// Undirected graph without loops or multi-edges on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    n: usize,
    adj: Vec<u64>,
}

impl SimpleGraph {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = SimpleGraph::empty(n)?;
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::input(format!("edge ({u},{v}) leaves the vertex range 0..{n}")));
            }
            if u == v {
                return Err(Error::input(format!("loop at vertex {u}")));
            }
            if g.has_edge(u, v) {
                return Err(Error::input(format!("duplicate edge ({u},{v})")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::limit(format!("graphs are limited to {MAX_VERTICES} vertices, got {n}")));
        }
        Ok(SimpleGraph { n, adj: vec![0; n] })
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = SimpleGraph::empty(n)?;
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        Ok(g)
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::input("a cycle needs at least 3 vertices"));
        }
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        SimpleGraph::new(n, &edges)
    }

    pub(crate) fn from_adjacency(adj: Vec<u64>) -> Self {
        SimpleGraph { n: adj.len(), adj }
    }

    pub(crate) fn adjacency(&self) -> &[u64] {
        &self.adj
    }

    fn add_edge(&mut self, u: usize, v: usize) {
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        bits(self.adj[v])
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n).flat_map(|u| bits(self.adj[u] >> u >> 1).map(move |d| (u, u + 1 + d))).collect()
    }

    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Self> {
        if !self.has_edge(u, v) {
            return Err(Error::input(format!("no edge ({u},{v})")));
        }
        let mut g = self.clone();
        g.adj[u] &= !(1 << v);
        g.adj[v] &= !(1 << u);
        Ok(g)
    }

    /// Merges `v` into `u` and drops `v`; later vertices shift down by one.
    /// Parallel edges created by the merge collapse into one.
    pub fn contract_edge(&self, u: usize, v: usize) -> Result<Self> {
        if !self.has_edge(u, v) {
            return Err(Error::input(format!("no edge ({u},{v})")));
        }
        let mut adj = self.adj.clone();
        adj[u] |= adj[v];
        adj[u] &= !(1 << u) & !(1 << v);
        for w in bits(adj[u]) {
            adj[w] |= 1 << u;
        }
        let keep = |m: u64| {
            let low = m & ((1u64 << v) - 1);
            let high = if v + 1 < 64 { (m >> (v + 1)) << v } else { 0 };
            low | high
        };
        let adj = adj.iter().enumerate().filter(|&(w, _)| w != v).map(|(_, &m)| keep(m)).collect();
        Ok(SimpleGraph::from_adjacency(adj))
    }

    /// Adds one isolated vertex with index `n`.
    pub fn with_isolated_vertex(&self) -> Result<Self> {
        let mut g = SimpleGraph::empty(self.n + 1)?;
        g.adj[..self.n].copy_from_slice(&self.adj);
        Ok(g)
    }

    /// Vertex sets of the connected components, each as a bitmask.
    pub fn components(&self) -> Vec<u64> {
        components(&self.adj)
    }

    /// Parses graph6, with or without the `>>graph6<<` header.
    pub fn from_graph6(s: &str) -> Result<Self> {
        let s = s.trim();
        let body = s.strip_prefix(">>graph6<<").unwrap_or(s).as_bytes();
        if body.iter().any(|&b| !(63..=126).contains(&b)) {
            return Err(Error::input("graph6 bytes must lie in 63..=126"));
        }
        let (n, rest) = match body {
            [] => return Err(Error::input("empty graph6 string")),
            [126, 126, ..] => return Err(Error::limit("graph6 graph is too large")),
            [126, a, b, c, rest @ ..] => {
                let n = (usize::from(a - 63) << 12) | (usize::from(b - 63) << 6) | usize::from(c - 63);
                (n, rest)
            }
            [126, ..] => return Err(Error::input("truncated graph6 size field")),
            [a, rest @ ..] => (usize::from(a - 63), rest),
        };
        let needed = (n * n.saturating_sub(1) / 2).div_ceil(6);
        if rest.len() != needed {
            return Err(Error::input(format!(
                "graph6 body has {} bytes, expected {needed} for {n} vertices",
                rest.len()
            )));
        }
        let mut g = SimpleGraph::empty(n)?;
        let mut k = 0;
        for v in 1..n {
            for u in 0..v {
                let byte = rest[k / 6] - 63;
                if byte >> (5 - k % 6) & 1 == 1 {
                    g.add_edge(u, v);
                }
                k += 1;
            }
        }
        Ok(g)
    }

    pub fn to_graph6(&self) -> String {
        let mut out = Vec::new();
        if self.n <= 62 {
            out.push(self.n as u8 + 63);
        } else {
            out.extend([126, (self.n >> 12) as u8 + 63, ((self.n >> 6) & 63) as u8 + 63, (self.n & 63) as u8 + 63]);
        }
        let mut acc = 0u8;
        let mut k = 0;
        for v in 1..self.n {
            for u in 0..v {
                acc = acc << 1 | u8::from(self.has_edge(u, v));
                k += 1;
                if k % 6 == 0 {
                    out.push(acc + 63);
                    acc = 0;
                }
            }
        }
        if k % 6 != 0 {
            out.push((acc << (6 - k % 6)) + 63);
        }
        String::from_utf8(out).expect("graph6 is ASCII")
    }
}

impl fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SimpleGraph(n={}, edges={:?})", self.n, self.edges())
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphJson {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Serialize for SimpleGraph {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GraphJson { n: self.n, edges: self.edges() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for SimpleGraph {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = GraphJson::deserialize(d)?;
        SimpleGraph::new(raw.n, &raw.edges).map_err(serde::de::Error::custom)
    }
}

pub(crate) fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (m != 0).then(|| {
            let b = m.trailing_zeros() as usize;
            m &= m - 1;
            b
        })
    })
}

pub(crate) fn components(adj: &[u64]) -> Vec<u64> {
    let all = if adj.len() == 64 { u64::MAX } else { (1u64 << adj.len()) - 1 };
    let mut unseen = all;
    let mut out = Vec::new();
    while unseen != 0 {
        let start = unseen & unseen.wrapping_neg();
        let mut comp = start;
        let mut frontier = start;
        while frontier != 0 {
            let mut next = 0;
            for v in bits(frontier) {
                next |= adj[v];
            }
            frontier = next & !comp;
            comp |= next;
        }
        unseen &= !comp;
        out.push(comp);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_edges() {
        assert!(SimpleGraph::new(2, &[(0, 0)]).is_err());
        assert!(SimpleGraph::new(2, &[(0, 2)]).is_err());
        assert!(SimpleGraph::new(2, &[(0, 1), (1, 0)]).is_err());
        assert!(matches!(SimpleGraph::empty(65), Err(Error::Limit(_))));
    }

    #[test]
    fn graph6_round_trip() {
        let petersen = SimpleGraph::from_graph6("IheA@GUAo").unwrap();
        assert_eq!(petersen.vertex_count(), 10);
        assert_eq!(petersen.edge_count(), 15);
        assert!((0..10).all(|v| petersen.degree(v) == 3));
        assert_eq!(petersen.to_graph6(), "IheA@GUAo");
        let k64 = SimpleGraph::complete(64).unwrap();
        assert_eq!(SimpleGraph::from_graph6(&k64.to_graph6()).unwrap(), k64);
        assert_eq!(SimpleGraph::from_graph6(">>graph6<<Bw").unwrap(), SimpleGraph::complete(3).unwrap());
        assert!(SimpleGraph::from_graph6("Bww").is_err());
    }

    #[test]
    fn contraction_collapses_parallel_edges() {
        let triangle = SimpleGraph::complete(3).unwrap();
        let g = triangle.contract_edge(0, 2).unwrap();
        assert_eq!(g, SimpleGraph::new(2, &[(0, 1)]).unwrap());
    }

    #[test]
    fn json_shape() {
        let g = SimpleGraph::new(3, &[(1, 0), (2, 1)]).unwrap();
        assert_eq!(serde_json::to_string(&g).unwrap(), r#"{"n":3,"edges":[[0,1],[1,2]]}"#);
        let back: SimpleGraph = serde_json::from_str(r#"{"n":3,"edges":[[0,1],[1,2]]}"#).unwrap();
        assert_eq!(back, g);
    }

    #[test]
    fn component_masks() {
        let g = SimpleGraph::new(5, &[(0, 2), (3, 4)]).unwrap();
        assert_eq!(g.components(), vec![0b00101, 0b00010, 0b11000]);
    }
}
