use serde::Serialize;

use super::{Category, Invariant, Label};
use crate::error::{Error, Result};

/// Bounds for cycle enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CycleSearch {
    /// Longest cycle (in morphisms) that is enumerated.
    pub max_len: usize,
    pub max_witnesses: usize,
}

impl Default for CycleSearch {
    fn default() -> Self {
        CycleSearch { max_len: 8, max_witnesses: 10_000 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CycleKind {
    Plain,
    Virtual,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CycleStep {
    pub morphism: String,
    pub src: String,
    pub dst: String,
}

/// A cyclic morphism sequence `f₀, …, f_{n−1}` with `n ≥ 2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CyclicWitness {
    pub kind: CycleKind,
    pub steps: Vec<CycleStep>,
    pub trivial: bool,
}

impl CyclicWitness {
    pub fn morphisms(&self) -> Vec<&str> {
        self.steps.iter().map(|s| s.morphism.as_str()).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CycleReport {
    pub witnesses: Vec<CyclicWitness>,
    /// Set when a cap cut the search short; the list may be incomplete.
    pub truncated: bool,
}

impl CycleReport {
    pub fn nontrivial(&self) -> impl Iterator<Item = &CyclicWitness> {
        self.witnesses.iter().filter(|w| !w.trivial)
    }
}

/// Simple directed cycles of length ≥ 2, each listed once, starting at its
/// least vertex. `adj[u]` holds `(v, edge)` with `u ≠ v`, sorted by `v`.
fn simple_cycles(adj: &[Vec<(usize, usize)>], search: CycleSearch) -> (Vec<Vec<usize>>, bool) {
    struct Walk<'a> {
        adj: &'a [Vec<(usize, usize)>],
        search: CycleSearch,
        on_path: Vec<bool>,
        edges: Vec<usize>,
        found: Vec<Vec<usize>>,
        truncated: bool,
    }

    impl Walk<'_> {
        fn visit(&mut self, start: usize, v: usize) {
            for &(w, e) in &self.adj[v] {
                if self.found.len() >= self.search.max_witnesses {
                    self.truncated = true;
                    return;
                }
                if w == start && !self.edges.is_empty() {
                    let mut cycle = self.edges.clone();
                    cycle.push(e);
                    self.found.push(cycle);
                } else if w > start && !self.on_path[w] {
                    if self.edges.len() + 1 >= self.search.max_len {
                        // a cycle through w would need at least one more edge
                        self.truncated = true;
                        continue;
                    }
                    self.on_path[w] = true;
                    self.edges.push(e);
                    self.visit(start, w);
                    self.edges.pop();
                    self.on_path[w] = false;
                }
            }
        }
    }

    let mut walk =
        Walk { adj, search, on_path: vec![false; adj.len()], edges: Vec::new(), found: Vec::new(), truncated: false };
    if search.max_len >= 2 {
        for s in 0..adj.len() {
            walk.on_path[s] = true;
            walk.visit(s, s);
            walk.on_path[s] = false;
        }
    }
    (walk.found, walk.truncated)
}

/// One edge per ordered pair of distinct nodes, represented by the first
/// morphism (in presentation order) that induces it.
fn collapse(k: usize, arrows: impl Iterator<Item = (usize, usize, usize)>) -> Vec<Vec<(usize, usize)>> {
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); k];
    for (u, v, m) in arrows {
        if u != v && !adj[u].iter().any(|&(w, _)| w == v) {
            adj[u].push((v, m));
        }
    }
    for a in &mut adj {
        a.sort_unstable();
    }
    adj
}

fn step(cat: &Category, m: usize) -> CycleStep {
    let mo = &cat.morphisms_raw()[m];
    CycleStep {
        morphism: mo.id.clone(),
        src: cat.object_id(mo.src).to_string(),
        dst: cat.object_id(mo.dst).to_string(),
    }
}

/// Simple cycles in the object graph, flagged trivial when all their
/// objects are isomorphic.
///
/// Isomorphism data (declared iso pairs or a composition table) is needed
/// only when a cycle is found.
pub fn find_cycles(cat: &Category, search: CycleSearch) -> Result<CycleReport> {
    let arrows = cat.morphisms_raw().iter().enumerate().map(|(i, m)| (m.src, m.dst, i));
    let adj = collapse(cat.object_count(), arrows);
    let (cycles, truncated) = simple_cycles(&adj, search);
    if cycles.is_empty() {
        return Ok(CycleReport { witnesses: Vec::new(), truncated });
    }
    let iso = cat.iso_classes()?;
    let witnesses = cycles
        .into_iter()
        .map(|edges| {
            let c0 = iso[cat.morphisms_raw()[edges[0]].src];
            let trivial = edges.iter().all(|&m| iso[cat.morphisms_raw()[m].src] == c0);
            CyclicWitness { kind: CycleKind::Plain, steps: edges.iter().map(|&m| step(cat, m)).collect(), trivial }
        })
        .collect();
    Ok(CycleReport { witnesses, truncated })
}

/// Simple cycles in the label graph (nodes are invariant values, one edge
/// `I[x] → I[y]` per morphism). Every virtual cycle visiting two or more
/// values contains one of these, so an empty list means every virtual
/// cycle is trivial.
pub fn find_virtual_cycles(cat: &Category, inv: &Invariant, search: CycleSearch) -> Result<CycleReport> {
    let values: Vec<Label> = inv.target().into_iter().collect();
    let node = |o: usize| -> Result<usize> {
        let l = inv.label(cat.object_id(o))?;
        Ok(values.binary_search(l).expect("label in target"))
    };
    let arrows = cat
        .morphisms_raw()
        .iter()
        .enumerate()
        .map(|(i, m)| Ok((node(m.src)?, node(m.dst)?, i)))
        .collect::<Result<Vec<_>>>()?;
    let adj = collapse(values.len(), arrows.into_iter());
    let (cycles, truncated) = simple_cycles(&adj, search);
    let witnesses = cycles
        .into_iter()
        .map(|edges| {
            let first = node(cat.morphisms_raw()[edges[0]].src)?;
            let mut trivial = true;
            for &m in &edges {
                trivial &= node(cat.morphisms_raw()[m].src)? == first;
            }
            Ok(CyclicWitness {
                kind: CycleKind::Virtual,
                steps: edges.iter().map(|&m| step(cat, m)).collect(),
                trivial,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CycleReport { witnesses, truncated })
}

fn endpoints(cat: &Category, seq: &[&str]) -> Result<Vec<(usize, usize)>> {
    if seq.len() < 2 {
        return Err(Error::input("a cycle needs at least two morphisms"));
    }
    seq.iter()
        .map(|id| {
            let m = &cat.morphisms_raw()[cat.morphism_idx(id)?];
            Ok((m.src, m.dst))
        })
        .collect()
}

/// `dst(fᵢ) = src(fᵢ₊₁)` cyclically.
pub fn is_plain_cycle(cat: &Category, seq: &[&str]) -> Result<bool> {
    let e = endpoints(cat, seq)?;
    Ok((0..e.len()).all(|i| e[i].1 == e[(i + 1) % e.len()].0))
}

/// `I[src fᵢ₊₁] = I[dst fᵢ]` cyclically.
pub fn is_virtual_cycle(cat: &Category, inv: &Invariant, seq: &[&str]) -> Result<bool> {
    let e = endpoints(cat, seq)?;
    for i in 0..e.len() {
        let a = inv.label(cat.object_id(e[i].1))?;
        let b = inv.label(cat.object_id(e[(i + 1) % e.len()].0))?;
        if a != b {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumerates_each_cycle_once() {
        // 0 ⇄ 1 ⇄ 2, plus 0 → 2
        let adj = vec![vec![(1, 0), (2, 5)], vec![(0, 1), (2, 2)], vec![(1, 3)]];
        let (c, truncated) = simple_cycles(&adj, CycleSearch::default());
        assert!(!truncated);
        let mut c = c;
        c.sort();
        assert_eq!(c, vec![vec![0, 1], vec![2, 3], vec![5, 3, 1]]);
    }

    #[test]
    fn length_cap_flags_truncation() {
        let adj = vec![vec![(1, 0)], vec![(2, 1)], vec![(0, 2)]];
        let (c, truncated) = simple_cycles(&adj, CycleSearch { max_len: 2, max_witnesses: 10 });
        assert!(c.is_empty());
        assert!(truncated);
        let (c, truncated) = simple_cycles(&adj, CycleSearch { max_len: 3, max_witnesses: 10 });
        assert_eq!(c.len(), 1);
        assert!(!truncated);
    }
}
