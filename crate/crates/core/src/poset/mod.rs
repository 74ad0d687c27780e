//! Finite pre-orders, their condensation to partial orders, cover graphs
//! and the shortest-path distance on them.
//!
//! Element ids are any `Ord + Clone` type. Elements are kept sorted, so a
//! condensation class is always named by its least member.

mod bitmatrix;

use std::collections::VecDeque;
use std::fmt::Debug;

use crate::error::{Error, Result};
use crate::extnat::ExtendedNat;

pub(crate) use bitmatrix::BitMatrix;

/// Default bound on the number of elements of a [`Preorder`].
pub const DEFAULT_MAX_ELEMENTS: usize = 1024;

/// A reflexive, transitive relation on a finite set, stored as a dense
/// reachability table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Preorder<T> {
    elements: Vec<T>,
    reach: BitMatrix,
}

impl<T: Ord + Clone + Debug> Preorder<T> {
    /// Reflexive-transitive closure of `edges` over `elements`, capped at
    /// [`DEFAULT_MAX_ELEMENTS`].
    pub fn build<E, R>(elements: E, edges: R) -> Result<Self>
    where
        E: IntoIterator<Item = T>,
        R: IntoIterator<Item = (T, T)>,
    {
        Self::build_with_cap(elements, edges, DEFAULT_MAX_ELEMENTS)
    }

    pub fn build_with_cap<E, R>(elements: E, edges: R, max_elements: usize) -> Result<Self>
    where
        E: IntoIterator<Item = T>,
        R: IntoIterator<Item = (T, T)>,
    {
        let mut elements: Vec<T> = elements.into_iter().collect();
        elements.sort();
        elements.dedup();
        if elements.len() > max_elements {
            return Err(Error::limit(format!("{} elements exceed the cap of {max_elements}", elements.len())));
        }
        let mut reach = BitMatrix::identity(elements.len());
        for (a, b) in edges {
            let i = index_in(&elements, &a)?;
            let j = index_in(&elements, &b)?;
            reach.set(i, j);
        }
        reach.close_transitively();
        Ok(Preorder { elements, reach })
    }

    pub fn elements(&self) -> &[T] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn index_of(&self, x: &T) -> Option<usize> {
        self.elements.binary_search(x).ok()
    }

    /// `a ≼ b`; unknown ids are never related.
    pub fn reaches(&self, a: &T, b: &T) -> bool {
        match (self.index_of(a), self.index_of(b)) {
            (Some(i), Some(j)) => self.reach.get(i, j),
            _ => false,
        }
    }

    pub fn reaches_index(&self, i: usize, j: usize) -> bool {
        self.reach.get(i, j)
    }

    /// Every related pair, including the reflexive ones.
    pub fn pairs(&self) -> Vec<(T, T)> {
        (0..self.len())
            .flat_map(|i| self.reach.ones_in_row(i).map(move |j| (self.elements[i].clone(), self.elements[j].clone())))
            .collect()
    }

    pub fn pair_count(&self) -> usize {
        self.reach.count_ones()
    }

    /// Collapse mutually reachable elements into classes.
    pub fn condense(&self) -> PartialOrder<T> {
        let n = self.len();
        let mut class_of = vec![usize::MAX; n];
        let mut classes: Vec<Class<T>> = Vec::new();
        let mut reps = Vec::new();
        for i in 0..n {
            if class_of[i] != usize::MAX {
                continue;
            }
            let c = classes.len();
            let members: Vec<T> = self
                .reach
                .ones_in_row(i)
                .filter(|&j| self.reach.get(j, i))
                .map(|j| {
                    class_of[j] = c;
                    self.elements[j].clone()
                })
                .collect();
            // elements are sorted, so the first unassigned member is the least
            classes.push(Class { representative: self.elements[i].clone(), members });
            reps.push(i);
        }
        let k = classes.len();
        let mut leq = BitMatrix::new(k);
        for (a, &ra) in reps.iter().enumerate() {
            for (b, &rb) in reps.iter().enumerate() {
                if self.reach.get(ra, rb) {
                    leq.set(a, b);
                }
            }
        }
        PartialOrder { elements: self.elements.clone(), class_of, classes, leq }
    }
}

fn index_in<T: Ord + Debug>(elements: &[T], x: &T) -> Result<usize> {
    elements.binary_search(x).map_err(|_| Error::input(format!("unknown element {x:?}")))
}

/// One condensation class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Class<T> {
    pub representative: T,
    pub members: Vec<T>,
}

/// An antisymmetric pre-order on condensation classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialOrder<T> {
    elements: Vec<T>,
    class_of: Vec<usize>,
    classes: Vec<Class<T>>,
    leq: BitMatrix,
}

impl<T: Ord + Clone + Debug> PartialOrder<T> {
    /// Classes sorted by representative.
    pub fn classes(&self) -> &[Class<T>] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// `a ≤ b` on class indices.
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq.get(a, b)
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq.get(a, b)
    }

    /// Class index of an original element.
    pub fn class_of(&self, x: &T) -> Option<usize> {
        self.elements.binary_search(x).ok().map(|i| self.class_of[i])
    }

    /// Class index of a class representative.
    pub fn class_index(&self, representative: &T) -> Option<usize> {
        self.classes.binary_search_by(|c| c.representative.cmp(representative)).ok()
    }

    /// All pairs `(a, b)` of class indices with `a ≤ b`.
    pub fn leq_pairs(&self) -> Vec<(usize, usize)> {
        (0..self.len()).flat_map(|a| self.leq.ones_in_row(a).map(move |b| (a, b))).collect()
    }

    /// Hasse diagram, made undirected for distances.
    pub fn cover_graph(&self) -> CoverGraph<T> {
        let k = self.len();
        let mut edges = Vec::new();
        let mut adj = vec![Vec::new(); k];
        for p in 0..k {
            // q covers p iff p < q and q is not strictly above any r with p < r
            let mut shadowed = vec![0u64; k.div_ceil(64)];
            for r in self.leq.ones_in_row(p).filter(|&r| r != p) {
                for q in self.leq.ones_in_row(r).filter(|&q| q != r) {
                    shadowed[q / 64] |= 1 << (q % 64);
                }
            }
            for q in self.leq.ones_in_row(p) {
                if q != p && shadowed[q / 64] >> (q % 64) & 1 == 0 {
                    edges.push((p, q));
                    adj[p].push(q);
                    adj[q].push(p);
                }
            }
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        CoverGraph {
            elements: self.elements.clone(),
            class_of: self.class_of.clone(),
            classes: self.classes.clone(),
            edges,
            adj,
        }
    }
}

/// Undirected cover graph of a [`PartialOrder`]. Vertices are class
/// indices; every directed edge `(p, q)` has `q` covering `p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverGraph<T> {
    elements: Vec<T>,
    class_of: Vec<usize>,
    classes: Vec<Class<T>>,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl<T: Ord + Clone + Debug> CoverGraph<T> {
    pub fn vertex_count(&self) -> usize {
        self.classes.len()
    }

    pub fn classes(&self) -> &[Class<T>] {
        &self.classes
    }

    /// Directed covering pairs `(lower, upper)` in class indices.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Covering pairs as `(lower, upper)` representatives.
    pub fn edge_labels(&self) -> Vec<(T, T)> {
        self.edges
            .iter()
            .map(|&(p, q)| (self.classes[p].representative.clone(), self.classes[q].representative.clone()))
            .collect()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    /// Class index of any element (members included, not only representatives).
    pub fn vertex_of(&self, x: &T) -> Option<usize> {
        self.elements.binary_search(x).ok().map(|i| self.class_of[i])
    }

    /// BFS distances from `source` to every vertex.
    pub fn distances_from(&self, source: usize) -> Vec<ExtendedNat> {
        let mut dist = vec![ExtendedNat::Infinite; self.vertex_count()];
        dist[source] = ExtendedNat::ZERO;
        let mut queue = VecDeque::from([(source, 0u64)]);
        while let Some((v, d)) = queue.pop_front() {
            for &w in &self.adj[v] {
                if dist[w] == ExtendedNat::Infinite {
                    dist[w] = ExtendedNat::Finite(d + 1);
                    queue.push_back((w, d + 1));
                }
            }
        }
        dist
    }

    pub fn distance_index(&self, p: usize, q: usize) -> ExtendedNat {
        if p == q {
            return ExtendedNat::ZERO;
        }
        self.distances_from(p)[q]
    }

    /// Shortest undirected path length between the classes of `p` and `q`.
    ///
    /// Element-level distance is the class-level distance, so `p` and `q`
    /// may be any members.
    pub fn graph_distance(&self, p: &T, q: &T) -> Result<ExtendedNat> {
        let a = self.vertex_of(p).ok_or_else(|| Error::input(format!("unknown vertex {p:?}")))?;
        let b = self.vertex_of(q).ok_or_else(|| Error::input(format!("unknown vertex {q:?}")))?;
        Ok(self.distance_index(a, b))
    }
}

/// Shorthand for [`Preorder::build`].
pub fn build_preorder<T, E, R>(elements: E, edges: R) -> Result<Preorder<T>>
where
    T: Ord + Clone + Debug,
    E: IntoIterator<Item = T>,
    R: IntoIterator<Item = (T, T)>,
{
    Preorder::build(elements, edges)
}
