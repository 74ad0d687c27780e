//! Independent reference implementations used as test oracles. None of
//! them calls into the library's algorithms.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use isodist::graph::SimpleGraph;

/// Reflexive-transitive closure by Floyd-Warshall over booleans.
pub fn closure(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<bool>> {
    let mut r = vec![vec![false; n]; n];
    for (i, row) in r.iter_mut().enumerate() {
        row[i] = true;
    }
    for &(a, b) in edges {
        r[a][b] = true;
    }
    for k in 0..n {
        for i in 0..n {
            if r[i][k] {
                for j in 0..n {
                    if r[k][j] {
                        r[i][j] = true;
                    }
                }
            }
        }
    }
    r
}

/// Shortest path length by enumerating every simple path from `s`.
pub fn shortest_by_enumeration(n: usize, edges: &[(usize, usize)], s: usize, t: usize) -> Option<usize> {
    fn walk(v: usize, t: usize, adj: &[Vec<usize>], seen: &mut Vec<bool>, len: usize, best: &mut Option<usize>) {
        if v == t {
            *best = Some(best.map_or(len, |b| b.min(len)));
            return;
        }
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                walk(w, t, adj, seen, len + 1, best);
                seen[w] = false;
            }
        }
    }
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut seen = vec![false; n];
    seen[s] = true;
    let mut best = None;
    walk(s, t, &adj, &mut seen, 0, &mut best);
    best
}

/// Plain breadth-first search over an explicit neighbour function.
pub fn bfs<T: Ord + Clone>(start: T, goal: &T, mut next: impl FnMut(&T) -> Vec<T>) -> Option<usize> {
    let mut seen = BTreeSet::from([start.clone()]);
    let mut queue = VecDeque::from([(start, 0usize)]);
    while let Some((x, d)) = queue.pop_front() {
        if &x == goal {
            return Some(d);
        }
        for y in next(&x) {
            if seen.insert(y.clone()) {
                queue.push_back((y, d + 1));
            }
        }
    }
    None
}

/// Number of proper colourings with `k` colours, by exhaustive assignment.
pub fn count_colourings(g: &SimpleGraph, k: u64) -> u64 {
    fn go(v: usize, g: &SimpleGraph, k: u64, colour: &mut Vec<u64>) -> u64 {
        if v == g.vertex_count() {
            return 1;
        }
        let mut total = 0;
        for c in 0..k {
            if (0..v).all(|u| !g.has_edge(u, v) || colour[u] != c) {
                colour[v] = c;
                total += go(v + 1, g, k, colour);
            }
        }
        total
    }
    go(0, g, k, &mut vec![0; g.vertex_count()])
}

/// Graphs of the chromatic-distance illustration on vertices a..e = 0..4:
/// a five-cycle with chords, differing in one chord.
pub fn graph_h() -> SimpleGraph {
    SimpleGraph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2), (0, 3), (1, 4)]).unwrap()
}

pub fn graph_j() -> SimpleGraph {
    SimpleGraph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2), (0, 3)]).unwrap()
}

pub fn graph_k() -> SimpleGraph {
    SimpleGraph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2), (0, 3), (1, 3)]).unwrap()
}

/// Triangle plus an isolated vertex, and the four-cycle.
pub fn graph_g1() -> SimpleGraph {
    SimpleGraph::new(4, &[(0, 1), (1, 2), (0, 2)]).unwrap()
}

pub fn graph_g2() -> SimpleGraph {
    SimpleGraph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()
}

/// Random simple graph on `n` vertices with edge probability `1/2`,
/// driven by a caller-supplied bit source.
pub fn graph_from_bits(n: usize, bits: u64) -> SimpleGraph {
    let mut edges = Vec::new();
    let mut k = 0;
    for u in 0..n {
        for v in u + 1..n {
            if bits >> (k % 64) & 1 == 1 {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    SimpleGraph::new(n, &edges).unwrap()
}

/// Exponents of `n`, by trial division.
pub fn valuations(mut n: u64) -> BTreeMap<u64, u32> {
    let mut out = BTreeMap::new();
    let mut p = 2;
    while p * p <= n {
        while n.is_multiple_of(p) {
            *out.entry(p).or_default() += 1;
            n /= p;
        }
        p += 1;
    }
    if n > 1 {
        *out.entry(n).or_default() += 1;
    }
    out
}

/// All partitions of `k` as weakly decreasing vectors.
pub fn partitions(k: u32) -> Vec<Vec<u32>> {
    fn go(k: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if k == 0 {
            out.push(cur.clone());
            return;
        }
        for part in (1..=k.min(max)).rev() {
            cur.push(part);
            go(k - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(k, k, &mut Vec::new(), &mut out);
    out
}

/// Every abelian group of order `n`, as a list of cyclic prime-power moduli.
pub fn abelian_groups(n: u64) -> Vec<Vec<u64>> {
    let mut groups = vec![Vec::new()];
    for (p, e) in valuations(n) {
        let mut next = Vec::new();
        for g in &groups {
            for lambda in partitions(e) {
                let mut h = g.clone();
                h.extend(lambda.iter().map(|&k| p.pow(k)));
                next.push(h);
            }
        }
        groups = next;
    }
    groups
}

/// Invariant factors of `⊕ Z/mᵢ` by repeatedly replacing pairs with
/// `(gcd, lcm)`, the textbook Smith-form argument for diagonal matrices.
pub fn invariant_factors(moduli: &[u64]) -> Vec<u64> {
    fn gcd(a: u64, b: u64) -> u64 {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    let mut m: Vec<u64> = moduli.iter().copied().filter(|&x| x > 1).collect();
    let mut changed = true;
    while changed {
        changed = false;
        for i in 0..m.len() {
            for j in i + 1..m.len() {
                let (a, b) = (m[i], m[j]);
                if b % a != 0 {
                    let g = gcd(a, b);
                    m[i] = g;
                    m[j] = a / g * b;
                    changed = true;
                }
            }
        }
        m.retain(|&x| x > 1);
        m.sort_unstable();
    }
    m
}

/// Distance in a product of Young lattices: the number of boxes in the
/// symmetric difference of the diagrams, prime by prime. Chains are
/// given by their parts.
pub fn young_distance(a: &[u64], b: &[u64]) -> u64 {
    let diagram = |parts: &[u64]| -> BTreeMap<u64, Vec<u32>> {
        let mut out: BTreeMap<u64, Vec<u32>> = BTreeMap::new();
        for (i, &d) in parts.iter().rev().enumerate() {
            for (p, e) in valuations(d) {
                let row = out.entry(p).or_default();
                row.resize(i + 1, 0);
                row[i] = e;
            }
        }
        out
    };
    let (da, db) = (diagram(a), diagram(b));
    let primes: BTreeSet<u64> = da.keys().chain(db.keys()).copied().collect();
    primes
        .into_iter()
        .map(|p| {
            let empty = Vec::new();
            let (x, y) = (da.get(&p).unwrap_or(&empty), db.get(&p).unwrap_or(&empty));
            (0..x.len().max(y.len()))
                .map(|i| u64::from(x.get(i).copied().unwrap_or(0).abs_diff(y.get(i).copied().unwrap_or(0))))
                .sum::<u64>()
        })
        .sum()
}

/// Determinant by the Leibniz permutation sum over a commutative ring
/// given by closures.
pub fn leibniz<R: Clone>(
    cells: &[Vec<R>],
    zero: R,
    one: R,
    add: impl Fn(&R, &R) -> R,
    mul: impl Fn(&R, &R) -> R,
    neg: impl Fn(&R) -> R,
) -> R {
    fn perms(n: usize) -> Vec<(Vec<usize>, bool)> {
        if n == 0 {
            return vec![(vec![], true)];
        }
        let mut out = Vec::new();
        for (p, even) in perms(n - 1) {
            for pos in 0..n {
                let mut q = p.clone();
                q.insert(pos, n - 1);
                // inserting at `pos` moves past n-1-pos larger positions
                let flips = (n - 1 - pos) % 2 == 1;
                out.push((q, even != flips));
            }
        }
        out
    }
    let n = cells.len();
    let mut total = zero;
    for (perm, even) in perms(n) {
        let mut term = one.clone();
        for (i, &j) in perm.iter().enumerate() {
            term = mul(&term, &cells[i][j]);
        }
        total = add(&total, &if even { term } else { neg(&term) });
    }
    total
}

/// The thin category of the preorder generated by `relation` on `n`
/// objects: one morphism `x → y` exactly when `x ≤ y`.
pub fn thin_category(n: usize, relation: &[(usize, usize)]) -> isodist::category::Category {
    let leq = closure(n, relation);
    let mut b = isodist::category::CategoryBuilder::new();
    for i in 0..n {
        b.add_object(format!("o{i}"), None);
    }
    let mut arrow = vec![vec![None; n]; n];
    for x in 0..n {
        for y in 0..n {
            if leq[x][y] {
                arrow[x][y] = Some(b.add_morphism(format!("o{x}<=o{y}"), x, y, Vec::new()));
            }
        }
    }
    b.enable_composition();
    for x in 0..n {
        b.set_identity(x, arrow[x][x].unwrap());
        for y in 0..n {
            for z in 0..n {
                if let (Some(f), Some(g)) = (arrow[x][y], arrow[y][z]) {
                    b.set_composite(g, f, arrow[x][z].unwrap());
                }
            }
        }
    }
    b.build().unwrap()
}

/// Every preorder on `n` labelled points, each as its list of relations.
pub fn all_preorders(n: usize) -> Vec<Vec<(usize, usize)>> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|x| (0..n).map(move |y| (x, y))).filter(|(x, y)| x != y).collect();
    let mut seen = BTreeSet::new();
    for mask in 0u32..(1 << pairs.len()) {
        let chosen: Vec<(usize, usize)> =
            pairs.iter().enumerate().filter(|&(i, _)| mask >> i & 1 == 1).map(|(_, &p)| p).collect();
        let c = closure(n, &chosen);
        let closed: Vec<(usize, usize)> = pairs.iter().copied().filter(|&(x, y)| c[x][y]).collect();
        seen.insert(closed);
    }
    seen.into_iter().collect()
}

/// Multisets of set sizes drawn from `0..=max_size`, with 1 to `max_len` members.
pub fn size_multisets(max_size: usize, max_len: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, max_size: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if !cur.is_empty() {
            out.push(cur.clone());
        }
        if left == 0 {
            return;
        }
        for s in start..=max_size {
            cur.push(s);
            go(s, max_size, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, max_size, max_len, &mut Vec::new(), &mut out);
    out
}

/// Set partitions of `0..k`, as block indices per element (restricted growth strings).
pub fn set_partitions(k: usize) -> Vec<Vec<usize>> {
    fn go(i: usize, k: usize, blocks: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == k {
            out.push(cur.clone());
            return;
        }
        for b in 0..=blocks {
            cur.push(b);
            go(i + 1, k, blocks.max(b + 1), cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, k, 0, &mut Vec::new(), &mut out);
    out
}

/// All-pairs shortest paths in the cover graph of the divisors of `l`
/// under divisibility. Covers are found from the definition (no divisor
/// strictly in between), without assuming they are prime steps.
pub fn divisor_cover_distances(l: u64) -> BTreeMap<(u64, u64), u64> {
    let divisors: Vec<u64> = (1..=l).filter(|d| l.is_multiple_of(*d)).collect();
    let k = divisors.len();
    let mut adj = vec![Vec::new(); k];
    for a in 0..k {
        for b in 0..k {
            let (x, y) = (divisors[a], divisors[b]);
            if x != y && y % x == 0 {
                let between = divisors.iter().any(|&z| z != x && z != y && z % x == 0 && y % z == 0);
                if !between {
                    adj[a].push(b);
                    adj[b].push(a);
                }
            }
        }
    }
    let mut out = BTreeMap::new();
    for s in 0..k {
        let mut dist = vec![u64::MAX; k];
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for &w in &adj[v] {
                if dist[w] == u64::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        for t in 0..k {
            out.insert((divisors[s], divisors[t]), dist[t]);
        }
    }
    out
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Nodes and solid edges of the divisor-chain cover illustration.
pub fn divisor_figure() -> (Vec<&'static str>, Vec<(&'static str, &'static str)>) {
    let nodes = vec!["2,2,4", "2,2,2", "2,4", "8", "2,2", "4", "2", "3,3", "9", "6", "3"];
    let edges = vec![
        ("2", "4"),
        ("4", "8"),
        ("2", "2,2"),
        ("2,2", "2,2,2"),
        ("2,2,2", "2,2,4"),
        ("2,2", "2,4"),
        ("2,4", "2,2,4"),
        ("4", "2,4"),
        ("2", "6"),
        ("3", "6"),
        ("3", "9"),
        ("3", "3,3"),
    ];
    (nodes, edges)
}
