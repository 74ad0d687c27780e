//! Inputs shared by the benchmarks.

use isodist::graph::SimpleGraph;

/// The Petersen graph: outer 5-cycle, inner pentagram, spokes.
pub fn petersen() -> SimpleGraph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
        edges.push((i, 5 + i));
    }
    SimpleGraph::new(10, &edges).expect("valid edge list")
}

/// `rows × cols` grid graph.
pub fn grid(rows: usize, cols: usize) -> SimpleGraph {
    let at = |r: usize, c: usize| r * cols + c;
    let mut edges = Vec::new();
    for r in 0..rows {
        for c in 0..cols {
            if c + 1 < cols {
                edges.push((at(r, c), at(r, c + 1)));
            }
            if r + 1 < rows {
                edges.push((at(r, c), at(r + 1, c)));
            }
        }
    }
    SimpleGraph::new(rows * cols, &edges).expect("valid edge list")
}
