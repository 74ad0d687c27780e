use super::SimpleGraph;
use crate::error::{Error, Result};

/// Largest source graph searched exhaustively by [`embeds`].
pub const DEFAULT_EMBED_CAP: usize = 10;

/// An injective vertex map `g1 → g2` sending edges to edges, if one
/// exists. `map[v]` is the image of vertex `v`.
pub fn embeds(g1: &SimpleGraph, g2: &SimpleGraph) -> Result<Option<Vec<usize>>> {
    embeds_with_cap(g1, g2, DEFAULT_EMBED_CAP)
}

pub fn embeds_with_cap(g1: &SimpleGraph, g2: &SimpleGraph, cap: usize) -> Result<Option<Vec<usize>>> {
    let n1 = g1.vertex_count();
    if n1 > cap {
        return Err(Error::limit(format!("embedding search is capped at {cap} source vertices, got {n1}")));
    }
    if n1 > g2.vertex_count() || g1.edge_count() > g2.edge_count() {
        return Ok(None);
    }
    // place high-degree vertices first; they constrain the most
    let mut order: Vec<usize> = (0..n1).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g1.degree(v)));
    let mut map = vec![usize::MAX; n1];
    let mut used = 0u64;
    Ok(place(g1, g2, &order, &mut map, &mut used).then_some(map))
}

fn place(g1: &SimpleGraph, g2: &SimpleGraph, order: &[usize], map: &mut [usize], used: &mut u64) -> bool {
    let Some((&v, rest)) = order.split_first() else {
        return true;
    };
    for w in 0..g2.vertex_count() {
        if *used >> w & 1 == 1 || g2.degree(w) < g1.degree(v) {
            continue;
        }
        let consistent = g1.neighbors(v).filter(|&u| map[u] != usize::MAX).all(|u| g2.has_edge(w, map[u]));
        if consistent {
            map[v] = w;
            *used |= 1 << w;
            if place(g1, g2, rest, map, used) {
                return true;
            }
            *used &= !(1 << w);
            map[v] = usize::MAX;
        }
    }
    false
}
