mod common;

use std::collections::BTreeSet;

use isodist::abelian::{canonical_chain, chain_distance, chain_leq, chain_neighbors, surjection_exists, DivisorChain};
use isodist::{check_pseudometric, DistanceTable, ExtendedNat};
use proptest::prelude::*;

const SMALL_PRIMES: [u64; 18] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61];

/// Every divisor chain of a group of order at most `max`, with its moduli.
fn universe(max: u64) -> Vec<(Vec<u64>, DivisorChain)> {
    (1..=max)
        .flat_map(common::abelian_groups)
        .map(|moduli| {
            let chain = canonical_chain(&moduli).unwrap();
            (moduli, chain)
        })
        .collect()
}

/// The order relation read straight off the parts: `m ≤ n` and `e_i | d_{n−m+i}`.
fn literal_leq(c: &DivisorChain, e: &DivisorChain) -> bool {
    let (d, e) = (c.parts(), e.parts());
    let (n, m) = (d.len(), e.len());
    m <= n && (0..m).all(|i| d[n - m + i] % e[i] == 0)
}

fn chain(s: &str) -> DivisorChain {
    s.parse().unwrap()
}

#[test]
fn canonical_chains_match_invariant_factors() {
    for a in 1..=30u64 {
        for b in 1..=30u64 {
            for c in [1u64, 2, 4, 6, 9] {
                let moduli = [a, b, c];
                assert_eq!(canonical_chain(&moduli).unwrap().parts(), common::invariant_factors(&moduli).as_slice());
            }
        }
    }
}

#[test]
fn chain_order_is_a_partial_order() {
    let chains: Vec<DivisorChain> = universe(64).into_iter().map(|(_, c)| c).collect();
    let distinct: BTreeSet<&DivisorChain> = chains.iter().collect();
    assert_eq!(distinct.len(), chains.len(), "non-isomorphic groups got equal chains");
    for a in &chains {
        assert!(chain_leq(a, a));
        for b in &chains {
            assert_eq!(chain_leq(a, b), literal_leq(a, b), "{a} vs {b}");
            if a != b {
                assert!(!(chain_leq(a, b) && chain_leq(b, a)), "{a} and {b}");
            }
            if chain_leq(a, b) {
                for c in &chains {
                    if chain_leq(b, c) {
                        assert!(chain_leq(a, c), "{a} <= {b} <= {c}");
                    }
                }
            }
        }
    }
}

#[test]
fn chain_order_is_surjectivity() {
    let groups = universe(64);
    for (ma, a) in &groups {
        for (mb, b) in &groups {
            assert_eq!(chain_leq(a, b), surjection_exists(ma, mb).unwrap(), "{a} onto {b}");
        }
    }
}

#[test]
fn neighbours_are_exactly_the_covers() {
    let chains: Vec<DivisorChain> = universe(64).into_iter().map(|(_, c)| c).collect();
    let lt = |a: &DivisorChain, b: &DivisorChain| a != b && chain_leq(a, b);
    for c in &chains {
        let covers_above: BTreeSet<&DivisorChain> =
            chains.iter().filter(|e| lt(c, e) && !chains.iter().any(|f| lt(c, f) && lt(f, e))).collect();
        let covered_below: BTreeSet<&DivisorChain> =
            chains.iter().filter(|e| lt(e, c) && !chains.iter().any(|f| lt(e, f) && lt(f, c))).collect();
        let (above, below) = chain_neighbors(c, &SMALL_PRIMES);
        assert_eq!(above.iter().collect::<BTreeSet<_>>(), covers_above, "above {c}");
        let below_in_range: BTreeSet<&DivisorChain> = below.iter().filter(|d| d.order().unwrap() <= 64).collect();
        assert_eq!(below_in_range, covered_below, "below {c}");
        // each step changes the order by one prime
        for d in above.iter().chain(&below) {
            assert_eq!(c.big_omega().abs_diff(d.big_omega()), 1);
        }
    }
}

#[test]
fn distances_on_the_illustration() {
    let (nodes, edges) = common::divisor_figure();
    let index = |s: &str| nodes.iter().position(|&n| n == s).unwrap();
    let drawn: BTreeSet<(usize, usize)> =
        edges.iter().flat_map(|&(a, b)| [(index(a), index(b)), (index(b), index(a))]).collect();
    let chains: Vec<DivisorChain> = nodes.iter().map(|s| chain(s)).collect();
    let primes = [2, 3];
    // cover edges among the drawn nodes are exactly the drawn edges
    for (i, c) in chains.iter().enumerate() {
        let (above, below) = chain_neighbors(c, &primes);
        for (j, d) in chains.iter().enumerate() {
            let adjacent = above.contains(d) || below.contains(d);
            assert_eq!(adjacent, drawn.contains(&(i, j)), "{c} -- {d}");
        }
    }
    // and chain distances are shortest paths in the drawing
    let edge_list: Vec<(usize, usize)> = drawn.iter().copied().collect();
    for i in 0..nodes.len() {
        for j in 0..nodes.len() {
            let drawn_distance = common::shortest_by_enumeration(nodes.len(), &edge_list, i, j).unwrap() as u64;
            assert_eq!(chain_distance(&chains[i], &chains[j]), drawn_distance, "{} to {}", nodes[i], nodes[j]);
        }
    }
    assert_eq!(chain_distance(&chain("2,2,4"), &chain("2,2,2")), 1);
    assert_eq!(chain_distance(&chain("2,2,4"), &chain("8")), 3);
    assert_eq!(chain_distance(&chain("2,2,2"), &chain("8")), 4);
}

fn random_chain() -> impl Strategy<Value = DivisorChain> {
    prop::collection::vec(prop::sample::select(vec![1u64, 2, 3, 4, 5, 6, 8, 9, 12, 25, 27]), 0..4)
        .prop_map(|moduli| canonical_chain(&moduli).unwrap())
}

proptest! {
    #[test]
    fn distance_counts_boxes(a in random_chain(), b in random_chain()) {
        prop_assert_eq!(chain_distance(&a, &b), common::young_distance(a.parts(), b.parts()));
        prop_assert!(chain_distance(&a, &b) >= a.big_omega().abs_diff(b.big_omega()));
    }

    #[test]
    fn prime_restriction_loses_nothing(a in random_chain(), b in random_chain()) {
        prop_assume!(a.order().unwrap() * b.order().unwrap() <= 4096);
        // unrestricted search: allow every prime up to 7 at every step
        let plain = common::bfs(a.clone(), &b, |c| {
            let (mut up, down) = chain_neighbors(c, &[2, 3, 5, 7]);
            up.extend(down);
            up
        });
        prop_assert_eq!(Some(chain_distance(&a, &b) as usize), plain);
    }

    #[test]
    fn chain_distance_is_a_pseudometric(family in prop::collection::vec(random_chain(), 2..7)) {
        let ids: Vec<usize> = (0..family.len()).collect();
        let table = DistanceTable::from_fn(ids, |&i, &j| ExtendedNat::from(chain_distance(&family[i], &family[j])));
        prop_assert!(check_pseudometric(&table).unwrap().is_pseudometric());
    }

    #[test]
    fn text_round_trip(a in random_chain()) {
        prop_assert_eq!(a.to_string().parse::<DivisorChain>().unwrap(), a);
    }
}
