mod common;

use std::collections::{BTreeMap, BTreeSet};

use isodist::category::toys::{finset_fragment, free_group_monos, vect_f2};
use isodist::category::{
    characteristic_metric, check_csb, check_cycle_triviality, check_pigeonhole_virtual, find_cycles,
    find_virtual_cycles, induced_pseudometric, is_virtual_cycle, metric_invariant, restrict, universal_order, Category,
    CategoryBuilder, CycleSearch, Invariant, Label, RestrictKind,
};
use isodist::{check_pseudometric, DistanceTable, ExtendedNat};
use proptest::prelude::*;

/// Random presentation without a composition table: objects `o0..`,
/// arbitrary arrows between them, labels from a small alphabet.
fn presentation() -> impl Strategy<Value = (usize, Vec<(usize, usize)>, Vec<u8>)> {
    (1usize..=6)
        .prop_flat_map(|n| (Just(n), prop::collection::vec((0..n, 0..n), 0..10), prop::collection::vec(0u8..4, n)))
}

fn build(n: usize, arrows: &[(usize, usize)]) -> Category {
    let mut b = CategoryBuilder::new();
    for i in 0..n {
        b.add_object(format!("o{i}"), None);
    }
    for (k, &(x, y)) in arrows.iter().enumerate() {
        b.add_morphism(format!("m{k}"), x, y, Vec::new());
    }
    b.build().unwrap()
}

fn labelling(labels: &[u8]) -> Invariant {
    Invariant::new(labels.iter().enumerate().map(|(i, l)| (format!("o{i}"), l.to_string())))
}

/// Label-level generating edges, as indices into the sorted label set.
fn generators(arrows: &[(usize, usize)], labels: &[u8]) -> (Vec<u8>, Vec<(usize, usize)>) {
    let alphabet: Vec<u8> = labels.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
    let at = |l: u8| alphabet.binary_search(&l).unwrap();
    let edges = arrows.iter().map(|&(x, y)| (at(labels[x]), at(labels[y]))).collect();
    (alphabet, edges)
}

proptest! {
    #[test]
    fn universal_order_is_generated_by_morphisms((n, arrows, labels) in presentation()) {
        let cat = build(n, &arrows);
        let inv = labelling(&labels);
        let uo = universal_order(&cat, &inv).unwrap();
        let (alphabet, edges) = generators(&arrows, &labels);
        let reference = common::closure(alphabet.len(), &edges);
        for (i, a) in alphabet.iter().enumerate() {
            for (j, b) in alphabet.iter().enumerate() {
                let (la, lb) = (Label::atom(a.to_string()), Label::atom(b.to_string()));
                prop_assert_eq!(uo.leq(&la, &lb), reference[i][j]);
            }
        }
        // soundness: every arrow is a relation
        for &(x, y) in &arrows {
            prop_assert!(uo.leq(&Label::atom(labels[x].to_string()), &Label::atom(labels[y].to_string())));
        }
    }

    #[test]
    fn dropping_an_essential_generator_shrinks_the_order((n, arrows, labels) in presentation()) {
        let (alphabet, edges) = generators(&arrows, &labels);
        for skip in 0..edges.len() {
            let (a, b) = edges[skip];
            let rest: Vec<_> = edges.iter().enumerate().filter(|&(k, _)| k != skip).map(|(_, &e)| e).collect();
            let smaller = common::closure(alphabet.len(), &rest);
            if !smaller[a][b] {
                let kept: Vec<(usize, usize)> = arrows.iter().enumerate().filter(|&(k, _)| k != skip).map(|(_, &e)| e).collect();
                let uo = universal_order(&build(n, &kept), &labelling(&labels)).unwrap();
                let (la, lb) = (Label::atom(alphabet[a].to_string()), Label::atom(alphabet[b].to_string()));
                prop_assert!(!uo.leq(&la, &lb));
            }
        }
    }

    #[test]
    fn induced_distance_is_a_pseudometric((n, arrows, labels) in presentation()) {
        let cat = build(n, &arrows);
        let table = induced_pseudometric(&cat, &labelling(&labels)).unwrap();
        prop_assert!(check_pseudometric(&table).unwrap().is_pseudometric());
    }

    #[test]
    fn characteristic_metric_round_trip(labels in prop::collection::vec(0u8..3, 1..7)) {
        let inv = labelling(&labels);
        let objects: Vec<String> = (0..labels.len()).map(|i| format!("o{i}")).collect();
        let table = DistanceTable::from_fn(objects.clone(), |x, y| {
            ExtendedNat::from(u64::from(characteristic_metric(&inv, x, y).unwrap()))
        });
        for (i, x) in objects.iter().enumerate() {
            for (j, y) in objects.iter().enumerate() {
                let same_profile = metric_invariant(&table, x).unwrap() == metric_invariant(&table, y).unwrap();
                prop_assert_eq!(same_profile, labels[i] == labels[j]);
            }
        }
    }

    #[test]
    fn profile_invariant_remembers_only_zero_distance(points in prop::collection::vec((0u64..3, 0u64..3), 1..7)) {
        // L1 distances between possibly repeated lattice points: a pseudo-metric with zeros off the diagonal
        let names: Vec<usize> = (0..points.len()).collect();
        let d = |i: &usize, j: &usize| {
            let (a, b) = (points[*i], points[*j]);
            ExtendedNat::from(a.0.abs_diff(b.0) + a.1.abs_diff(b.1))
        };
        let table = DistanceTable::from_fn(names.clone(), d);
        for i in &names {
            for j in &names {
                let c = metric_invariant(&table, i).unwrap() != metric_invariant(&table, j).unwrap();
                prop_assert_eq!(c, d(i, j) != ExtendedNat::ZERO);
            }
        }
    }

    #[test]
    fn plain_cycles_are_virtual_cycles((n, arrows, labels) in presentation()) {
        let mut b = CategoryBuilder::new();
        for i in 0..n {
            b.add_object(format!("o{i}"), None);
        }
        for (k, &(x, y)) in arrows.iter().enumerate() {
            b.add_morphism(format!("m{k}"), x, y, Vec::new());
        }
        b.declare_no_isos();
        let cat = b.build().unwrap();
        let inv = labelling(&labels);
        for w in find_cycles(&cat, CycleSearch::default()).unwrap().witnesses {
            prop_assert!(is_virtual_cycle(&cat, &inv, &w.morphisms()).unwrap());
        }
    }
}

#[test]
fn isomorphic_objects_are_at_distance_zero() {
    let cat = finset_fragment(&[2, 2, 1]);
    // deliberately not an isomorphism invariant
    let inv = Invariant::new([("X0", "a"), ("X1", "b"), ("X2", "c")]);
    let table = induced_pseudometric(&cat, &inv).unwrap();
    assert_eq!(table.get(&"X0".to_string(), &"X1".to_string()), Some(ExtendedNat::ZERO));
}

#[test]
fn cycles_are_trivial_in_every_small_csb_category() {
    let mut checked = 0;
    let mut check = |cat: &Category, kind: &RestrictKind| {
        let report = check_cycle_triviality(cat, kind, CycleSearch::default()).unwrap();
        if report.csb_holds {
            assert!(report.violations.is_empty(), "nontrivial cycle in a CSB category: {:?}", report.violations);
            assert!(!report.truncated);
            checked += 1;
        }
    };
    for sizes in common::size_multisets(3, 4) {
        let cat = finset_fragment(&sizes);
        check(&cat, &RestrictKind::Mono);
        check(&cat, &RestrictKind::Epi);
    }
    for n in 1..=4 {
        for relation in common::all_preorders(n) {
            let cat = common::thin_category(n, &relation);
            check(&cat, &RestrictKind::Mono);
        }
    }
    let vect = vect_f2(2);
    check(&vect, &RestrictKind::Mono);
    check(&vect, &RestrictKind::Epi);
    assert!(checked > 400);
}

#[test]
fn monic_csb_failure_has_a_nontrivial_cycle() {
    let cat = free_group_monos();
    assert!(!check_csb(&cat, &RestrictKind::Mono).unwrap().holds);
    let report = check_cycle_triviality(&cat, &RestrictKind::Mono, CycleSearch::default()).unwrap();
    assert_eq!(report.violations.len(), 1);
}

#[test]
fn restricted_finite_sets_are_pigeonhole_for_every_invariant() {
    for sizes in common::size_multisets(3, 4) {
        let full = finset_fragment(&sizes);
        let distinct: Vec<usize> = sizes.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
        for kind in [RestrictKind::Mono, RestrictKind::Epi] {
            let cat = restrict(&full, &kind).unwrap();
            for blocks in common::set_partitions(distinct.len()) {
                let block_of: BTreeMap<usize, usize> = distinct.iter().copied().zip(blocks).collect();
                let inv =
                    Invariant::new(sizes.iter().enumerate().map(|(i, s)| (format!("X{i}"), block_of[s].to_string())));
                let report = check_pigeonhole_virtual(&cat, &inv, CycleSearch::default()).unwrap();
                assert!(report.is_pigeonhole(), "{sizes:?} {kind:?}: {:?}", report.precondition_failures);
                assert!(report.violations.is_empty(), "{sizes:?} {kind:?}: {:?}", report.violations);
            }
        }
    }
}

#[test]
fn unrestricted_finite_sets_are_not_pigeonhole() {
    let cat = finset_fragment(&[2, 2]);
    let inv = Invariant::new([("X0", "a"), ("X1", "a")]);
    let report = check_pigeonhole_virtual(&cat, &inv, CycleSearch::default()).unwrap();
    assert!(!report.is_pigeonhole());
    assert!(report.precondition_failures.iter().any(|f| f.morphism == "X0->X0[0,0]"));
}

#[test]
fn virtual_cycle_through_size_only_labels() {
    // sizes 1 and 2 with the same label: maps both ways in the full fragment form a virtual cycle
    let cat = finset_fragment(&[1, 2]);
    let inv = Invariant::new([("X0", "a"), ("X1", "b")]);
    let report = find_virtual_cycles(&cat, &inv, CycleSearch::default()).unwrap();
    assert_eq!(report.nontrivial().count(), 1);
}
