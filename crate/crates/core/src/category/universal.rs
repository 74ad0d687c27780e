use std::collections::{BTreeMap, HashMap};

use super::{Category, Invariant, Label};
use crate::error::{Error, Result};
use crate::extnat::ExtendedNat;
use crate::metric::DistanceTable;
use crate::poset::{CoverGraph, PartialOrder, Preorder};

/// The order on invariant values generated by the morphisms of a category.
#[derive(Debug, Clone)]
pub struct UniversalOrder {
    /// `δ ≼ ε` before condensation.
    pub preorder: Preorder<Label>,
    pub order: PartialOrder<Label>,
    pub cover: CoverGraph<Label>,
    /// Generating edge `(I[x], I[y])` ↦ ids of the morphisms `x → y` producing it.
    pub provenance: BTreeMap<(Label, Label), Vec<String>>,
}

impl UniversalOrder {
    pub fn leq(&self, a: &Label, b: &Label) -> bool {
        match (self.order.class_of(a), self.order.class_of(b)) {
            (Some(x), Some(y)) => self.order.leq(x, y),
            _ => false,
        }
    }

    pub fn distance(&self, a: &Label, b: &Label) -> Result<ExtendedNat> {
        self.cover.graph_distance(a, b)
    }
}

fn labels_for(cat: &Category, inv: &Invariant) -> Result<Vec<Label>> {
    cat.objects_raw().iter().map(|o| inv.label(&o.id).cloned()).collect()
}

/// Reachability over invariant values with one edge `(I[x], I[y])` per
/// morphism `x → y`, condensed to a partial order.
pub fn universal_order(cat: &Category, inv: &Invariant) -> Result<UniversalOrder> {
    let labels = labels_for(cat, inv)?;
    if !inv.is_surjective() {
        let missing: Vec<String> = inv.target().difference(&inv.image()).map(|l| l.to_string()).collect();
        return Err(Error::input(format!("invariant is not surjective; unhit values: {}", missing.join(", "))));
    }
    let mut provenance: BTreeMap<(Label, Label), Vec<String>> = BTreeMap::new();
    for m in cat.morphisms_raw() {
        provenance.entry((labels[m.src].clone(), labels[m.dst].clone())).or_default().push(m.id.clone());
    }
    let preorder = Preorder::build(inv.target(), provenance.keys().cloned())?;
    let order = preorder.condense();
    let cover = order.cover_graph();
    Ok(UniversalOrder { preorder, order, cover, provenance })
}

/// `d(x, y)` = cover-graph distance between the classes of `I[x]` and `I[y]`.
pub fn induced_pseudometric(cat: &Category, inv: &Invariant) -> Result<DistanceTable<String>> {
    let uo = universal_order(cat, inv)?;
    let labels = labels_for(cat, inv)?;
    let vertex: Vec<usize> =
        labels.iter().map(|l| uo.cover.vertex_of(l).expect("every label is in the order")).collect();
    let mut rows: HashMap<usize, Vec<ExtendedNat>> = HashMap::new();
    for &v in &vertex {
        rows.entry(v).or_insert_with(|| uo.cover.distances_from(v));
    }
    let ids: Vec<String> = cat.object_ids().map(String::from).collect();
    let pos: HashMap<&str, usize> = ids.iter().enumerate().map(|(i, s)| (s.as_str(), i)).collect();
    Ok(DistanceTable::from_fn(ids.clone(), |x, y| rows[&vertex[pos[x.as_str()]]][vertex[pos[y.as_str()]]]))
}

/// 0 when the labels agree, 1 otherwise.
pub fn characteristic_metric(inv: &Invariant, x: &str, y: &str) -> Result<u8> {
    Ok(u8::from(inv.label(x)? != inv.label(y)?))
}

/// Labels `x ↦ (I₁(x), I₂(G(x)))` for a functor with object map `functor`.
pub fn union_invariant(first: &Invariant, functor: &BTreeMap<String, String>, second: &Invariant) -> Result<Invariant> {
    let labels = first
        .labels()
        .iter()
        .map(|(x, l1)| {
            let gx = functor.get(x).ok_or_else(|| Error::input(format!("functor has no image for object {x:?}")))?;
            Ok((x.clone(), Label::pair(l1.clone(), second.label(gx)?.clone())))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Invariant::new(labels))
}

/// Outcome of [`check_universal_factorization`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub holds: bool,
    /// Each relation `δ ≼ ε` of the universal order, which `L` sends to the
    /// relation `δ ≤ ε` of the target (objects are fixed by `L`).
    pub relation_map: Vec<(Label, Label)>,
    pub failing: Option<(Label, Label)>,
}

/// Check that a functor `K` into the thin category `target` (objects `Δ`,
/// agreeing with the invariant on objects) factors through the universal
/// order.
///
/// `k_objects` is the object map of `K`. Since the target is thin, `K` is
/// determined by it and is a functor exactly when every morphism `x → y`
/// lands on a relation `K(x) ≤ K(y)`.
pub fn check_universal_factorization(
    cat: &Category,
    inv: &Invariant,
    target: &Preorder<Label>,
    k_objects: &BTreeMap<String, Label>,
) -> Result<Factorization> {
    let uo = universal_order(cat, inv)?;
    for label in inv.target() {
        if target.index_of(&label).is_none() {
            return Err(Error::input(format!("target category lacks object {label}")));
        }
    }
    for o in cat.objects_raw() {
        let k = k_objects.get(&o.id).ok_or_else(|| Error::input(format!("K has no image for object {:?}", o.id)))?;
        if k != inv.label(&o.id)? {
            return Err(Error::input(format!("K sends {:?} to {k}, disagreeing with the invariant", o.id)));
        }
    }
    for m in cat.morphisms_raw() {
        let (a, b) = (&k_objects[&cat.objects_raw()[m.src].id], &k_objects[&cat.objects_raw()[m.dst].id]);
        if !target.reaches(a, b) {
            return Err(Error::input(format!("K is not a functor: morphism {} needs {a} ≤ {b} in the target", m.id)));
        }
    }
    let mut relation_map = Vec::new();
    let mut failing = None;
    for (a, b) in uo.preorder.pairs() {
        if target.reaches(&a, &b) {
            relation_map.push((a, b));
        } else if failing.is_none() {
            failing = Some((a, b));
        }
    }
    Ok(Factorization { holds: failing.is_none(), relation_map, failing })
}
