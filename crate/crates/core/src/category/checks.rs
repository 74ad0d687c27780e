use serde::Serialize;

use super::{
    find_cycles, find_virtual_cycles, restrict, Category, CycleSearch, CyclicWitness, Invariant, Label, RestrictKind,
};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CsbReport {
    pub holds: bool,
    /// `(x, y, f: x → y, g: y → x)` with `x ≇ y`.
    pub counterexample: Option<(String, String, String, String)>,
}

/// Whether morphisms of `kind` in both directions force isomorphism.
pub fn check_csb(cat: &Category, kind: &RestrictKind) -> Result<CsbReport> {
    let kinds = cat.kinds()?;
    let iso = cat.iso_classes()?;
    let selected = |m: usize| match kind {
        RestrictKind::Mono => kinds[m].mono,
        RestrictKind::Epi => kinds[m].epi,
        RestrictKind::Tag(t) => cat.morphisms_raw()[m].tags.iter().any(|x| x == t),
    };
    let n = cat.object_count();
    let witness = |x: usize, y: usize| cat.hom_idx(x, y).iter().copied().find(|&m| selected(m));
    for x in 0..n {
        for y in x + 1..n {
            if iso[x] == iso[y] {
                continue;
            }
            if let (Some(f), Some(g)) = (witness(x, y), witness(y, x)) {
                let name = |m: usize| cat.morphisms_raw()[m].id.clone();
                return Ok(CsbReport {
                    holds: false,
                    counterexample: Some((
                        cat.object_id(x).to_string(),
                        cat.object_id(y).to_string(),
                        name(f),
                        name(g),
                    )),
                });
            }
        }
    }
    Ok(CsbReport { holds: true, counterexample: None })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CycleTrivialityReport {
    pub csb_holds: bool,
    /// Nontrivial cycles of the restricted category.
    pub violations: Vec<CyclicWitness>,
    pub truncated: bool,
}

/// Search the `kind`-restricted category for nontrivial cycles. When the
/// category is CSB for `kind` the list must come back empty.
pub fn check_cycle_triviality(
    cat: &Category,
    kind: &RestrictKind,
    search: CycleSearch,
) -> Result<CycleTrivialityReport> {
    let csb = check_csb(cat, kind)?;
    let restricted = restrict(cat, kind)?;
    let cycles = find_cycles(&restricted, search)?;
    Ok(CycleTrivialityReport {
        csb_holds: csb.holds,
        violations: cycles.nontrivial().cloned().collect(),
        truncated: cycles.truncated,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PigeonholeFailure {
    pub morphism: String,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PigeonholeReport {
    /// Morphisms between equal-cardinality objects that are not isomorphisms.
    pub precondition_failures: Vec<PigeonholeFailure>,
    /// Nontrivial virtual cycles of `I ∪ |·|`.
    pub violations: Vec<CyclicWitness>,
    pub truncated: bool,
}

impl PigeonholeReport {
    pub fn is_pigeonhole(&self) -> bool {
        self.precondition_failures.is_empty()
    }
}

/// Verify the pigeonhole property, then look for nontrivial virtual cycles
/// of the invariant paired with cardinality.
pub fn check_pigeonhole_virtual(cat: &Category, inv: &Invariant, search: CycleSearch) -> Result<PigeonholeReport> {
    let cards = cat
        .objects_raw()
        .iter()
        .map(|o| o.card.ok_or_else(|| Error::input(format!("object {:?} has no cardinality", o.id))))
        .collect::<Result<Vec<u64>>>()?;
    let mut precondition_failures = Vec::new();
    for (m, mo) in cat.morphisms_raw().iter().enumerate() {
        if cards[mo.src] == cards[mo.dst] && !cat.is_iso_morphism(m) {
            precondition_failures.push(PigeonholeFailure {
                morphism: mo.id.clone(),
                reason: format!(
                    "{} → {} joins objects of cardinality {} but is not an isomorphism",
                    cat.object_id(mo.src),
                    cat.object_id(mo.dst),
                    cards[mo.src]
                ),
            });
        }
    }
    let combined = Invariant::new(
        cat.objects_raw()
            .iter()
            .zip(&cards)
            .map(|(o, c)| Ok((o.id.clone(), Label::pair(inv.label(&o.id)?.clone(), Label::atom(c.to_string())))))
            .collect::<Result<Vec<_>>>()?,
    );
    let cycles = find_virtual_cycles(cat, &combined, search)?;
    Ok(PigeonholeReport {
        precondition_failures,
        violations: cycles.nontrivial().cloned().collect(),
        truncated: cycles.truncated,
    })
}
