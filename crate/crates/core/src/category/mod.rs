//! Finite presented categories labelled by an isomorphism invariant.
//!
//! A [`Category`] is built either from a JSON-shaped [`FinCatPresentation`]
//! or programmatically through [`CategoryBuilder`]. Composition tables are
//! optional; without one, morphism kinds and isomorphisms come from
//! declared tags and iso pairs.

mod checks;
mod classify;
mod cycles;
mod label;
mod presentation;
pub mod toys;
mod universal;

use std::collections::HashMap;
use std::sync::OnceLock;

use crate::error::{Error, Result};

pub use checks::{
    check_csb, check_cycle_triviality, check_pigeonhole_virtual, CsbReport, CycleTrivialityReport, PigeonholeFailure,
    PigeonholeReport,
};
pub use classify::{classify_morphism, restrict, MorphismKind, RestrictKind};
pub use cycles::{
    find_cycles, find_virtual_cycles, is_plain_cycle, is_virtual_cycle, CycleKind, CycleReport, CycleSearch, CycleStep,
    CyclicWitness,
};
pub use label::{Invariant, Label};
pub use presentation::{
    validate_category, CategoryBuilder, CategoryViolation, FinCatPresentation, MorphismDecl, ObjectDecl,
};
pub use universal::{
    characteristic_metric, check_universal_factorization, induced_pseudometric, union_invariant, universal_order,
    Factorization, UniversalOrder,
};

pub use crate::metric::metric_invariant;

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Object {
    pub id: String,
    pub card: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Morphism {
    pub id: String,
    pub src: usize,
    pub dst: usize,
    pub tags: Vec<String>,
}

const NO_ENTRY: u32 = u32::MAX;

/// Dense `g ∘ f` lookup indexed by morphism indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct CompositionTable {
    m: usize,
    table: Vec<u32>,
}

impl CompositionTable {
    fn new(m: usize) -> Self {
        CompositionTable { m, table: vec![NO_ENTRY; m * m] }
    }

    #[inline]
    pub fn get(&self, g: usize, f: usize) -> Option<usize> {
        match self.table[g * self.m + f] {
            NO_ENTRY => None,
            v => Some(v as usize),
        }
    }

    fn set(&mut self, g: usize, f: usize, gf: usize) {
        self.table[g * self.m + f] = gf as u32;
    }
}

/// A validated finite category presentation.
#[derive(Debug, Clone)]
pub struct Category {
    objects: Vec<Object>,
    morphisms: Vec<Morphism>,
    compose: Option<CompositionTable>,
    identities: Vec<Option<usize>>,
    iso_pairs: Option<Vec<(usize, usize)>>,
    object_index: HashMap<String, usize>,
    morphism_index: HashMap<String, usize>,
    homs: Vec<Vec<usize>>,
    kinds: OnceLock<Option<Vec<MorphismKind>>>,
}

impl Category {
    pub fn from_presentation(p: &FinCatPresentation) -> Result<Self> {
        p.to_category()
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn morphism_count(&self) -> usize {
        self.morphisms.len()
    }

    pub fn object_ids(&self) -> impl Iterator<Item = &str> {
        self.objects.iter().map(|o| o.id.as_str())
    }

    pub fn morphism_ids(&self) -> impl Iterator<Item = &str> {
        self.morphisms.iter().map(|m| m.id.as_str())
    }

    pub fn object_id(&self, i: usize) -> &str {
        &self.objects[i].id
    }

    pub fn cardinality(&self, object: &str) -> Result<Option<u64>> {
        Ok(self.objects[self.object(object)?].card)
    }

    /// `(id, src, dst)` of a morphism.
    pub fn morphism(&self, id: &str) -> Result<(&str, &str, &str)> {
        let m = &self.morphisms[self.morphism_idx(id)?];
        Ok((&m.id, &self.objects[m.src].id, &self.objects[m.dst].id))
    }

    pub fn tags(&self, id: &str) -> Result<&[String]> {
        Ok(&self.morphisms[self.morphism_idx(id)?].tags)
    }

    pub fn has_composition(&self) -> bool {
        self.compose.is_some()
    }

    /// `g ∘ f`, when a table is present and the pair composes.
    pub fn compose(&self, g: &str, f: &str) -> Result<Option<&str>> {
        let table = self.table()?;
        let (g, f) = (self.morphism_idx(g)?, self.morphism_idx(f)?);
        Ok(table.get(g, f).map(|h| self.morphisms[h].id.as_str()))
    }

    pub fn identity(&self, object: &str) -> Result<Option<&str>> {
        Ok(self.identities[self.object(object)?].map(|m| self.morphisms[m].id.as_str()))
    }

    /// Morphism ids from `src` to `dst`.
    pub fn hom(&self, src: &str, dst: &str) -> Result<Vec<&str>> {
        let (s, d) = (self.object(src)?, self.object(dst)?);
        Ok(self.hom_idx(s, d).iter().map(|&m| self.morphisms[m].id.as_str()).collect())
    }

    /// A presentation that rebuilds this category, with the composition
    /// table spelled out in full.
    pub fn to_presentation(&self) -> FinCatPresentation {
        let obj = |i: usize| self.objects[i].id.clone();
        let mor = |m: usize| self.morphisms[m].id.clone();
        let m = self.morphisms.len();
        let compose = self.compose.as_ref().map(|t| {
            (0..m)
                .flat_map(|g| (0..m).map(move |f| (g, f)))
                .filter_map(|(g, f)| t.get(g, f).map(|h| (mor(g), mor(f), mor(h))))
                .collect()
        });
        let identities: std::collections::BTreeMap<String, String> =
            self.identities.iter().enumerate().filter_map(|(o, id)| id.map(|i| (obj(o), mor(i)))).collect();
        FinCatPresentation {
            objects: self.objects.iter().map(|o| ObjectDecl { id: o.id.clone(), card: o.card }).collect(),
            morphisms: self
                .morphisms
                .iter()
                .map(|x| MorphismDecl { id: x.id.clone(), src: obj(x.src), dst: obj(x.dst), tags: x.tags.clone() })
                .collect(),
            compose,
            identities: (!identities.is_empty()).then_some(identities),
            iso_pairs: self.iso_pairs.as_ref().map(|v| v.iter().map(|&(a, b)| (obj(a), obj(b))).collect()),
        }
    }

    pub(crate) fn object(&self, id: &str) -> Result<usize> {
        self.object_index.get(id).copied().ok_or_else(|| Error::input(format!("unknown object {id:?}")))
    }

    pub(crate) fn morphism_idx(&self, id: &str) -> Result<usize> {
        self.morphism_index.get(id).copied().ok_or_else(|| Error::input(format!("unknown morphism {id:?}")))
    }

    pub(crate) fn table(&self) -> Result<&CompositionTable> {
        self.compose.as_ref().ok_or_else(|| Error::capability("category has no composition table"))
    }

    pub(crate) fn hom_idx(&self, src: usize, dst: usize) -> &[usize] {
        &self.homs[src * self.objects.len() + dst]
    }

    pub(crate) fn is_identity(&self, m: usize) -> bool {
        let mor = &self.morphisms[m];
        self.identities[mor.src] == Some(m)
    }

    pub(crate) fn objects_raw(&self) -> &[Object] {
        &self.objects
    }

    pub(crate) fn morphisms_raw(&self) -> &[Morphism] {
        &self.morphisms
    }
}
