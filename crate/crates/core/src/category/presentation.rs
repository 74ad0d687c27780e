use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use super::{Category, CompositionTable, Morphism, Object};
use crate::error::{Error, Result};

/// JSON form of a finite category.
///
/// ```json
/// {"objects":[{"id":"a","card":3}],
///  "morphisms":[{"id":"f","src":"a","dst":"b","tags":["mono"]}],
///  "compose":[["g","f","gf"]],
///  "iso_pairs":[["a","b"]]}
/// ```
///
/// `identities` maps objects to identity morphisms. With a composition
/// table and no `identities`, identities are inferred from the unit laws.
/// Without a table they stay implicit.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FinCatPresentation {
    pub objects: Vec<ObjectDecl>,
    #[serde(default)]
    pub morphisms: Vec<MorphismDecl>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub compose: Option<Vec<(String, String, String)>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub identities: Option<BTreeMap<String, String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub iso_pairs: Option<Vec<(String, String)>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ObjectDecl {
    pub id: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub card: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorphismDecl {
    pub id: String,
    pub src: String,
    pub dst: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub tags: Vec<String>,
}

/// A structural defect of a presentation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CategoryViolation {
    DuplicateObject { object: String },
    DuplicateMorphism { morphism: String },
    DanglingEndpoint { morphism: String, endpoint: String },
    UnknownMorphism { morphism: String },
    UnknownObject { object: String },
    NotComposable { g: String, f: String },
    WrongComposite { g: String, f: String, gf: String },
    ConflictingComposite { g: String, f: String },
    MissingComposite { g: String, f: String },
    NonAssociative { h: String, g: String, f: String },
    MissingIdentity { object: String },
    BadIdentity { object: String, morphism: String },
}

impl fmt::Display for CategoryViolation {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        use CategoryViolation::*;
        match self {
            DuplicateObject { object } => write!(fm, "duplicate object {object}"),
            DuplicateMorphism { morphism } => write!(fm, "duplicate morphism {morphism}"),
            DanglingEndpoint { morphism, endpoint } => {
                write!(fm, "morphism {morphism} has unknown endpoint {endpoint}")
            }
            UnknownMorphism { morphism } => write!(fm, "unknown morphism {morphism}"),
            UnknownObject { object } => write!(fm, "unknown object {object}"),
            NotComposable { g, f } => write!(fm, "table entry {g}∘{f} is not composable"),
            WrongComposite { g, f, gf } => {
                write!(fm, "table entry {g}∘{f} = {gf} has the wrong endpoints")
            }
            ConflictingComposite { g, f } => write!(fm, "conflicting entries for {g}∘{f}"),
            MissingComposite { g, f } => write!(fm, "missing table entry for {g}∘{f}"),
            NonAssociative { h, g, f } => write!(fm, "({h}∘{g})∘{f} ≠ {h}∘({g}∘{f})"),
            MissingIdentity { object } => write!(fm, "object {object} has no identity"),
            BadIdentity { object, morphism } => {
                write!(fm, "{morphism} is not an identity of {object}")
            }
        }
    }
}

const MAX_REPORTED: usize = 256;

/// All structural violations of a presentation; empty means valid.
pub fn validate_category(p: &FinCatPresentation) -> Vec<CategoryViolation> {
    match p.resolve() {
        Ok(b) => b.violations(true),
        Err(v) => v,
    }
}

impl FinCatPresentation {
    pub fn validate(&self) -> Vec<CategoryViolation> {
        validate_category(self)
    }

    pub fn to_category(&self) -> Result<Category> {
        self.resolve().map_err(reject)?.build()
    }

    fn resolve(&self) -> std::result::Result<CategoryBuilder, Vec<CategoryViolation>> {
        use CategoryViolation::*;
        let mut out = Vec::new();
        let mut b = CategoryBuilder::new();
        let mut objects = HashMap::new();
        for o in &self.objects {
            if objects.contains_key(o.id.as_str()) {
                out.push(DuplicateObject { object: o.id.clone() });
            } else {
                objects.insert(o.id.as_str(), b.add_object(&o.id, o.card));
            }
        }
        let mut morphisms = HashMap::new();
        for m in &self.morphisms {
            let src = objects.get(m.src.as_str());
            let dst = objects.get(m.dst.as_str());
            for (end, found) in [(&m.src, src), (&m.dst, dst)] {
                if found.is_none() {
                    out.push(DanglingEndpoint { morphism: m.id.clone(), endpoint: end.clone() });
                }
            }
            if morphisms.contains_key(m.id.as_str()) {
                out.push(DuplicateMorphism { morphism: m.id.clone() });
            } else if let (Some(&s), Some(&d)) = (src, dst) {
                morphisms.insert(m.id.as_str(), b.add_morphism(&m.id, s, d, m.tags.clone()));
            }
        }
        let mor = |id: &String, out: &mut Vec<CategoryViolation>| {
            let found = morphisms.get(id.as_str()).copied();
            if found.is_none() {
                out.push(UnknownMorphism { morphism: id.clone() });
            }
            found
        };
        if let Some(table) = &self.compose {
            b.compose = Some(Vec::new());
            for (g, f, gf) in table {
                if let (Some(g), Some(f), Some(gf)) = (mor(g, &mut out), mor(f, &mut out), mor(gf, &mut out)) {
                    b.set_composite(g, f, gf);
                }
            }
        }
        if let Some(ids) = &self.identities {
            for (o, m) in ids {
                let Some(&oi) = objects.get(o.as_str()) else {
                    out.push(UnknownObject { object: o.clone() });
                    continue;
                };
                if let Some(mi) = mor(m, &mut out) {
                    b.set_identity(oi, mi);
                }
            }
        }
        if let Some(pairs) = &self.iso_pairs {
            b.iso_pairs = Some(Vec::new());
            for (x, y) in pairs {
                match (objects.get(x.as_str()), objects.get(y.as_str())) {
                    (Some(&a), Some(&c)) => b.declare_iso(a, c),
                    _ => {
                        for z in [x, y] {
                            if !objects.contains_key(z.as_str()) {
                                out.push(UnknownObject { object: z.clone() });
                            }
                        }
                    }
                }
            }
        }
        if out.is_empty() {
            Ok(b)
        } else {
            Err(out)
        }
    }
}

fn reject(v: Vec<CategoryViolation>) -> Error {
    let shown: Vec<String> = v.iter().take(5).map(|x| x.to_string()).collect();
    let more = if v.len() > 5 { format!(" (+{} more)", v.len() - 5) } else { String::new() };
    Error::input(format!("invalid category: {}{more}", shown.join("; ")))
}

/// Programmatic construction by index.
#[derive(Debug, Clone, Default)]
pub struct CategoryBuilder {
    objects: Vec<Object>,
    morphisms: Vec<Morphism>,
    compose: Option<Vec<(usize, usize, usize)>>,
    identities: Vec<(usize, usize)>,
    iso_pairs: Option<Vec<(usize, usize)>>,
}

impl CategoryBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_object(&mut self, id: impl Into<String>, card: Option<u64>) -> usize {
        self.objects.push(Object { id: id.into(), card });
        self.objects.len() - 1
    }

    pub fn add_morphism(&mut self, id: impl Into<String>, src: usize, dst: usize, tags: Vec<String>) -> usize {
        self.morphisms.push(Morphism { id: id.into(), src, dst, tags });
        self.morphisms.len() - 1
    }

    /// Record `g ∘ f = gf`; the first call switches the table on.
    pub fn set_composite(&mut self, g: usize, f: usize, gf: usize) {
        self.compose.get_or_insert_with(Vec::new).push((g, f, gf));
    }

    /// Switch the composition table on without adding entries.
    pub fn enable_composition(&mut self) {
        self.compose.get_or_insert_with(Vec::new);
    }

    pub fn set_identity(&mut self, object: usize, morphism: usize) {
        self.identities.push((object, morphism));
    }

    /// Declare `a ≅ b`; the first call switches declared isomorphism data on.
    pub fn declare_iso(&mut self, a: usize, b: usize) {
        self.iso_pairs.get_or_insert_with(Vec::new).push((a, b));
    }

    /// Declare that the only isomorphisms are the ones tagged `iso`.
    pub fn declare_no_isos(&mut self) {
        self.iso_pairs.get_or_insert_with(Vec::new);
    }

    /// Build with full validation, associativity included.
    pub fn build(self) -> Result<Category> {
        self.finish(true)
    }

    /// Build without the associativity sweep, for generated categories whose
    /// composition is associative by construction.
    pub fn build_trusted(self) -> Result<Category> {
        self.finish(false)
    }

    fn finish(self, check_assoc: bool) -> Result<Category> {
        let (cat, v) = self.check(check_assoc);
        if !v.is_empty() {
            return Err(reject(v));
        }
        Ok(cat)
    }

    fn violations(&self, check_assoc: bool) -> Vec<CategoryViolation> {
        self.check(check_assoc).1
    }

    /// Assemble a category and report what is wrong with it.
    fn assemble(&self) -> (Category, Vec<CategoryViolation>) {
        use CategoryViolation::*;
        let mut out = Vec::new();
        let n = self.objects.len();
        let m = self.morphisms.len();
        let mut object_index = HashMap::new();
        for (i, o) in self.objects.iter().enumerate() {
            if object_index.insert(o.id.clone(), i).is_some() {
                out.push(DuplicateObject { object: o.id.clone() });
            }
        }
        let mut morphism_index = HashMap::new();
        let mut homs = vec![Vec::new(); n * n];
        for (i, mo) in self.morphisms.iter().enumerate() {
            if morphism_index.insert(mo.id.clone(), i).is_some() {
                out.push(DuplicateMorphism { morphism: mo.id.clone() });
            }
            if mo.src >= n || mo.dst >= n {
                out.push(DanglingEndpoint { morphism: mo.id.clone(), endpoint: "?".into() });
            } else {
                homs[mo.src * n + mo.dst].push(i);
            }
        }
        let name = |i: usize| self.morphisms[i].id.clone();
        let compose = self.compose.as_ref().map(|entries| {
            let mut table = CompositionTable::new(m);
            for &(g, f, gf) in entries {
                let (mg, mf, mgf) = (&self.morphisms[g], &self.morphisms[f], &self.morphisms[gf]);
                if mf.dst != mg.src {
                    out.push(NotComposable { g: name(g), f: name(f) });
                } else if mgf.src != mf.src || mgf.dst != mg.dst {
                    out.push(WrongComposite { g: name(g), f: name(f), gf: name(gf) });
                } else {
                    match table.get(g, f) {
                        Some(prev) if prev != gf => out.push(ConflictingComposite { g: name(g), f: name(f) }),
                        _ => table.set(g, f, gf),
                    }
                }
            }
            table
        });
        let mut identities = vec![None; n];
        for &(o, mi) in &self.identities {
            identities[o] = Some(mi);
        }
        let cat = Category {
            objects: self.objects.clone(),
            morphisms: self.morphisms.clone(),
            compose,
            identities,
            iso_pairs: self.iso_pairs.clone(),
            object_index,
            morphism_index,
            homs,
            kinds: OnceLock::new(),
        };
        (cat, out)
    }

    /// The assembled category (identities inferred where possible) and
    /// everything wrong with it.
    fn check(&self, check_assoc: bool) -> (Category, Vec<CategoryViolation>) {
        let (mut cat, mut out) = self.assemble();
        if !out.is_empty() {
            return (cat, out);
        }
        let Some(table) = cat.compose.clone() else {
            // identities stay implicit, but declared ones must be loops
            for (o, id) in cat.identities.iter().enumerate() {
                if let Some(mi) = *id {
                    let mo = &cat.morphisms[mi];
                    if mo.src != o || mo.dst != o {
                        out.push(CategoryViolation::BadIdentity {
                            object: cat.objects[o].id.clone(),
                            morphism: mo.id.clone(),
                        });
                    }
                }
            }
            return (cat, out);
        };
        let n = cat.objects.len();
        let name = |i: usize| cat.morphisms[i].id.clone();
        // totality on composable pairs
        for (f, mf) in cat.morphisms.iter().enumerate() {
            for d in 0..n {
                for &g in cat.hom_idx(mf.dst, d) {
                    if table.get(g, f).is_none() && out.len() < MAX_REPORTED {
                        out.push(CategoryViolation::MissingComposite { g: name(g), f: name(f) });
                    }
                }
            }
        }
        if !out.is_empty() {
            return (cat, out);
        }
        // identities: declared ones are checked, missing ones inferred
        let unit = |o: usize, e: usize| -> bool {
            let me = &cat.morphisms[e];
            if me.src != o || me.dst != o {
                return false;
            }
            (0..n).all(|c| {
                cat.hom_idx(c, o).iter().all(|&f| table.get(e, f) == Some(f))
                    && cat.hom_idx(o, c).iter().all(|&g| table.get(g, e) == Some(g))
            })
        };
        let mut identities = cat.identities.clone();
        for o in 0..n {
            match identities[o] {
                Some(e) if !unit(o, e) => {
                    out.push(CategoryViolation::BadIdentity { object: cat.objects[o].id.clone(), morphism: name(e) })
                }
                Some(_) => {}
                None => match cat.hom_idx(o, o).iter().copied().find(|&e| unit(o, e)) {
                    Some(e) => identities[o] = Some(e),
                    None => out.push(CategoryViolation::MissingIdentity { object: cat.objects[o].id.clone() }),
                },
            }
        }
        cat.identities = identities;
        if check_assoc && out.is_empty() {
            'outer: for (f, mf) in cat.morphisms.iter().enumerate() {
                for c in 0..n {
                    for &g in cat.hom_idx(mf.dst, c) {
                        let gf = table.get(g, f).expect("total");
                        for d in 0..n {
                            for &h in cat.hom_idx(c, d) {
                                let hg = table.get(h, g).expect("total");
                                if table.get(h, gf) != table.get(hg, f) {
                                    out.push(CategoryViolation::NonAssociative { h: name(h), g: name(g), f: name(f) });
                                    if out.len() >= MAX_REPORTED {
                                        break 'outer;
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        (cat, out)
    }
}
