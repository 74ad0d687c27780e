use std::collections::HashSet;

use serde::Serialize;

use super::{Category, CategoryBuilder};
use crate::error::{Error, Result};

/// Cancellation properties of one morphism.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MorphismKind {
    pub mono: bool,
    pub epi: bool,
    pub iso: bool,
}

/// Which morphisms [`restrict`] keeps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RestrictKind {
    Mono,
    Epi,
    /// Morphisms carrying a declared tag.
    Tag(String),
}

impl std::str::FromStr for RestrictKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "mono" => RestrictKind::Mono,
            "epi" => RestrictKind::Epi,
            "" => return Err(Error::input("empty restriction kind")),
            tag => RestrictKind::Tag(tag.strip_prefix("tag:").unwrap_or(tag).to_string()),
        })
    }
}

/// Mono/epi/iso flags of `f`, by exhaustive quantification over the
/// composition table.
pub fn classify_morphism(cat: &Category, f: &str) -> Result<MorphismKind> {
    let i = cat.morphism_idx(f)?;
    cat.table()?;
    Ok(cat.table_kinds().expect("table present")[i])
}

impl Category {
    /// Table-derived kinds of all morphisms; `None` without a table.
    pub(crate) fn table_kinds(&self) -> Option<&[MorphismKind]> {
        self.kinds.get_or_init(|| self.compose.as_ref().map(|_| self.compute_kinds())).as_deref()
    }

    fn compute_kinds(&self) -> Vec<MorphismKind> {
        let table = self.compose.as_ref().expect("table present");
        let n = self.objects.len();
        let mut seen = HashSet::new();
        self.morphisms
            .iter()
            .enumerate()
            .map(|(f, mf)| {
                // f mono iff g ↦ f∘g is injective on every Hom(c, src f)
                let mono = (0..n).all(|c| {
                    seen.clear();
                    self.hom_idx(c, mf.src).iter().all(|&g| seen.insert(table.get(f, g)))
                });
                // f epi iff h ↦ h∘f is injective on every Hom(dst f, c)
                let epi = (0..n).all(|c| {
                    seen.clear();
                    self.hom_idx(mf.dst, c).iter().all(|&h| seen.insert(table.get(h, f)))
                });
                let iso = match (self.identities[mf.src], self.identities[mf.dst]) {
                    (Some(ia), Some(ib)) => self
                        .hom_idx(mf.dst, mf.src)
                        .iter()
                        .any(|&g| table.get(g, f) == Some(ia) && table.get(f, g) == Some(ib)),
                    _ => false,
                };
                MorphismKind { mono, epi, iso }
            })
            .collect()
    }

    fn declared_kind(&self, m: usize) -> MorphismKind {
        let tags = &self.morphisms[m].tags;
        let has = |t: &str| tags.iter().any(|x| x == t);
        let iso = has("iso") || self.is_identity(m);
        MorphismKind { mono: iso || has("mono"), epi: iso || has("epi"), iso }
    }

    /// Kinds from the table when present, else from declared tags. Tags
    /// that contradict the table are an input error.
    pub(crate) fn kinds(&self) -> Result<Vec<MorphismKind>> {
        let Some(derived) = self.table_kinds() else {
            return Ok((0..self.morphisms.len()).map(|m| self.declared_kind(m)).collect());
        };
        for (m, k) in derived.iter().enumerate() {
            let d = self.declared_kind(m);
            for (tag, claimed, actual) in [("mono", d.mono, k.mono), ("epi", d.epi, k.epi), ("iso", d.iso, k.iso)] {
                if claimed && !actual {
                    return Err(Error::input(format!(
                        "morphism {} is declared {tag} but the table says otherwise",
                        self.morphisms[m].id
                    )));
                }
            }
        }
        Ok(derived.to_vec())
    }

    /// Union-find class of each object under isomorphism. Declared iso pairs
    /// (plus `iso` tags) take precedence, then the table; otherwise there is
    /// no way to decide.
    pub(crate) fn iso_classes(&self) -> Result<Vec<usize>> {
        let n = self.objects.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let next = p[y];
                p[y] = r;
                y = next;
            }
            r
        }
        let mut join = |a: usize, b: usize| {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent[ra.max(rb)] = ra.min(rb);
            }
        };
        if let Some(pairs) = &self.iso_pairs {
            for &(a, b) in pairs {
                join(a, b);
            }
            for (m, mo) in self.morphisms.iter().enumerate() {
                if self.declared_kind(m).iso {
                    join(mo.src, mo.dst);
                }
            }
        } else if let Some(kinds) = self.table_kinds() {
            for (mo, k) in self.morphisms.iter().zip(kinds) {
                if k.iso {
                    join(mo.src, mo.dst);
                }
            }
        } else {
            return Err(Error::capability("isomorphism data needs a composition table or declared iso_pairs"));
        }
        Ok((0..n).map(|x| find(&mut parent, x)).collect())
    }

    /// Whether `f` is an isomorphism, from the table or an `iso` tag.
    pub(crate) fn is_iso_morphism(&self, m: usize) -> bool {
        match self.table_kinds() {
            Some(k) => k[m].iso,
            None => self.declared_kind(m).iso,
        }
    }
}

/// The wide subcategory on all objects whose morphisms are of `kind`.
/// Identities are always kept.
pub fn restrict(cat: &Category, kind: &RestrictKind) -> Result<Category> {
    let keep: Vec<bool> = match kind {
        RestrictKind::Mono | RestrictKind::Epi => {
            let kinds = cat.kinds()?;
            kinds.iter().map(|k| if *kind == RestrictKind::Mono { k.mono } else { k.epi }).collect()
        }
        RestrictKind::Tag(t) => {
            if cat.table_kinds().is_some() {
                cat.kinds()?;
            }
            cat.morphisms.iter().map(|m| m.tags.iter().any(|x| x == t)).collect()
        }
    };
    let keep: Vec<bool> = keep.into_iter().enumerate().map(|(m, k)| k || cat.is_identity(m)).collect();

    let mut b = CategoryBuilder::new();
    for o in &cat.objects {
        b.add_object(&o.id, o.card);
    }
    let mut new_index = vec![usize::MAX; cat.morphisms.len()];
    for (m, mo) in cat.morphisms.iter().enumerate().filter(|(m, _)| keep[*m]) {
        new_index[m] = b.add_morphism(&mo.id, mo.src, mo.dst, mo.tags.clone());
    }
    for (o, id) in cat.identities.iter().enumerate() {
        if let Some(m) = id {
            b.set_identity(o, new_index[*m]);
        }
    }
    if let Some(table) = &cat.compose {
        let n = cat.objects.len();
        b.enable_composition();
        for (f, mf) in cat.morphisms.iter().enumerate().filter(|(f, _)| keep[*f]) {
            for c in 0..n {
                for &g in cat.hom_idx(mf.dst, c).iter().filter(|&&g| keep[g]) {
                    let gf = table.get(g, f).expect("table is total");
                    if !keep[gf] {
                        return Err(Error::input(format!(
                            "restriction is not closed under composition: {}∘{} = {}",
                            cat.morphisms[g].id, cat.morphisms[f].id, cat.morphisms[gf].id
                        )));
                    }
                    b.set_composite(new_index[g], new_index[f], new_index[gf]);
                }
            }
        }
    }
    if let Some(pairs) = &cat.iso_pairs {
        b.declare_no_isos();
        for &(x, y) in pairs {
            b.declare_iso(x, y);
        }
    }
    b.build_trusted()
}
