//! Small concrete categories used by demos and tests.

use std::collections::{BTreeMap, HashMap};

use super::{Category, CategoryBuilder, Invariant};

fn join(xs: &[usize]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

/// The full subcategory of finite sets on objects of the given sizes, with
/// every function between them. Objects are `X0, X1, …` carrying their
/// size as cardinality; a morphism id lists the images of `0, 1, …`.
pub fn finset_fragment(sizes: &[usize]) -> Category {
    let mut b = CategoryBuilder::new();
    let objs: Vec<usize> =
        sizes.iter().enumerate().map(|(i, &s)| b.add_object(format!("X{i}"), Some(s as u64))).collect();
    let mut maps: Vec<(usize, usize, Vec<usize>)> = Vec::new();
    let mut index: HashMap<(usize, usize, Vec<usize>), usize> = HashMap::new();
    for (a, &sa) in sizes.iter().enumerate() {
        for (c, &sc) in sizes.iter().enumerate() {
            for images in all_functions(sa, sc) {
                let id = format!("X{a}->X{c}[{}]", join(&images));
                let m = b.add_morphism(id, objs[a], objs[c], Vec::new());
                index.insert((a, c, images.clone()), m);
                maps.push((a, c, images));
            }
        }
    }
    for (a, &sa) in sizes.iter().enumerate() {
        let id: Vec<usize> = (0..sa).collect();
        b.set_identity(objs[a], index[&(a, a, id)]);
    }
    b.enable_composition();
    for (f, (a, c, fi)) in maps.iter().enumerate() {
        for (g, (c2, d, gi)) in maps.iter().enumerate() {
            if c2 != c {
                continue;
            }
            let gf: Vec<usize> = fi.iter().map(|&x| gi[x]).collect();
            b.set_composite(g, f, index[&(*a, *d, gf)]);
        }
    }
    b.build_trusted().expect("finite sets form a category")
}

fn all_functions(domain: usize, codomain: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..domain {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (0..codomain).map(move |y| {
                    let mut p = prefix.clone();
                    p.push(y);
                    p
                })
            })
            .collect();
    }
    out
}

/// Dimension labels `Vd ↦ "d"` for [`vect_f2`].
pub fn dim_invariant(max_dim: usize) -> Invariant {
    Invariant::new((0..=max_dim).map(|d| (format!("V{d}"), d.to_string())))
}

/// Vector spaces `F₂⁰, …, F₂^max_dim` with all linear maps. Objects are
/// `V0, V1, …`; a morphism id spells its matrix row by row.
pub fn vect_f2(max_dim: usize) -> Category {
    let mut b = CategoryBuilder::new();
    let dims: Vec<usize> = (0..=max_dim).collect();
    for &d in &dims {
        b.add_object(format!("V{d}"), Some(1 << d));
    }
    // matrix of shape (rows = dst dim, cols = src dim), bit r*cols + c
    let mut maps: Vec<(usize, usize, u32)> = Vec::new();
    let mut index: HashMap<(usize, usize, u32), usize> = HashMap::new();
    for &s in &dims {
        for &t in &dims {
            for code in 0..(1u32 << (s * t)) {
                let bits: String = (0..t)
                    .map(|r| (0..s).map(|c| if code >> (r * s + c) & 1 == 1 { '1' } else { '0' }).collect::<String>())
                    .collect::<Vec<_>>()
                    .join("/");
                let m = b.add_morphism(format!("V{s}->V{t}[{bits}]"), s, t, Vec::new());
                index.insert((s, t, code), m);
                maps.push((s, t, code));
            }
        }
    }
    for &d in &dims {
        let id: u32 = (0..d).map(|i| 1 << (i * d + i)).sum();
        b.set_identity(d, index[&(d, d, id)]);
    }
    b.enable_composition();
    for (f, &(s, t, fc)) in maps.iter().enumerate() {
        for (g, &(t2, u, gc)) in maps.iter().enumerate() {
            if t2 != t {
                continue;
            }
            let mut prod = 0u32;
            for r in 0..u {
                for c in 0..s {
                    let bit = (0..t).fold(0, |acc, k| acc ^ (gc >> (r * t + k) & fc >> (k * s + c) & 1));
                    prod |= bit << (r * s + c);
                }
            }
            b.set_composite(g, f, index[&(s, u, prod)]);
        }
    }
    b.build_trusted().expect("linear maps form a category")
}

/// `0 → Z → 0` among abelian groups: an inclusion and a projection, no
/// composition table, no isomorphisms besides identities.
pub fn zero_z_zero() -> Category {
    let mut b = CategoryBuilder::new();
    let zero = b.add_object("0", None);
    let z = b.add_object("Z", None);
    b.add_morphism("incl", zero, z, vec!["mono".into()]);
    b.add_morphism("proj", z, zero, vec!["epi".into()]);
    b.declare_no_isos();
    b.build().expect("valid presentation")
}

/// Pointed spaces `(R¹,0) → (S¹,1) → (pt,pt)` with the fundamental-group
/// and dimension invariants. The trivial group is labelled `1`.
pub fn pointed_spaces() -> (Category, Invariant, Invariant) {
    let mut b = CategoryBuilder::new();
    let r = b.add_object("R1", None);
    let s = b.add_object("S1", None);
    let pt = b.add_object("pt", None);
    b.add_morphism("exp", r, s, vec!["epi".into()]);
    b.add_morphism("collapse", s, pt, vec!["epi".into()]);
    b.declare_no_isos();
    let cat = b.build().expect("valid presentation");
    let pi1 = Invariant::new([("R1", "1"), ("S1", "Z"), ("pt", "1")]);
    let dim = Invariant::new([("R1", "1"), ("S1", "1"), ("pt", "0")]);
    (cat, pi1, dim)
}

/// `F2 ↪ F3 ↪ F2` among groups and monomorphisms, declared without a
/// table: monic both ways yet not isomorphic.
pub fn free_group_monos() -> Category {
    let mut b = CategoryBuilder::new();
    let f2 = b.add_object("F2", None);
    let f3 = b.add_object("F3", None);
    b.add_morphism("include", f2, f3, vec!["mono".into()]);
    b.add_morphism("dehn", f3, f2, vec!["mono".into()]);
    b.declare_no_isos();
    b.build().expect("valid presentation")
}

/// Identity object map on the objects of `cat`.
pub fn identity_functor(cat: &Category) -> BTreeMap<String, String> {
    cat.object_ids().map(|o| (o.to_string(), o.to_string())).collect()
}
