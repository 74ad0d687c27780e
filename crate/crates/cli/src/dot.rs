use std::fmt::{Debug, Display, Write};

use isodist::CoverGraph;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Undirected DOT for a cover graph. Vertices are named by class
/// representative and labelled with the full member list when a class has
/// more than one element. Output order is fixed by the representatives.
pub fn emit_dot<T: Ord + Clone + Debug + Display>(cg: &CoverGraph<T>) -> String {
    if cg.vertex_count() == 0 {
        return "graph {}\n".to_string();
    }
    let name = |v: usize| cg.classes()[v].representative.to_string();
    let mut out = String::from("graph {\n");
    for (v, class) in cg.classes().iter().enumerate() {
        let label = if class.members.len() > 1 {
            let members: Vec<String> = class.members.iter().map(|m| m.to_string()).collect();
            format!("{} {{{}}}", name(v), members.join(", "))
        } else {
            name(v)
        };
        writeln!(out, "  {} [label={}];", quote(&name(v)), quote(&label)).unwrap();
    }
    let mut edges: Vec<(String, String)> = cg.edges().iter().map(|&(p, q)| (name(p), name(q))).collect();
    edges.sort();
    for (a, b) in edges {
        writeln!(out, "  {} -- {};", quote(&a), quote(&b)).unwrap();
    }
    out.push_str("}\n");
    out
}
