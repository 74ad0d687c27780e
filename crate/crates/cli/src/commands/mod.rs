pub(crate) mod abelian;
pub(crate) mod category;
pub(crate) mod forms;
pub(crate) mod graph;
pub(crate) mod order;
pub(crate) mod poset;

use std::fmt::{Debug, Display, Write};

use isodist::{CoverGraph, PartialOrder};
use serde::Serialize;
use serde_json::{json, Value};

use crate::{emit_dot, Output};

/// Classes, strict relations and covers of a partial order, in all three
/// encodings.
pub(crate) fn order_output<T>(po: &PartialOrder<T>, cg: &CoverGraph<T>) -> Output
where
    T: Ord + Clone + Debug + Display + Serialize,
{
    let rep = |i: usize| &po.classes()[i].representative;
    let classes: Vec<Value> =
        po.classes().iter().map(|c| json!({ "representative": c.representative, "members": c.members })).collect();
    let strict: Vec<(&T, &T)> =
        po.leq_pairs().into_iter().filter(|&(a, b)| a != b).map(|(a, b)| (rep(a), rep(b))).collect();
    let covers = cg.edge_labels();

    let mut text = String::new();
    writeln!(text, "{} classes", po.len()).unwrap();
    for c in po.classes() {
        if c.members.len() > 1 {
            let members: Vec<String> = c.members.iter().map(|m| m.to_string()).collect();
            writeln!(text, "  {} = {{{}}}", c.representative, members.join(", ")).unwrap();
        } else {
            writeln!(text, "  {}", c.representative).unwrap();
        }
    }
    writeln!(text, "{} covers", covers.len()).unwrap();
    for (a, b) in &covers {
        writeln!(text, "  {a} < {b}").unwrap();
    }
    Output::new(text).field("classes", classes).field("order", strict).field("covers", &covers).dot(emit_dot(cg))
}
