use std::fmt::Write;

use clap::{Args, Subcommand};
use isodist::{check_pseudometric, DistanceTable, PartialOrder, Preorder};
use serde::Deserialize;

use super::order_output;
use crate::{CliResult, Context, Output};

#[derive(Subcommand)]
pub(crate) enum PosetCmd {
    /// Condense a pre-order; list classes, relations and covers.
    Order(Source),
    /// Cover-graph distance between two elements.
    Dist {
        #[command(flatten)]
        source: Source,
        a: String,
        b: String,
    },
    /// All pairwise distances, checked against the pseudo-metric axioms.
    Metric(Source),
}

#[derive(Args)]
pub(crate) struct Source {
    /// JSON `{"elements": [...], "edges": [[a, b], ...]}`, or `-` for stdin.
    file: String,
    /// Largest accepted element count [default: $ISODIST_MAX_ELEMENTS or 1024].
    #[arg(long)]
    max_elements: Option<usize>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct OrderJson {
    elements: Vec<String>,
    #[serde(default)]
    edges: Vec<(String, String)>,
}

fn load(source: &Source, ctx: &mut Context) -> CliResult<PartialOrder<String>> {
    let doc: OrderJson = ctx.json(&source.file)?;
    let cap = ctx.max_elements(source.max_elements)?;
    Ok(Preorder::build_with_cap(doc.elements, doc.edges, cap)?.condense())
}

pub(crate) fn run(cmd: PosetCmd, ctx: &mut Context) -> CliResult<Output> {
    match cmd {
        PosetCmd::Order(source) => {
            let po = load(&source, ctx)?;
            Ok(order_output(&po, &po.cover_graph()))
        }
        PosetCmd::Dist { source, a, b } => {
            let cg = load(&source, ctx)?.cover_graph();
            let d = cg.graph_distance(&a, &b)?;
            Ok(Output::new(d.to_string()).field("distance", d))
        }
        PosetCmd::Metric(source) => {
            let po = load(&source, ctx)?;
            let cg = po.cover_graph();
            let elements: Vec<String> = po.classes().iter().flat_map(|c| c.members.iter().cloned()).collect();
            let mut sorted = elements.clone();
            sorted.sort();
            let table =
                DistanceTable::from_fn(sorted.clone(), |a, b| cg.graph_distance(a, b).expect("element of the order"));
            let report = check_pseudometric(&table)?;
            let mut text = String::new();
            for a in &sorted {
                let row: Vec<String> = sorted.iter().map(|b| table.get(a, b).expect("in table").to_string()).collect();
                writeln!(text, "{a}: {}", row.join(" ")).unwrap();
            }
            writeln!(text, "pseudometric: {}", report.is_pseudometric()).unwrap();
            Ok(Output::new(text)
                .field("distances", table.to_map())
                .field("pseudometric", report.is_pseudometric())
                .field("violations", &report.violations))
        }
    }
}
