use std::fmt::Write;

use clap::{Args, Subcommand};
use isodist::category::{
    check_csb, check_cycle_triviality, check_pigeonhole_virtual, classify_morphism, find_cycles, find_virtual_cycles,
    induced_pseudometric, restrict, universal_order, validate_category, Category, CycleReport, CycleSearch,
    CyclicWitness, FinCatPresentation, Invariant, RestrictKind,
};
use serde_json::json;

use super::order_output;
use crate::{CliResult, Context, Output, EXIT_INPUT};

#[derive(Subcommand)]
pub(crate) enum CategoryCmd {
    /// Report structural problems in a presentation.
    Validate { file: String },
    /// Mono/epi/iso flags from the composition table.
    Classify {
        file: String,
        /// One morphism; all of them when omitted.
        morphism: Option<String>,
    },
    /// Keep only mono, epi or tagged morphisms (`mono`, `epi`, `tag:NAME`).
    Restrict {
        file: String,
        #[arg(long)]
        kind: String,
    },
    /// Universal order on the invariant's values.
    Order {
        #[command(flatten)]
        labelled: Labelled,
    },
    /// Induced distances between objects, or between X and Y.
    Dist {
        #[command(flatten)]
        labelled: Labelled,
        x: Option<String>,
        y: Option<String>,
    },
    /// Cyclic morphism sequences; virtual ones when an invariant is given.
    Cycles {
        file: String,
        #[arg(long)]
        invariant: Option<String>,
        #[arg(long)]
        restrict: Option<String>,
        #[command(flatten)]
        search: Search,
    },
    /// Cantor-Schroeder-Bernstein property and cycle triviality.
    Csb {
        file: String,
        /// `mono` or `epi`.
        #[arg(long, default_value = "mono")]
        kind: String,
        #[command(flatten)]
        search: Search,
    },
    /// Pigeonhole property and virtual cycles of the invariant paired with cardinality.
    Pigeonhole {
        #[command(flatten)]
        labelled: Labelled,
        #[command(flatten)]
        search: Search,
    },
}

#[derive(Args)]
pub(crate) struct Labelled {
    /// Category JSON, or `-` for stdin.
    file: String,
    /// Invariant JSON `{"object": "label", ...}`.
    invariant: String,
    /// Restrict first (`mono`, `epi`, `tag:NAME`).
    #[arg(long)]
    restrict: Option<String>,
}

#[derive(Args, Clone, Copy)]
pub(crate) struct Search {
    /// Longest cycle enumerated.
    #[arg(long, default_value_t = CycleSearch::default().max_len)]
    max_len: usize,
    /// Most cycles reported.
    #[arg(long, default_value_t = CycleSearch::default().max_witnesses)]
    max_witnesses: usize,
}

impl From<Search> for CycleSearch {
    fn from(s: Search) -> Self {
        CycleSearch { max_len: s.max_len, max_witnesses: s.max_witnesses }
    }
}

fn category(path: &str, ctx: &mut Context, kind: Option<&str>) -> CliResult<Category> {
    let p: FinCatPresentation = ctx.json(path)?;
    let cat = p.to_category()?;
    Ok(match kind {
        Some(k) => restrict(&cat, &k.parse()?)?,
        None => cat,
    })
}

fn labelled(l: &Labelled, ctx: &mut Context) -> CliResult<(Category, Invariant)> {
    let cat = category(&l.file, ctx, l.restrict.as_deref())?;
    Ok((cat, ctx.json(&l.invariant)?))
}

fn witness_line(w: &CyclicWitness) -> String {
    let path: Vec<String> = w.steps.iter().map(|s| format!("{}: {} -> {}", s.morphism, s.src, s.dst)).collect();
    format!("{} [{}]", if w.trivial { "trivial" } else { "nontrivial" }, path.join(", "))
}

fn cycles_text(report: &CycleReport) -> String {
    let mut text = String::new();
    let nontrivial = report.nontrivial().count();
    writeln!(text, "{} cycles, {nontrivial} nontrivial{}", report.witnesses.len(), truncated(report.truncated))
        .unwrap();
    for w in &report.witnesses {
        writeln!(text, "  {}", witness_line(w)).unwrap();
    }
    text
}

fn truncated(t: bool) -> &'static str {
    if t {
        " (search truncated)"
    } else {
        ""
    }
}

pub(crate) fn run(cmd: CategoryCmd, ctx: &mut Context) -> CliResult<Output> {
    match cmd {
        CategoryCmd::Validate { file } => {
            let p: FinCatPresentation = ctx.json(&file)?;
            let violations = validate_category(&p);
            let mut text = if violations.is_empty() { "valid\n".to_string() } else { String::new() };
            for v in &violations {
                writeln!(text, "{v}").unwrap();
            }
            let out = Output::new(text).field("valid", violations.is_empty()).field("violations", &violations);
            Ok(if violations.is_empty() { out } else { out.exit_code(EXIT_INPUT) })
        }
        CategoryCmd::Classify { file, morphism } => {
            let cat = category(&file, ctx, None)?;
            let ids: Vec<String> = match morphism {
                Some(m) => vec![m],
                None => cat.morphism_ids().map(String::from).collect(),
            };
            let mut text = String::new();
            let mut rows = Vec::new();
            for id in ids {
                let k = classify_morphism(&cat, &id)?;
                writeln!(text, "{id}: mono={} epi={} iso={}", k.mono, k.epi, k.iso).unwrap();
                rows.push(json!({ "morphism": id, "mono": k.mono, "epi": k.epi, "iso": k.iso }));
            }
            Ok(Output::new(text).field("morphisms", rows))
        }
        CategoryCmd::Restrict { file, kind } => {
            let cat = category(&file, ctx, Some(&kind))?;
            let p = cat.to_presentation();
            let text = format!("{} objects, {} morphisms", cat.object_count(), cat.morphism_count());
            let value = serde_json::to_value(&p).expect("presentations serialize");
            let mut out = Output::new(text);
            if let serde_json::Value::Object(map) = value {
                for (k, v) in map {
                    out = out.field(&k, v);
                }
            }
            Ok(out)
        }
        CategoryCmd::Order { labelled: l } => {
            let (cat, inv) = labelled(&l, ctx)?;
            let uo = universal_order(&cat, &inv)?;
            let provenance: Vec<_> = uo.provenance.iter().map(|((a, b), ids)| json!([a, b, ids])).collect();
            Ok(order_output(&uo.order, &uo.cover).field("provenance", provenance))
        }
        CategoryCmd::Dist { labelled: l, x, y } => {
            let (cat, inv) = labelled(&l, ctx)?;
            let table = induced_pseudometric(&cat, &inv)?;
            match (x, y) {
                (Some(x), Some(y)) => {
                    let d = table
                        .get(&x, &y)
                        .ok_or_else(|| crate::CliError::input(format!("unknown object {x:?} or {y:?}")))?;
                    Ok(Output::new(d.to_string()).field("distance", d))
                }
                (None, None) => {
                    let mut text = String::new();
                    for a in table.points() {
                        let row: Vec<String> =
                            table.points().iter().map(|b| table.get(a, b).expect("in table").to_string()).collect();
                        writeln!(text, "{a}: {}", row.join(" ")).unwrap();
                    }
                    Ok(Output::new(text).field("distances", table.to_map()))
                }
                _ => Err(crate::CliError::usage("give both X and Y, or neither")),
            }
        }
        CategoryCmd::Cycles { file, invariant, restrict, search } => {
            let cat = category(&file, ctx, restrict.as_deref())?;
            let report = match invariant {
                Some(path) => find_virtual_cycles(&cat, &ctx.json(&path)?, search.into())?,
                None => find_cycles(&cat, search.into())?,
            };
            Ok(Output::new(cycles_text(&report))
                .field("cycles", &report.witnesses)
                .field("nontrivial", report.nontrivial().count())
                .field("truncated", report.truncated))
        }
        CategoryCmd::Csb { file, kind, search } => {
            let cat = category(&file, ctx, None)?;
            let kind: RestrictKind = kind.parse()?;
            let csb = check_csb(&cat, &kind)?;
            let cycles = check_cycle_triviality(&cat, &kind, search.into())?;
            let mut text = String::new();
            writeln!(text, "csb: {}", csb.holds).unwrap();
            if let Some((x, y, f, g)) = &csb.counterexample {
                writeln!(text, "  {f}: {x} -> {y} and {g}: {y} -> {x} with {x}, {y} not isomorphic").unwrap();
            }
            writeln!(text, "nontrivial cycles: {}{}", cycles.violations.len(), truncated(cycles.truncated)).unwrap();
            for w in &cycles.violations {
                writeln!(text, "  {}", witness_line(w)).unwrap();
            }
            Ok(Output::new(text)
                .field("csb", &csb)
                .field("nontrivial_cycles", &cycles.violations)
                .field("truncated", cycles.truncated))
        }
        CategoryCmd::Pigeonhole { labelled: l, search } => {
            let (cat, inv) = labelled(&l, ctx)?;
            let report = check_pigeonhole_virtual(&cat, &inv, search.into())?;
            let mut text = String::new();
            writeln!(text, "pigeonhole: {}", report.is_pigeonhole()).unwrap();
            for f in &report.precondition_failures {
                writeln!(text, "  {}: {}", f.morphism, f.reason).unwrap();
            }
            writeln!(text, "nontrivial virtual cycles: {}{}", report.violations.len(), truncated(report.truncated))
                .unwrap();
            for w in &report.violations {
                writeln!(text, "  {}", witness_line(w)).unwrap();
            }
            Ok(Output::new(text).field("pigeonhole", report.is_pigeonhole()).field("report", &report))
        }
    }
}
