use clap::{Subcommand, ValueEnum};
use isodist::graph::{
    chromatic_distance, chromatic_number, chromatic_polynomial_with_budget, chrompoly_distance_of, chrompoly_leq,
    embeds_with_cap, SimpleGraph, DEFAULT_DC_BUDGET, DEFAULT_EMBED_CAP,
};

use crate::input::parse_json;
use crate::{CliError, CliResult, Context, Output};

#[derive(Subcommand)]
pub(crate) enum GraphCmd {
    /// Chromatic number.
    Chi { graph: String },
    /// Chromatic polynomial, coefficients lowest degree first.
    Poly {
        graph: String,
        /// Deletion-contraction branch budget.
        #[arg(long, default_value_t = DEFAULT_DC_BUDGET)]
        budget: u64,
    },
    /// Distance between two graphs under a chromatic invariant.
    Dist {
        #[arg(long, value_enum, default_value_t = Metric::Chi)]
        metric: Metric,
        g1: String,
        g2: String,
        #[arg(long, default_value_t = DEFAULT_DC_BUDGET)]
        budget: u64,
    },
    /// Whether the chromatic polynomial of G1 lies below that of G2.
    Leq {
        g1: String,
        g2: String,
        #[arg(long, default_value_t = DEFAULT_DC_BUDGET)]
        budget: u64,
    },
    /// Search for an embedding of G1 as a subgraph of G2.
    Embeds {
        g1: String,
        g2: String,
        /// Largest G2 vertex count searched.
        #[arg(long, default_value_t = DEFAULT_EMBED_CAP)]
        cap: usize,
    },
    /// Print a graph as JSON and graph6.
    Show { graph: String },
}

#[derive(Clone, Copy, ValueEnum)]
pub(crate) enum Metric {
    /// Chromatic number.
    Chi,
    /// Chromatic polynomial.
    Poly,
}

/// JSON `{"n": 5, "edges": [[0, 1], ...]}` or a graph6 string.
fn load(path: &str, ctx: &mut Context) -> CliResult<SimpleGraph> {
    let text = ctx.read(path)?;
    let trimmed = text.trim();
    if trimmed.starts_with('{') {
        parse_json(trimmed).map_err(|e| CliError::input(format!("{path}: {}", e.message)))
    } else {
        Ok(SimpleGraph::from_graph6(trimmed)?)
    }
}

pub(crate) fn run(cmd: GraphCmd, ctx: &mut Context) -> CliResult<Output> {
    match cmd {
        GraphCmd::Chi { graph } => {
            let chi = chromatic_number(&load(&graph, ctx)?)?;
            Ok(Output::new(chi.to_string()).field("chromatic_number", chi))
        }
        GraphCmd::Poly { graph, budget } => {
            let p = chromatic_polynomial_with_budget(&load(&graph, ctx)?, budget)?;
            Ok(Output::new(p.to_string()).field("coefficients", &p))
        }
        GraphCmd::Dist { metric, g1, g2, budget } => {
            let (a, b) = (load(&g1, ctx)?, load(&g2, ctx)?);
            let d = match metric {
                Metric::Chi => chromatic_distance(&a, &b)?,
                Metric::Poly => chrompoly_distance_of(
                    &chromatic_polynomial_with_budget(&a, budget)?,
                    &chromatic_polynomial_with_budget(&b, budget)?,
                )?,
            };
            Ok(Output::new(d.to_string()).field("distance", d))
        }
        GraphCmd::Leq { g1, g2, budget } => {
            let f = chromatic_polynomial_with_budget(&load(&g1, ctx)?, budget)?;
            let g = chromatic_polynomial_with_budget(&load(&g2, ctx)?, budget)?;
            let leq = chrompoly_leq(&f, &g)?;
            Ok(Output::new(leq.to_string()).field("leq", leq).field("f", &f).field("g", &g))
        }
        GraphCmd::Embeds { g1, g2, cap } => {
            let map = embeds_with_cap(&load(&g1, ctx)?, &load(&g2, ctx)?, cap)?;
            let text = match &map {
                Some(m) => {
                    let pairs: Vec<String> = m.iter().enumerate().map(|(u, v)| format!("{u}->{v}")).collect();
                    format!("true {}", pairs.join(" "))
                }
                None => "false".to_string(),
            };
            Ok(Output::new(text).field("embeds", map.is_some()).field("map", map))
        }
        GraphCmd::Show { graph } => {
            let g = load(&graph, ctx)?;
            let text = format!("{} vertices, {} edges\n{}", g.vertex_count(), g.edge_count(), g.to_graph6());
            Ok(Output::new(text).field("graph", &g).field("graph6", g.to_graph6()))
        }
    }
}
