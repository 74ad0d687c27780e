use std::collections::BTreeSet;

use clap::Subcommand;
use isodist::abelian::{
    canonical_chain, chain_distance, chain_leq, chain_neighbors, parse_moduli, surjection_exists_with_cap,
    DivisorChain, DEFAULT_SURJECTION_CAP,
};
use isodist::Preorder;
use serde::Deserialize;

use super::order_output;
use crate::input::parse_json;
use crate::{CliResult, Output};

#[derive(Subcommand)]
pub(crate) enum AbelianCmd {
    /// Divisor chain of Z/m1 + Z/m2 + ...
    Canon { moduli: String },
    /// Whether A surjects onto B (the chain order).
    Leq { a: String, b: String },
    /// Cover-graph distance between two groups.
    Dist { a: String, b: String },
    /// Decide surjectivity by search over subgroups, independently of the chain order.
    Surjects {
        a: String,
        b: String,
        /// Largest order of A searched.
        #[arg(long, default_value_t = DEFAULT_SURJECTION_CAP)]
        cap: u64,
    },
    /// Chains covering and covered by C.
    Neighbors {
        chain: String,
        #[arg(long, value_delimiter = ',', default_value = "2,3")]
        primes: Vec<u64>,
    },
    /// The order among the given groups and its cover graph.
    Covers {
        #[arg(required = true)]
        chains: Vec<String>,
    },
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ChainJson {
    chain: DivisorChain,
}

/// `"2,2,4"`, `"()"`, any list of moduli (canonicalised), or `{"chain": [2, 2, 4]}`.
fn chain(arg: &str) -> CliResult<DivisorChain> {
    let s = arg.trim();
    if s.starts_with('{') {
        return Ok(parse_json::<ChainJson>(s)?.chain);
    }
    let body = s.strip_prefix('(').and_then(|b| b.strip_suffix(')')).unwrap_or(s).trim();
    if body.is_empty() {
        return Ok(DivisorChain::trivial());
    }
    Ok(canonical_chain(&parse_moduli(body)?)?)
}

fn moduli(arg: &str) -> CliResult<Vec<u64>> {
    Ok(chain(arg)?.parts().to_vec())
}

fn chain_list(v: &[DivisorChain]) -> String {
    v.iter().map(|c| format!("({c})")).collect::<Vec<_>>().join(" ")
}

pub(crate) fn run(cmd: AbelianCmd) -> CliResult<Output> {
    match cmd {
        AbelianCmd::Canon { moduli } => {
            let c = chain(&moduli)?;
            Ok(Output::new(c.to_string()).field("chain", &c).field("order", c.order()))
        }
        AbelianCmd::Leq { a, b } => {
            let leq = chain_leq(&chain(&a)?, &chain(&b)?);
            Ok(Output::new(leq.to_string()).field("leq", leq))
        }
        AbelianCmd::Dist { a, b } => {
            let d = chain_distance(&chain(&a)?, &chain(&b)?);
            Ok(Output::new(d.to_string()).field("distance", d))
        }
        AbelianCmd::Surjects { a, b, cap } => {
            let s = surjection_exists_with_cap(&moduli(&a)?, &moduli(&b)?, cap)?;
            Ok(Output::new(s.to_string()).field("surjects", s))
        }
        AbelianCmd::Neighbors { chain: c, primes } => {
            let (above, below) = chain_neighbors(&chain(&c)?, &primes);
            let text = format!("above: {}\nbelow: {}", chain_list(&above), chain_list(&below));
            Ok(Output::new(text).field("above", above).field("below", below))
        }
        AbelianCmd::Covers { chains } => {
            let nodes: BTreeSet<DivisorChain> = chains.iter().map(|s| chain(s)).collect::<CliResult<_>>()?;
            let edges: Vec<(DivisorChain, DivisorChain)> = nodes
                .iter()
                .flat_map(|c| nodes.iter().filter(|d| chain_leq(c, d)).map(move |d| (c.clone(), d.clone())))
                .collect();
            let po = Preorder::build(nodes, edges)?.condense();
            Ok(order_output(&po, &po.cover_graph()))
        }
    }
}
