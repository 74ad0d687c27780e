use std::fmt::Write;

use clap::{Args, Subcommand};
use isodist::forms::{
    heisenberg_algebra, linear_form_matrix, minors, parse_univariate, quadratic_span_dimension, quadratic_span_equal,
    FpMultiPoly, LinearFormMatrix, PrimeField, StructureConstants,
};
use serde::Deserialize;

use crate::input::parse_json;
use crate::{CliError, CliResult, Context, Output};

#[derive(Subcommand)]
pub(crate) enum FormsCmd {
    /// Structure constants of the Heisenberg algebra over F_p[t]/(f).
    Algebra {
        #[arg(long)]
        p: u64,
        /// Monic polynomial in t, e.g. "t^2-1".
        #[arg(long)]
        f: String,
    },
    /// Matrix of linear forms of an algebra.
    Matrix {
        #[command(flatten)]
        source: Source,
    },
    /// Nonzero r x r minors, scaled to be monic, without repeats.
    Minors {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        r: usize,
        /// Basis change applied to the variables and columns (JSON matrix).
        #[arg(long)]
        phi: Option<String>,
        /// Basis change applied to the rows (JSON matrix).
        #[arg(long)]
        gamma: Option<String>,
    },
    /// Whether two lists of quadratics span the same space.
    SpanEqual {
        a: String,
        b: String,
        #[arg(long)]
        p: u64,
    },
}

/// Exactly one of `--f` (with `--p`), `--constants` or `--matrix`.
#[derive(Args)]
pub(crate) struct Source {
    #[arg(long)]
    p: Option<u64>,
    #[arg(long)]
    f: Option<String>,
    /// Structure constants JSON.
    #[arg(long, conflicts_with_all = ["f", "matrix"])]
    constants: Option<String>,
    /// Matrix of linear forms JSON.
    #[arg(long, conflicts_with = "f")]
    matrix: Option<String>,
}

fn heisenberg(p: u64, f: &str) -> CliResult<StructureConstants> {
    let field = PrimeField::new(p)?;
    Ok(heisenberg_algebra(&parse_univariate(f, field)?, p)?)
}

fn load_matrix(source: &Source, ctx: &mut Context) -> CliResult<LinearFormMatrix> {
    match (&source.f, &source.constants, &source.matrix) {
        (Some(f), None, None) => {
            let p = source.p.ok_or_else(|| CliError::usage("--f needs --p"))?;
            Ok(linear_form_matrix(&heisenberg(p, f)?))
        }
        (None, Some(path), None) => Ok(linear_form_matrix(&ctx.json::<StructureConstants>(path)?)),
        (None, None, Some(path)) => Ok(ctx.json(path)?),
        _ => Err(CliError::usage("give exactly one of --f, --constants, --matrix")),
    }
}

fn identity(n: usize) -> Vec<Vec<u64>> {
    (0..n).map(|i| (0..n).map(|j| u64::from(i == j)).collect()).collect()
}

#[derive(Deserialize)]
#[serde(untagged)]
enum PolyList {
    Bare(Vec<FpMultiPoly>),
    Wrapped { polynomials: Vec<FpMultiPoly> },
}

fn polynomials(path: &str, ctx: &mut Context) -> CliResult<Vec<FpMultiPoly>> {
    let text = ctx.read(path)?;
    Ok(match parse_json::<PolyList>(&text).map_err(|e| CliError::input(format!("{path}: {}", e.message)))? {
        PolyList::Bare(v) | PolyList::Wrapped { polynomials: v } => v,
    })
}

pub(crate) fn run(cmd: FormsCmd, ctx: &mut Context) -> CliResult<Output> {
    match cmd {
        FormsCmd::Algebra { p, f } => {
            let sc = heisenberg(p, &f)?;
            let mut text = String::new();
            writeln!(text, "n = {}, m = {}", sc.n(), sc.m()).unwrap();
            for i in 0..sc.n() {
                for j in i + 1..sc.n() {
                    let e_i: Vec<u64> = (0..sc.n()).map(|k| u64::from(k == i)).collect();
                    let e_j: Vec<u64> = (0..sc.n()).map(|k| u64::from(k == j)).collect();
                    let b = sc.bracket(&e_i, &e_j);
                    if b.iter().any(|&c| c != 0) {
                        writeln!(text, "[e{}, e{}] = {b:?}", i + 1, j + 1).unwrap();
                    }
                }
            }
            let value = serde_json::to_value(&sc).expect("constants serialize");
            Ok(Output::new(text).field("constants", value))
        }
        FormsCmd::Matrix { source } => {
            let m = load_matrix(&source, ctx)?;
            Ok(Output::new(m.to_string()).field("matrix", &m))
        }
        FormsCmd::Minors { source, r, phi, gamma } => {
            let mut m = load_matrix(&source, ctx)?;
            if phi.is_some() || gamma.is_some() {
                let phi = match phi {
                    Some(path) => ctx.json(&path)?,
                    None => identity(m.cols()),
                };
                let gamma = match gamma {
                    Some(path) => ctx.json(&path)?,
                    None => identity(m.rows()),
                };
                m = m.act(&phi, &gamma)?;
            }
            let gens = minors(&m, r)?;
            let p = m.field().p();
            let span = if r == 2 { Some(quadratic_span_dimension(&gens, p)?) } else { None };
            let mut text = String::new();
            for g in &gens {
                writeln!(text, "{g}").unwrap();
            }
            if let Some(d) = span {
                writeln!(text, "span dimension: {d}").unwrap();
            }
            Ok(Output::new(text).field("r", r).field("minors", &gens).field("span_dimension", span))
        }
        FormsCmd::SpanEqual { a, b, p } => {
            let (a, b) = (polynomials(&a, ctx)?, polynomials(&b, ctx)?);
            let equal = quadratic_span_equal(&a, &b, p)?;
            Ok(Output::new(equal.to_string()).field("equal", equal))
        }
    }
}
