use clap::Subcommand;
use isodist::arith::{divisor_cover_neighbors, factorize, order_distance};

use crate::{CliResult, Output};

#[derive(Subcommand)]
pub(crate) enum OrderCmd {
    /// Cover-graph distance between two orders under divisibility.
    Dist { m: u64, n: u64 },
    /// Prime factorization.
    Factor { n: u64 },
    /// Orders covering `n` and covered by `n`, over the given primes.
    Neighbors {
        n: u64,
        #[arg(long, value_delimiter = ',', default_value = "2,3,5,7")]
        primes: Vec<u64>,
    },
}

pub(crate) fn run(cmd: OrderCmd) -> CliResult<Output> {
    match cmd {
        OrderCmd::Dist { m, n } => {
            let d = order_distance(m, n)?;
            Ok(Output::new(d.to_string()).field("distance", d))
        }
        OrderCmd::Factor { n } => {
            let f = factorize(n)?;
            let text = if n == 1 {
                "1".to_string()
            } else {
                let parts: Vec<String> =
                    f.factors().iter().map(|(p, e)| if *e == 1 { p.to_string() } else { format!("{p}^{e}") }).collect();
                parts.join(" * ")
            };
            let factors: Vec<(u64, u32)> = f.factors().iter().map(|(&p, &e)| (p, e)).collect();
            Ok(Output::new(text).field("n", n).field("factors", factors))
        }
        OrderCmd::Neighbors { n, primes } => {
            let (above, below) = divisor_cover_neighbors(n, &primes)?;
            let list = |v: &[u64]| v.iter().map(u64::to_string).collect::<Vec<_>>().join(" ");
            let text = format!("above: {}\nbelow: {}", list(&above), list(&below));
            Ok(Output::new(text).field("above", above).field("below", below))
        }
    }
}
