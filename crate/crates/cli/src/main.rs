//! `bgrank`: BG-rank, 2-core/2-quotient and mod-5 congruence checks from the
//! command line.
//!
//! Exit status: 0 on success, 1 when a verification or cross-check fails,
//! 2 on usage or parse errors.

mod verify;

use std::process::ExitCode;

use bgrank_core::core_quotient::{compose, decompose, two_core_by_removal, Decomposition};
use bgrank_core::counting::{
    pair_count, partition_count, pj_enumerate, pj_formula, CountError, DEFAULT_ENUMERATION_BOUND,
};
use bgrank_core::partition::{
    bg_rank, bg_rank_naive, is_staircase, parse_partition, Partition, Staircase,
};
use bgrank_core::series::{expand_product, jacobi_cube, FactoredProduct};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::verify::Family;

#[derive(Debug, Parser)]
#[command(
    name = "bgrank",
    version,
    about = "BG-rank of integer partitions and related counts"
)]
struct Cli {
    /// Emit a single JSON document on stdout.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// BG-rank of a partition such as 4+3+3+1+1+1.
    Bgrank {
        partition: String,
        /// Also compute the cell-by-cell sum and compare.
        #[arg(long)]
        check: bool,
    },
    /// 2-core by repeated domino removal.
    Core { partition: String },
    /// Split into 2-core height and 2-quotient.
    Decompose { partition: String },
    /// Rebuild a partition from core height and quotient partitions.
    Compose {
        height: usize,
        q0: String,
        q1: String,
    },
    /// p(n), pp(n) or p_j(n).
    Count {
        kind: CountArg,
        #[arg(allow_negative_numbers = true)]
        n: i64,
        #[arg(allow_negative_numbers = true)]
        j: Option<i64>,
        #[arg(long, value_enum, default_value_t = Method::Formula)]
        method: Method,
        /// Largest n the enumerate method will walk.
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_BOUND, value_parser = clap::value_parser!(u64).range(1..))]
        enum_bound: u64,
    },
    /// Expand a product of (1 - x^(s i))^e factors as a truncated series.
    Series {
        /// Comma-separated step:exponent pairs, e.g. 1:-2,5:-1.
        #[arg(long, default_value = "1:-1", conflicts_with = "jacobi")]
        factors: String,
        /// Emit the triangular-exponent sum for the cube of the Euler product instead.
        #[arg(long)]
        jacobi: bool,
        #[arg(long, default_value_t = 500, value_parser = clap::value_parser!(u64).range(1..))]
        order: u64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        modulus: Option<u64>,
    },
    /// Run one verification family, or all of them.
    Verify {
        family: Family,
        /// Override the family's default bound.
        #[arg(long)]
        max_n: Option<u64>,
        /// Enumeration cross-check bound for the refined family.
        #[arg(long, default_value_t = 30)]
        enum_bound: u64,
        /// Sequence for the residue-class family.
        #[arg(long, value_enum, default_value_t = verify::SequenceArg::P)]
        kind: verify::SequenceArg,
        /// Offset r in 5n + r for the residue-class family.
        #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u64).range(0..5))]
        offset: u64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CountArg {
    P,
    Pp,
    Pj,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Formula,
    Enumerate,
    Both,
}

pub(crate) enum Failure {
    Usage(String),
    Check(String),
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Check(_) => 1,
            Failure::Usage(_) => 2,
        }
    }
}

fn parse(text: &str) -> Result<Partition, Failure> {
    parse_partition(text).map_err(|e| Failure::Usage(format!("{text:?}: {e}")))
}

fn emit(json: bool, text: impl std::fmt::Display, value: serde_json::Value) {
    if json {
        println!("{value}");
    } else {
        println!("{text}");
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let json = cli.json;
    match cli.command {
        Command::Bgrank { partition, check } => {
            let p = parse(&partition)?;
            let rank = bg_rank(&p);
            let naive = check.then(|| bg_rank_naive(&p));
            let mut value = json!({ "partition": p.to_string(), "bg_rank": rank });
            if let Some(naive) = naive {
                value["naive"] = json!(naive);
                value["agree"] = json!(naive == rank);
            }
            let text = match naive {
                Some(naive) => format!(
                    "{rank}\nnaive {naive}: {}",
                    if naive == rank { "agree" } else { "DISAGREE" }
                ),
                None => rank.to_string(),
            };
            emit(json, text, value);
            if naive.is_some_and(|n| n != rank) {
                return Err(Failure::Check("fast and naive BG-rank disagree".into()));
            }
        }
        Command::Core { partition } => {
            let p = parse(&partition)?;
            let core = two_core_by_removal(&p);
            let value = json!({
                "partition": p.to_string(),
                "core": core.to_string(),
                "core_height": is_staircase(&core),
            });
            emit(json, &core, value);
        }
        Command::Decompose { partition } => {
            let d = decompose(&parse(&partition)?);
            let value = d.to_json();
            println!("{value}");
        }
        Command::Compose { height, q0, q1 } => {
            let d = Decomposition::new(Staircase::new(height), parse(&q0)?, parse(&q1)?);
            let p = compose(&d);
            let mut value = d.to_json();
            value["partition"] = json!(p.to_string());
            emit(json, &p, value);
        }
        Command::Count {
            kind,
            n,
            j,
            method,
            enum_bound,
        } => {
            let count = count(kind, n, j, method, enum_bound)?;
            let value = json!({ "n": n, "j": j, "count": count });
            emit(json, &count, value);
        }
        Command::Series {
            factors,
            jacobi,
            order,
            modulus,
        } => {
            let order = order as usize;
            let series = if jacobi {
                let s = jacobi_cube(order);
                match modulus {
                    Some(m) => s.reduce(m).map_err(|e| Failure::Usage(e.to_string()))?,
                    None => s,
                }
            } else {
                let f = FactoredProduct::parse(&factors).map_err(Failure::Usage)?;
                expand_product(&f, order, modulus).map_err(|e| Failure::Usage(e.to_string()))?
            };
            let value = series.to_json();
            let text = series
                .coeffs()
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(" ");
            emit(json, text, value);
        }
        Command::Verify {
            family,
            max_n,
            enum_bound,
            kind,
            offset,
        } => {
            let opts = verify::Options {
                max_n,
                enum_bound,
                sequence: kind,
                offset,
            };
            verify::run(family, &opts, json)?;
        }
    }
    Ok(())
}

fn count(
    kind: CountArg,
    n: i64,
    j: Option<i64>,
    method: Method,
    bound: u64,
) -> Result<String, Failure> {
    let enumerate = |j: i64| -> Result<String, Failure> {
        let n = u64::try_from(n).map_err(|_| Failure::Usage("enumeration needs n >= 0".into()))?;
        pj_enumerate(n, j, bound)
            .map(|c| c.to_string())
            .map_err(|e: CountError| Failure::Usage(e.to_string()))
    };
    match kind {
        CountArg::P | CountArg::Pp if j.is_some() => {
            Err(Failure::Usage("j only applies to pj".into()))
        }
        CountArg::P | CountArg::Pp if method != Method::Formula => Err(Failure::Usage(
            "only the pj count has an enumeration method".into(),
        )),
        CountArg::P => Ok(partition_count(n).to_string()),
        CountArg::Pp => Ok(pair_count(n).to_string()),
        CountArg::Pj => {
            let j = j.ok_or_else(|| Failure::Usage("pj needs a BG-rank j".into()))?;
            match method {
                Method::Formula => Ok(pj_formula(n, j).to_string()),
                Method::Enumerate => enumerate(j),
                Method::Both => {
                    let formula = pj_formula(n, j).to_string();
                    let counted = enumerate(j)?;
                    if counted != formula {
                        return Err(Failure::Check(format!(
                            "formula gives {formula}, enumeration gives {counted}"
                        )));
                    }
                    Ok(formula)
                }
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            match &f {
                Failure::Usage(msg) => eprintln!("error: {msg}"),
                Failure::Check(msg) => eprintln!("check failed: {msg}"),
            }
            ExitCode::from(f.exit_code())
        }
    }
}
