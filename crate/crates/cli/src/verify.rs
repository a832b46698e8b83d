use bgrank_core::congruence::{
    ramanujan_check, triangular_residue_analysis, verify_completeness, verify_fifteen_pairs,
    verify_implication, verify_jacobi, verify_mod5_factor, verify_pp_mod5,
    verify_reduction_identity, verify_refined_congruences, verify_residue_class, CongruenceReport,
    Sequence,
};
use bgrank_core::counting::DEFAULT_ENUMERATION_BOUND;
use clap::ValueEnum;
use serde_json::json;

use crate::Failure;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    All,
    PpMod5,
    FifteenPairs,
    Reduction,
    Refined,
    Jacobi,
    Mod5Factor,
    Triangular,
    Ramanujan,
    Implication,
    Completeness,
    /// count(5n + offset) ≡ 0 (mod 5) for a chosen sequence and offset.
    ResidueClass,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SequenceArg {
    P,
    Pp,
}

pub struct Options {
    pub max_n: Option<u64>,
    pub enum_bound: u64,
    pub sequence: SequenceArg,
    pub offset: u64,
}

/// Families run by `verify all`, in output order.
const ALL: [Family; 10] = [
    Family::FifteenPairs,
    Family::Reduction,
    Family::PpMod5,
    Family::Refined,
    Family::Implication,
    Family::Triangular,
    Family::Jacobi,
    Family::Mod5Factor,
    Family::Ramanujan,
    Family::Completeness,
];

fn default_bound(family: Family) -> u64 {
    match family {
        Family::FifteenPairs => 4,
        Family::Reduction | Family::Refined | Family::Implication | Family::Mod5Factor => 500,
        Family::PpMod5 => 5000,
        Family::Triangular => 10_000,
        Family::Jacobi | Family::Completeness => 1000,
        Family::Ramanujan | Family::ResidueClass => 200,
        Family::All => unreachable!("expanded before dispatch"),
    }
}

fn run_one(family: Family, opts: &Options) -> CongruenceReport {
    let n = opts.max_n.unwrap_or_else(|| default_bound(family));
    match family {
        Family::FifteenPairs => verify_fifteen_pairs(),
        Family::Reduction => verify_reduction_identity(n),
        Family::PpMod5 => verify_pp_mod5(n),
        Family::Refined => verify_refined_congruences(n, opts.enum_bound.min(n)),
        Family::Implication => verify_implication(n),
        Family::Triangular => triangular_residue_analysis(n),
        Family::Jacobi => verify_jacobi(n),
        Family::Mod5Factor => verify_mod5_factor(n),
        Family::Ramanujan => ramanujan_check(n),
        Family::Completeness => verify_completeness(n),
        Family::ResidueClass => {
            let seq = match opts.sequence {
                SequenceArg::P => Sequence::P,
                SequenceArg::Pp => Sequence::PP,
            };
            verify_residue_class(seq, opts.offset, n)
        }
        Family::All => unreachable!("expanded before dispatch"),
    }
}

fn print_text(report: &CongruenceReport) {
    let status = if report.passed() { "PASS" } else { "FAIL" };
    println!(
        "{status} {} (range {}, {} cases)",
        report.family(),
        report.range(),
        report.checked()
    );
    const SHOWN: usize = 20;
    for f in report.failures().iter().take(SHOWN) {
        match f.j {
            Some(j) => println!("  n={} j={j} value={}", f.n, f.value),
            None => println!("  n={} value={}", f.n, f.value),
        }
    }
    if report.failures().len() > SHOWN {
        println!("  ... {} more", report.failures().len() - SHOWN);
    }
}

pub fn run(family: Family, opts: &Options, json: bool) -> Result<(), Failure> {
    if opts.enum_bound > DEFAULT_ENUMERATION_BOUND {
        return Err(Failure::Usage(format!(
            "enumeration bound {} is above the guard {DEFAULT_ENUMERATION_BOUND}",
            opts.enum_bound
        )));
    }
    let families: Vec<Family> = match family {
        Family::All => ALL.to_vec(),
        f => vec![f],
    };
    let reports: Vec<CongruenceReport> = families.iter().map(|&f| run_one(f, opts)).collect();
    let passed = reports.iter().all(CongruenceReport::passed);

    if json {
        let doc = if family == Family::All {
            json!({
                "passed": passed,
                "reports": reports.iter().map(CongruenceReport::to_json).collect::<Vec<_>>(),
            })
        } else {
            reports[0].to_json()
        };
        println!("{doc}");
    } else {
        reports.iter().for_each(print_text);
    }

    if passed {
        Ok(())
    } else {
        let failed: Vec<&str> = reports
            .iter()
            .filter(|r| !r.passed())
            .map(CongruenceReport::family)
            .collect();
        Err(Failure::Check(failed.join(", ")))
    }
}
