//! Machine checks of the mod-5 congruences for `pp(n)` and `p_j(n)`.
//!
//! Every check returns a [`CongruenceReport`] that collects all
//! counterexamples instead of stopping at the first one.

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::counting::{
    core_weight, pair_counts, partition_count, partition_counts, pj_enumerate, pj_formula,
    rank_range,
};
use crate::series::{expand_product, jacobi_cube, mod5_factor_mismatch, FactoredProduct};

/// Residues of `pp` arguments that are divisible by 5.
pub const PP_ZERO_RESIDUES: [u64; 3] = [2, 3, 4];

/// One counterexample. `j` is absent for families that do not involve a BG-rank.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub n: i64,
    pub j: Option<i64>,
    pub value: String,
}

impl Failure {
    pub fn new(n: i64, j: Option<i64>, value: impl ToString) -> Self {
        Self {
            n,
            j,
            value: value.to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CongruenceReport {
    family: String,
    range: u64,
    passed: bool,
    /// Number of individual cases examined.
    checked: u64,
    failures: Vec<Failure>,
}

impl CongruenceReport {
    pub fn new(
        family: impl Into<String>,
        range: u64,
        checked: u64,
        failures: Vec<Failure>,
    ) -> Self {
        Self {
            family: family.into(),
            range,
            passed: failures.is_empty(),
            checked,
            failures,
        }
    }

    pub fn family(&self) -> &str {
        &self.family
    }

    pub fn range(&self) -> u64 {
        self.range
    }

    pub fn checked(&self) -> u64 {
        self.checked
    }

    pub fn passed(&self) -> bool {
        self.passed
    }

    pub fn failures(&self) -> &[Failure] {
        &self.failures
    }

    /// Combines reports of the same family over disjoint ranges.
    pub fn merge(mut self, other: CongruenceReport) -> Self {
        debug_assert_eq!(self.family, other.family);
        self.range = self.range.max(other.range);
        self.checked += other.checked;
        self.failures.extend(other.failures);
        self.passed = self.failures.is_empty();
        self
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report serializes")
    }
}

/// A pair `(n mod 5, j mod 5)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ResiduePair {
    n_residue: u8,
    j_residue: u8,
}

impl ResiduePair {
    /// `None` unless both residues lie in `0..5`.
    pub fn new(n_residue: u8, j_residue: u8) -> Option<Self> {
        (n_residue < 5 && j_residue < 5).then_some(Self {
            n_residue,
            j_residue,
        })
    }

    pub fn of(n: i64, j: i64) -> Self {
        Self {
            n_residue: n.rem_euclid(5) as u8,
            j_residue: j.rem_euclid(5) as u8,
        }
    }

    pub fn n_residue(&self) -> u8 {
        self.n_residue
    }

    pub fn j_residue(&self) -> u8 {
        self.j_residue
    }
}

/// `(3j' - 2n' - j'^2) mod 5`, the residue of `(n - j(2j-1))/2` when `n ≡ j (mod 2)`.
pub fn residue_rhs(pair: ResiduePair) -> u8 {
    let n = pair.n_residue as i64;
    let j = pair.j_residue as i64;
    (3 * j - 2 * n - j * j).rem_euclid(5) as u8
}

/// The pairs `(n', j')` covered by the refined congruences, as listed:
/// `(0,1),(0,2),(1,0),(1,3),(1,4),(2,1),(2,2),(2,4),(3,0),(3,3),(4,all)`.
pub fn fifteen_pairs() -> Vec<ResiduePair> {
    const LISTED: [(u8, Option<u8>); 11] = [
        (0, Some(1)),
        (0, Some(2)),
        (1, Some(0)),
        (1, Some(3)),
        (1, Some(4)),
        (2, Some(1)),
        (2, Some(2)),
        (2, Some(4)),
        (3, Some(0)),
        (3, Some(3)),
        (4, None),
    ];
    let pairs: Vec<ResiduePair> = LISTED
        .iter()
        .flat_map(|&(n, j)| match j {
            Some(j) => vec![(n, j)],
            None => (0..5).map(|j| (n, j)).collect(),
        })
        .map(|(n, j)| ResiduePair::new(n, j).expect("listed residues are in range"))
        .collect();
    assert_eq!(pairs.len(), 15);
    pairs
}

/// Whether `p_j(n) ≡ 0 (mod 5)` is asserted for this residue pair:
/// `5n` with `j ≡ 1,2`; `5n+1` with `j ≡ 0,3,4`; `5n+2` with `j ≡ 1,2,4`;
/// `5n+3` with `j ≡ 0,3`; `5n+4` with every `j`.
pub fn refined_congruence_applies(pair: ResiduePair) -> bool {
    let j = pair.j_residue;
    match pair.n_residue {
        0 => matches!(j, 1 | 2),
        1 => matches!(j, 0 | 3 | 4),
        2 => matches!(j, 1 | 2 | 4),
        3 => matches!(j, 0 | 3),
        _ => true,
    }
}

pub fn verify_fifteen_pairs() -> CongruenceReport {
    let pairs = fifteen_pairs();
    let failures = pairs
        .iter()
        .map(|&pair| (pair, residue_rhs(pair)))
        .filter(|(_, r)| !PP_ZERO_RESIDUES.contains(&(*r as u64)))
        .map(|(pair, r)| Failure::new(pair.n_residue.into(), Some(pair.j_residue.into()), r))
        .collect();
    CongruenceReport::new("fifteen-pairs", 4, pairs.len() as u64, failures)
}

fn reach(bound: u64) -> i64 {
    (bound as f64).sqrt() as i64 + 2
}

/// For `0 <= n <= bound` and every `j` of the same parity with
/// `|j| <= sqrt(bound) + 2`, checks `((n - j(2j-1))/2) mod 5 == residue_rhs(n mod 5, j mod 5)`.
pub fn verify_reduction_identity(bound: u64) -> CongruenceReport {
    let r = reach(bound);
    let mut checked = 0;
    let mut failures = Vec::new();
    for n in 0..=bound as i64 {
        for j in (-r..=r).filter(|j| (n - j).rem_euclid(2) == 0) {
            checked += 1;
            let lhs = ((n as i128 - core_weight(j)) / 2).rem_euclid(5) as u8;
            let rhs = residue_rhs(ResiduePair::of(n, j));
            if lhs != rhs {
                failures.push(Failure::new(n, Some(j), format!("{lhs} != {rhs}")));
            }
        }
    }
    CongruenceReport::new("reduction", bound, checked, failures)
}

/// `pp(k) ≡ 0 (mod 5)` for `k ≤ bound` with `k mod 5 ∈ {2,3,4}`.
///
/// `pp` is computed by convolving exact `p` values and independently as the
/// coefficients of `∏(1-x^i)^{-2}` over `Z/5Z`; the two must also agree on
/// every coefficient.
pub fn verify_pp_mod5(bound: u64) -> CongruenceReport {
    let n = bound as usize;
    let exact = pair_counts(n);
    let series = expand_product(&FactoredProduct::single(1, -2).unwrap(), n, Some(5))
        .expect("constant term is 1");
    let five = BigUint::from(5u32);
    let mut checked = 0;
    let mut failures = Vec::new();
    for (k, pp) in exact.iter().enumerate() {
        let by_convolution = (pp % &five).to_u8().unwrap();
        let by_series = series.coeff(k).to_u8().unwrap();
        if by_convolution != by_series {
            failures.push(Failure::new(
                k as i64,
                None,
                format!("convolution {by_convolution} != series {by_series} (mod 5)"),
            ));
        }
        if PP_ZERO_RESIDUES.contains(&(k as u64 % 5)) {
            checked += 1;
            if by_convolution != 0 || by_series != 0 {
                failures.push(Failure::new(k as i64, None, pp));
            }
        }
    }
    CongruenceReport::new("pp-mod5", bound, checked, failures)
}

/// For `0 <= n <= bound`: `T(n) = n(n+1)/2 ≡ 0, 1, 3 (mod 5)`, and
/// `T(n) ≡ 3` forces `n ≡ 2` and `2n + 1 ≡ 0 (mod 5)`.
pub fn triangular_residue_analysis(bound: u64) -> CongruenceReport {
    let mut failures = Vec::new();
    for n in 0..=bound {
        let t = (n * (n + 1) / 2) % 5;
        if !matches!(t, 0 | 1 | 3) {
            failures.push(Failure::new(n as i64, None, format!("T(n) = {t} (mod 5)")));
        }
        if t == 3 && (n % 5 != 2 || (2 * n + 1) % 5 != 0) {
            failures.push(Failure::new(
                n as i64,
                None,
                format!("2n+1 = {} (mod 5)", (2 * n + 1) % 5),
            ));
        }
    }
    CongruenceReport::new("triangular", bound, bound + 1, failures)
}

/// Checks `p_j(n) ≡ 0 (mod 5)` through the closed form for every `n ≤ bound`
/// and every attainable `j` whose residue pair is covered, and cross-checks
/// the closed form against enumeration for all `n ≤ enum_bound`.
pub fn verify_refined_congruences(bound: u64, enum_bound: u64) -> CongruenceReport {
    let five = BigUint::from(5u32);
    let mut checked = 0;
    let mut failures = Vec::new();
    for n in 0..=bound {
        for j in rank_range(n) {
            let formula = pj_formula(n as i64, j);
            if n <= enum_bound {
                checked += 1;
                let counted = pj_enumerate(n, j, enum_bound).expect("within bound");
                if counted != formula {
                    failures.push(Failure::new(
                        n as i64,
                        Some(j),
                        format!("enumerated {counted} != formula {formula}"),
                    ));
                }
            }
            if refined_congruence_applies(ResiduePair::of(n as i64, j)) {
                checked += 1;
                if !(&formula % &five).is_zero() {
                    failures.push(Failure::new(n as i64, Some(j), formula));
                }
            }
        }
    }
    CongruenceReport::new("refined", bound, checked, failures)
}

/// Every case tested by [`verify_refined_congruences`] reduces to a `pp`
/// argument whose residue lies in {2,3,4}, both by direct computation and
/// through [`residue_rhs`].
pub fn verify_implication(bound: u64) -> CongruenceReport {
    let mut checked = 0;
    let mut failures = Vec::new();
    for n in 0..=bound as i64 {
        for j in rank_range(n as u64) {
            let pair = ResiduePair::of(n, j);
            if !refined_congruence_applies(pair) {
                continue;
            }
            checked += 1;
            let arg = (n as i128 - core_weight(j)) / 2;
            let direct = arg.rem_euclid(5) as u64;
            let reduced = residue_rhs(pair) as u64;
            if !PP_ZERO_RESIDUES.contains(&direct) || !PP_ZERO_RESIDUES.contains(&reduced) {
                failures.push(Failure::new(
                    n,
                    Some(j),
                    format!("pp argument {arg} has residue {direct}"),
                ));
            }
        }
    }
    CongruenceReport::new("implication", bound, checked, failures)
}

/// Which counting sequence [`verify_residue_class`] inspects.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sequence {
    P,
    PP,
}

/// `count(5n + offset) ≡ 0 (mod 5)` for `0 <= n <= bound`.
pub fn verify_residue_class(sequence: Sequence, offset: u64, bound: u64) -> CongruenceReport {
    let top = (5 * bound + offset) as usize;
    let values = match sequence {
        Sequence::P => partition_counts(top),
        Sequence::PP => pair_counts(top),
    };
    let five = BigUint::from(5u32);
    let failures = (0..=bound)
        .map(|n| 5 * n + offset)
        .filter(|&k| !(&values[k as usize] % &five).is_zero())
        .map(|k| Failure::new(k as i64, None, &values[k as usize]))
        .collect();
    let name = match sequence {
        Sequence::P => format!("p(5n+{offset})"),
        Sequence::PP => format!("pp(5n+{offset})"),
    };
    CongruenceReport::new(name, bound, bound + 1, failures)
}

/// `p(5n + 4) ≡ 0 (mod 5)` for `0 <= n <= bound`.
pub fn ramanujan_check(bound: u64) -> CongruenceReport {
    let r = verify_residue_class(Sequence::P, 4, bound);
    CongruenceReport::new("ramanujan", bound, r.checked, r.failures)
}

/// `∏(1-x^j)^3` expanded as a product equals the triangular-exponent sum
/// coefficientwise up to `order`, over the integers.
pub fn verify_jacobi(order: u64) -> CongruenceReport {
    let n = order as usize;
    let product = expand_product(&FactoredProduct::single(1, 3).unwrap(), n, None)
        .expect("positive exponents never invert");
    let closed = jacobi_cube(n);
    let failures = (0..=n)
        .filter(|&k| product.coeff(k) != closed.coeff(k))
        .map(|k| {
            Failure::new(
                k as i64,
                None,
                format!(
                    "product {} != closed form {}",
                    product.coeff(k),
                    closed.coeff(k)
                ),
            )
        })
        .collect();
    CongruenceReport::new("jacobi", order, order + 1, failures)
}

/// Wraps the mod-5 factor identity check, reporting the first mismatched coefficient.
pub fn verify_mod5_factor(order: u64) -> CongruenceReport {
    let failures = mod5_factor_mismatch(order as usize)
        .map(|k| vec![Failure::new(k as i64, None, "coefficients differ mod 5")])
        .unwrap_or_default();
    CongruenceReport::new("mod5-factor", order, order + 1, failures)
}

/// `p(n)` is also `Σ_j p_j(n)`; checks it for every `n ≤ bound`.
pub fn verify_completeness(bound: u64) -> CongruenceReport {
    let failures = (0..=bound)
        .filter_map(|n| {
            let total: BigUint = rank_range(n)
                .into_iter()
                .map(|j| pj_formula(n as i64, j))
                .sum();
            let p = partition_count(n as i64);
            (total != p).then(|| Failure::new(n as i64, None, format!("{total} != p(n) = {p}")))
        })
        .collect();
    CongruenceReport::new("completeness", bound, bound + 1, failures)
}
