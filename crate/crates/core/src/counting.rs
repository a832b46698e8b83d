//! Partition enumeration and the counting functions `p(n)`, `pp(n)` and `p_j(n)`.
//!
//! `p(n)` comes from Euler's pentagonal-number recurrence and `pp(n)` from the
//! self-convolution of `p`. Both are memoized in process-wide append-only
//! tables. `p_j(n)` is available by brute-force enumeration and by the
//! closed form `p_j(n) = pp((n - j(2j-1)) / 2)`.

use std::sync::{OnceLock, RwLock};

use num_bigint::BigUint;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::partition::{bg_rank, Partition};

/// Largest `n` that [`pj_enumerate`] walks by default.
pub const DEFAULT_ENUMERATION_BOUND: u64 = 40;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CountError {
    #[error("n = {n} exceeds the enumeration bound {bound}")]
    BoundExceeded { n: u64, bound: u64 },
}

/// Partitions of `n` in reverse-lexicographic order, starting from `(n)`.
#[derive(Debug, Clone)]
pub struct Partitions {
    next: Option<Vec<usize>>,
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let current = self.next.take()?;
        self.next = successor(&current);
        Some(Partition::from_sorted_unchecked(current))
    }
}

fn successor(parts: &[usize]) -> Option<Vec<usize>> {
    let k = parts.iter().rposition(|&x| x > 1)?;
    let x = parts[k] - 1;
    // the ones after position k plus the cell taken from parts[k]
    let mut rest = parts.len() - k;
    let mut next = parts[..k].to_vec();
    next.push(x);
    while rest >= x {
        next.push(x);
        rest -= x;
    }
    if rest > 0 {
        next.push(rest);
    }
    Some(next)
}

pub fn enumerate_partitions(n: usize) -> Partitions {
    Partitions {
        next: Some(if n == 0 { Vec::new() } else { vec![n] }),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CountKind {
    /// `p(n)`, the number of partitions of `n`.
    P,
    /// `pp(n)`, the number of ordered pairs of partitions of total weight `n`.
    PP,
    /// `p_j(n)` for a fixed BG-rank `j`.
    Pj(i64),
}

/// Append-only memo of a counting sequence indexed by `n >= 0`.
///
/// Readers share the lock; growing the table takes it exclusively, so
/// writers serialize per table.
#[derive(Debug)]
pub struct CountTable {
    kind: CountKind,
    values: RwLock<Vec<BigUint>>,
}

impl CountTable {
    pub fn new(kind: CountKind) -> Self {
        Self {
            kind,
            values: RwLock::new(Vec::new()),
        }
    }

    pub fn kind(&self) -> CountKind {
        self.kind
    }

    /// Number of memoized entries.
    pub fn len(&self) -> usize {
        self.values.read().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn get(&self, n: usize) -> BigUint {
        if let Some(v) = self.values.read().unwrap().get(n) {
            return v.clone();
        }
        let mut values = self.values.write().unwrap();
        let p = match self.kind {
            CountKind::PP => p_table().prefix(n),
            _ => Vec::new(),
        };
        while values.len() <= n {
            let m = values.len();
            let next = match self.kind {
                CountKind::P => pentagonal_step(&values),
                CountKind::PP => (0..=m).map(|k| &p[k] * &p[m - k]).sum(),
                CountKind::Pj(j) => pj_formula(m as i64, j),
            };
            values.push(next);
        }
        values[n].clone()
    }

    /// Values for `0..=n` in one lock acquisition.
    pub fn prefix(&self, n: usize) -> Vec<BigUint> {
        self.get(n);
        self.values.read().unwrap()[..=n].to_vec()
    }
}

/// Next value of `p` given `p(0..n)`.
fn pentagonal_step(p: &[BigUint]) -> BigUint {
    let n = p.len();
    if n == 0 {
        return BigUint::one();
    }
    let mut plus = BigUint::zero();
    let mut minus = BigUint::zero();
    for k in 1.. {
        let g1 = k * (3 * k - 1) / 2;
        if g1 > n {
            break;
        }
        let target = if k % 2 == 1 { &mut plus } else { &mut minus };
        *target += &p[n - g1];
        let g2 = k * (3 * k + 1) / 2;
        if g2 <= n {
            *target += &p[n - g2];
        }
    }
    plus - minus
}

fn p_table() -> &'static CountTable {
    static TABLE: OnceLock<CountTable> = OnceLock::new();
    TABLE.get_or_init(|| CountTable::new(CountKind::P))
}

fn pp_table() -> &'static CountTable {
    static TABLE: OnceLock<CountTable> = OnceLock::new();
    TABLE.get_or_init(|| CountTable::new(CountKind::PP))
}

/// `p(n)`; zero for negative `n`.
pub fn partition_count(n: i64) -> BigUint {
    if n < 0 {
        return BigUint::zero();
    }
    p_table().get(n as usize)
}

/// `pp(n)`; zero for negative `n`.
pub fn pair_count(n: i64) -> BigUint {
    if n < 0 {
        return BigUint::zero();
    }
    pp_table().get(n as usize)
}

/// `pp(twice / 2)`, which vanishes when `twice` is odd or negative.
pub fn pair_count_at_half(twice: i64) -> BigUint {
    if twice < 0 || twice % 2 != 0 {
        return BigUint::zero();
    }
    pair_count(twice / 2)
}

/// `p(0..=n)` as one vector.
pub fn partition_counts(n: usize) -> Vec<BigUint> {
    p_table().prefix(n)
}

/// `pp(0..=n)` as one vector.
pub fn pair_counts(n: usize) -> Vec<BigUint> {
    pp_table().prefix(n)
}

/// Number of cells in the 2-core of any partition with BG-rank `j`.
pub fn core_weight(j: i64) -> i128 {
    let j = j as i128;
    j * (2 * j - 1)
}

/// `p_j(n)` by filtering every partition of `n` on its BG-rank.
pub fn pj_enumerate(n: u64, j: i64, bound: u64) -> Result<BigUint, CountError> {
    if n > bound {
        return Err(CountError::BoundExceeded { n, bound });
    }
    let count = enumerate_partitions(n as usize)
        .filter(|p| bg_rank(p) == j)
        .count();
    Ok(BigUint::from(count))
}

/// `p_j(n) = pp((n - j(2j-1)) / 2)`.
pub fn pj_formula(n: i64, j: i64) -> BigUint {
    match i64::try_from(n as i128 - core_weight(j)) {
        Ok(diff) => pair_count_at_half(diff),
        Err(_) => BigUint::zero(),
    }
}

/// Whether some partition of `n` has BG-rank `j`: `j + n` even and `j(2j-1) <= n`.
pub fn rank_exists(n: i64, j: i64) -> bool {
    (n as i128 + j as i128).rem_euclid(2) == 0 && core_weight(j) <= n as i128
}

/// Every BG-rank attained by partitions of `n`, increasing.
pub fn rank_range(n: u64) -> Vec<i64> {
    let n = n as i64;
    // j(2j-1) <= n forces |j| <= sqrt(n) + 1
    let reach = (n as f64).sqrt() as i64 + 1;
    (-reach..=reach).filter(|&j| rank_exists(n, j)).collect()
}
