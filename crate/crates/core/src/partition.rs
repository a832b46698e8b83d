//! Integer partitions, their text format, and the BG-rank statistic.
//!
//! Cells of a Ferrers diagram are addressed 1-indexed as `(row, column)`.
//! The chessboard sign of cell `(i, j)` is `(-1)^(i+j)`, so `(1, 1)` carries `+1`.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("invalid part {0:?}: expected a positive integer")]
    InvalidToken(String),
    #[error("parts must be positive, found {0}")]
    NonPositivePart(String),
    #[error("parts must be weakly decreasing: {prev} is followed by {next}")]
    Increasing { prev: usize, next: usize },
}

/// A weakly decreasing sequence of positive parts.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// The unique partition of 0.
    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds a partition from parts that must already be weakly decreasing and positive.
    pub fn new(parts: Vec<usize>) -> Result<Self, PartitionError> {
        if let Some(&z) = parts.iter().find(|&&p| p == 0) {
            return Err(PartitionError::NonPositivePart(z.to_string()));
        }
        if let Some(w) = parts.windows(2).find(|w| w[0] < w[1]) {
            return Err(PartitionError::Increasing {
                prev: w[0],
                next: w[1],
            });
        }
        Ok(Self { parts })
    }

    /// Sorts the parts into decreasing order and drops zeros.
    pub fn normalized(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self { parts }
    }

    /// Caller guarantees the parts are weakly decreasing and positive.
    pub(crate) fn from_sorted_unchecked(parts: Vec<usize>) -> Self {
        debug_assert!(parts.iter().all(|&p| p > 0));
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        Self { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.parts
    }

    /// Number of cells.
    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of nonzero parts (rows of the diagram).
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Length of row `row` (1-indexed); zero outside the diagram.
    pub fn row(&self, row: usize) -> usize {
        self.parts.get(row.wrapping_sub(1)).copied().unwrap_or(0)
    }

    /// Iterates the cells `(row, column)` of the Ferrers diagram, row by row.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (1..=len).map(move |j| (i + 1, j)))
    }
}

/// Parses `"4+3+3+1+1+1"`, `"3,2,1"`, `""` or `"0"`.
pub fn parse_partition(text: &str) -> Result<Partition, PartitionError> {
    let trimmed = text.trim();
    if trimmed.is_empty() || trimmed == "0" {
        return Ok(Partition::empty());
    }
    let parts = trimmed
        .split(['+', ','])
        .map(|tok| {
            let tok = tok.trim();
            match tok.parse::<i64>() {
                Ok(v) if v <= 0 => Err(PartitionError::NonPositivePart(tok.to_string())),
                Ok(v) => usize::try_from(v).map_err(|_| PartitionError::InvalidToken(tok.into())),
                Err(_) => Err(PartitionError::InvalidToken(tok.to_string())),
            }
        })
        .collect::<Result<Vec<_>, _>>()?;
    Partition::new(parts)
}

impl FromStr for Partition {
    type Err = PartitionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_partition(s)
    }
}

/// Canonical rendering: parts joined by `+`, and `0` for the empty partition.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("0");
        }
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

/// The staircase `k + (k-1) + ... + 1`, identified by its height `k`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Staircase {
    pub height: usize,
}

impl Staircase {
    pub fn new(height: usize) -> Self {
        Self { height }
    }

    pub fn weight(&self) -> usize {
        self.height * (self.height + 1) / 2
    }

    pub fn to_partition(&self) -> Partition {
        Partition::from_sorted_unchecked((1..=self.height).rev().collect())
    }

    pub fn bg_rank(&self) -> i64 {
        staircase_bg_rank(self.height)
    }
}

impl From<Staircase> for Partition {
    fn from(s: Staircase) -> Self {
        s.to_partition()
    }
}

/// BG-rank by summing the chessboard signs over every cell.
pub fn bg_rank_naive(p: &Partition) -> i64 {
    p.cells()
        .map(|(i, j)| if (i + j) % 2 == 0 { 1 } else { -1 })
        .sum()
}

/// BG-rank from the parts alone: odd parts in odd rows minus odd parts in even rows.
///
/// A row of even length contributes nothing; a row of odd length contributes
/// the sign of its first cell.
pub fn bg_rank(p: &Partition) -> i64 {
    p.parts
        .iter()
        .enumerate()
        .filter(|(_, &len)| len % 2 == 1)
        .map(|(i, _)| if i % 2 == 0 { 1 } else { -1 })
        .sum()
}

/// BG-rank of the staircase of height `k`: `(k+1)/2` for odd `k`, `-k/2` for even `k`.
pub fn staircase_bg_rank(k: usize) -> i64 {
    let k = k as i64;
    if k % 2 == 1 {
        (k + 1) / 2
    } else {
        -k / 2
    }
}

/// Returns `Some(k)` when `p` is the staircase `(k, k-1, ..., 1)`.
pub fn is_staircase(p: &Partition) -> Option<usize> {
    let k = p.len();
    p.parts
        .iter()
        .enumerate()
        .all(|(i, &len)| len == k - i)
        .then_some(k)
}
