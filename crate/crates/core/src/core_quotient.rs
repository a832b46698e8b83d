//! Domino removal, 2-cores, and the correspondence between a partition and
//! its (2-core, 2-quotient) triple.
//!
//! The quotient is read off the beta-set `{λ_i + (m - i)}` with `m` the
//! smallest even number at least the number of parts. Even beta-numbers
//! give `q0`, odd ones give `q1`.

use serde_json::json;
use thiserror::Error;

use crate::partition::{is_staircase, Partition, Staircase};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Orientation {
    // declared first so it sorts first among dominoes at the same cell
    Vertical,
    Horizontal,
}

/// A domino given by its upper-left cell, 1-indexed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DominoPosition {
    pub row: usize,
    pub column: usize,
    pub orientation: Orientation,
}

impl DominoPosition {
    pub fn horizontal(row: usize, column: usize) -> Self {
        Self {
            row,
            column,
            orientation: Orientation::Horizontal,
        }
    }

    pub fn vertical(row: usize, column: usize) -> Self {
        Self {
            row,
            column,
            orientation: Orientation::Vertical,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DominoError {
    #[error("no removable domino at {0:?}")]
    NotRemovable(DominoPosition),
}

fn is_removable(p: &Partition, d: DominoPosition) -> bool {
    let r = d.row;
    if r == 0 || d.column == 0 {
        return false;
    }
    let len = p.row(r);
    match d.orientation {
        Orientation::Horizontal => len >= 2 && d.column == len - 1 && p.row(r + 1) + 2 <= len,
        Orientation::Vertical => d.column == len && p.row(r + 1) == len && p.row(r + 2) < len,
    }
}

/// Every domino whose removal leaves a Ferrers diagram, sorted by row,
/// then column, vertical before horizontal.
pub fn removable_dominoes(p: &Partition) -> Vec<DominoPosition> {
    let mut out = Vec::new();
    for r in 1..=p.len() {
        let len = p.row(r);
        let v = DominoPosition::vertical(r, len);
        if is_removable(p, v) {
            out.push(v);
        }
        if len >= 2 {
            let h = DominoPosition::horizontal(r, len - 1);
            if is_removable(p, h) {
                out.push(h);
            }
        }
    }
    out.sort();
    out
}

pub fn remove_domino(p: &Partition, d: DominoPosition) -> Result<Partition, DominoError> {
    if !is_removable(p, d) {
        return Err(DominoError::NotRemovable(d));
    }
    let mut parts = p.parts().to_vec();
    let i = d.row - 1;
    match d.orientation {
        Orientation::Horizontal => parts[i] -= 2,
        Orientation::Vertical => {
            parts[i] -= 1;
            parts[i + 1] -= 1;
        }
    }
    parts.retain(|&x| x > 0);
    Ok(Partition::from_sorted_unchecked(parts))
}

/// Removes dominoes until none is left, letting `choose` pick the index of
/// the next domino among the currently removable ones.
pub fn two_core_with<F>(p: &Partition, mut choose: F) -> Partition
where
    F: FnMut(&[DominoPosition]) -> usize,
{
    let mut current = p.clone();
    loop {
        let options = removable_dominoes(&current);
        if options.is_empty() {
            return current;
        }
        let pick = options[choose(&options)];
        current = remove_domino(&current, pick).expect("listed domino is removable");
    }
}

/// The 2-core, always removing the first domino in [`removable_dominoes`] order.
pub fn two_core_by_removal(p: &Partition) -> Partition {
    two_core_with(p, |_| 0)
}

/// A partition split into its 2-core and 2-quotient.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Decomposition {
    pub core: Staircase,
    pub q0: Partition,
    pub q1: Partition,
}

impl Decomposition {
    pub fn new(core: Staircase, q0: Partition, q1: Partition) -> Self {
        Self { core, q0, q1 }
    }

    /// `|S| + 2|q0| + 2|q1|`, the weight of the composed partition.
    pub fn weight(&self) -> usize {
        self.core.weight() + 2 * self.q0.weight() + 2 * self.q1.weight()
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "core_height": self.core.height,
            "q0": self.q0.to_string(),
            "q1": self.q1.to_string(),
        })
    }
}

/// Beta-numbers `λ_i + (len - i)` for `i = 1..len`, in decreasing order.
fn beta_set(p: &Partition, len: usize) -> Vec<usize> {
    debug_assert!(len >= p.len());
    (1..=len).map(|i| p.row(i) + len - i).collect()
}

/// Inverse of [`beta_set`]; `beta` must be strictly decreasing.
fn from_beta_set(beta: &[usize]) -> Partition {
    let len = beta.len();
    let parts = beta
        .iter()
        .enumerate()
        .map(|(i, &b)| b - (len - 1 - i))
        .filter(|&x| x > 0)
        .collect();
    Partition::from_sorted_unchecked(parts)
}

pub fn decompose(p: &Partition) -> Decomposition {
    let m = p.len() + p.len() % 2;
    let (evens, odds): (Vec<usize>, Vec<usize>) =
        beta_set(p, m).into_iter().partition(|b| b % 2 == 0);
    let q0 = from_beta_set(&evens.iter().map(|b| b / 2).collect::<Vec<_>>());
    let q1 = from_beta_set(&odds.iter().map(|b| (b - 1) / 2).collect::<Vec<_>>());

    // Even excess e - o is always even; it is twice the BG-rank.
    let excess = evens.len() as i64 - odds.len() as i64;
    let height = if excess > 0 { excess - 1 } else { -excess };
    Decomposition {
        core: Staircase::new(height as usize),
        q0,
        q1,
    }
}

pub fn compose(d: &Decomposition) -> Partition {
    let k = d.core.height as i64;
    let excess = if k % 2 == 1 { k + 1 } else { -k };
    let odd_count = [d.q1.len() as i64, d.q0.len() as i64 - excess, -excess, 0]
        .into_iter()
        .max()
        .unwrap();
    let even_count = odd_count + excess;

    let mut beta: Vec<usize> = beta_set(&d.q0, even_count as usize)
        .into_iter()
        .map(|b| 2 * b)
        .chain(
            beta_set(&d.q1, odd_count as usize)
                .into_iter()
                .map(|b| 2 * b + 1),
        )
        .collect();
    beta.sort_unstable_by(|a, b| b.cmp(a));
    from_beta_set(&beta)
}

/// Height of the 2-core shared by all partitions of BG-rank `j`.
pub fn core_height_for_rank(j: i64) -> usize {
    if j > 0 {
        (2 * j - 1) as usize
    } else {
        (-2 * j) as usize
    }
}

/// Convenience: the 2-core as a staircase, if the removal result is one.
pub fn two_core_staircase(p: &Partition) -> Option<Staircase> {
    is_staircase(&two_core_by_removal(p)).map(Staircase::new)
}
