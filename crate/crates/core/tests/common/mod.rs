#![allow(dead_code)]

use bgrank_core::Partition;

/// Partitions of `n` with every part at most `max`, by plain recursion.
/// Independent of the library's successor-based iterator.
pub fn brute_partitions(n: usize, max: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in (1..=max.min(n)).rev() {
        for mut rest in brute_partitions(n - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

pub fn all_up_to(weight: usize) -> Vec<Partition> {
    (0..=weight)
        .flat_map(|n| brute_partitions(n, n))
        .map(|parts| Partition::new(parts).unwrap())
        .collect()
}

/// Chessboard sum computed on an explicit 0/1 grid.
pub fn grid_bg_rank(p: &Partition) -> i64 {
    let mut total = 0;
    for (r, &len) in p.parts().iter().enumerate() {
        for c in 0..len {
            total += if (r + c) % 2 == 0 { 1 } else { -1 };
        }
    }
    total
}
