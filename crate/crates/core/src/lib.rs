//! Partition combinatorics around the BG-rank statistic.
//!
//! The BG-rank of a partition is the sum of a chessboard `±1` filling of its
//! Ferrers diagram, with `+1` in the corner cell. This crate computes it,
//! splits partitions into 2-core and 2-quotient and back, counts partitions
//! of `n` with BG-rank `j` both by enumeration and through
//! `p_j(n) = pp((n - j(2j-1)) / 2)`, and checks the resulting mod-5
//! congruences with exact power-series arithmetic.

pub mod congruence;
pub mod core_quotient;
pub mod counting;
pub mod partition;
pub mod series;

pub use congruence::{CongruenceReport, Failure, ResiduePair};
pub use core_quotient::{Decomposition, DominoPosition, Orientation};
pub use counting::{CountKind, CountTable};
pub use partition::{parse_partition, Partition, PartitionError, Staircase};
pub use series::{FactoredProduct, SeriesError, TruncatedSeries};
