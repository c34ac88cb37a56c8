//! Range queries over text ranks: wavelet-tree range successor and a
//! sparse-table range-maximum index.
//!
//! All ranges are 1-based and inclusive, `i..=j`; `i > j` is the empty range.

mod bitvec;
mod poslist;
mod rmq;
mod wavelet;

pub use bitvec::RankBitVec;
pub use poslist::PositionLists;
pub use rmq::RmqIndex;
pub use wavelet::WaveletTree;

use crate::text::Rank;

pub trait RangeSuccessor {
    /// Smallest character `c > b` occurring in `T[i..=j]`, together with its
    /// leftmost position in that range.
    fn range_successor(&self, i: usize, j: usize, b: Rank) -> Option<(Rank, usize)>;
}
