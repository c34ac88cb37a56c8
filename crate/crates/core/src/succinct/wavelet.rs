use super::{RangeSuccessor, RankBitVec};
use crate::text::{Rank, Text};

/// Wavelet tree over the rank sequence, laid out level-wise as a wavelet
/// matrix: one bitvector per bit of the rank, zeros stably partitioned
/// before ones on the way down.
#[derive(Debug, Clone)]
pub struct WaveletTree {
    levels: Vec<RankBitVec>,
    /// Number of zeros on each level.
    zeros: Vec<usize>,
    bits: u32,
    len: usize,
}

impl WaveletTree {
    pub fn new(t: &Text) -> Self {
        Self::from_ranks(t.ranks())
    }

    pub fn from_ranks(ranks: &[Rank]) -> Self {
        let max = ranks.iter().copied().max().unwrap_or(0);
        let bits = 32 - max.leading_zeros();
        let mut cur = ranks.to_vec();
        let mut levels = Vec::with_capacity(bits as usize);
        let mut zeros = Vec::with_capacity(bits as usize);
        for level in 0..bits {
            let shift = bits - 1 - level;
            levels.push(RankBitVec::from_bits(
                cur.iter().map(|&v| v >> shift & 1 == 1),
            ));
            let (lo, hi): (Vec<Rank>, Vec<Rank>) = cur.iter().partition(|&&v| v >> shift & 1 == 0);
            zeros.push(lo.len());
            cur = lo;
            cur.extend(hi);
        }
        WaveletTree {
            levels,
            zeros,
            bits,
            len: ranks.len(),
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Rank at 1-based position `pos`.
    pub fn access(&self, pos: usize) -> Rank {
        let mut i = pos - 1;
        let mut value = 0;
        for (level, bv) in self.levels.iter().enumerate() {
            value <<= 1;
            if bv.get(i) {
                value |= 1;
                i = self.zeros[level] + bv.rank1(i);
            } else {
                i = bv.rank0(i);
            }
        }
        value
    }

    /// Occurrences of `c` in the 0-based prefix `[0, i)`.
    fn rank(&self, c: Rank, i: usize) -> usize {
        let (mut l, mut r) = (0, i);
        for (level, bv) in self.levels.iter().enumerate() {
            if c >> (self.bits - 1 - level as u32) & 1 == 1 {
                l = self.zeros[level] + bv.rank1(l);
                r = self.zeros[level] + bv.rank1(r);
            } else {
                l = bv.rank0(l);
                r = bv.rank0(r);
            }
        }
        r - l
    }

    /// 0-based position of the `k`-th (0-based) occurrence of `c`.
    fn select(&self, c: Rank, k: usize) -> Option<usize> {
        let mut start = 0;
        for (level, bv) in self.levels.iter().enumerate() {
            start = if c >> (self.bits - 1 - level as u32) & 1 == 1 {
                self.zeros[level] + bv.rank1(start)
            } else {
                bv.rank0(start)
            };
        }
        let mut pos = start + k;
        for (level, bv) in self.levels.iter().enumerate().rev() {
            pos = if c >> (self.bits - 1 - level as u32) & 1 == 1 {
                bv.select1(pos.checked_sub(self.zeros[level])?)?
            } else {
                bv.select0(pos)?
            };
        }
        Some(pos)
    }

    /// Values `< x` in the 0-based range `[l, r)`.
    fn count_less(&self, mut l: usize, mut r: usize, x: Rank) -> usize {
        if self.bits < 32 && x >= 1 << self.bits {
            return r - l;
        }
        let mut below = 0;
        for (level, bv) in self.levels.iter().enumerate() {
            if x >> (self.bits - 1 - level as u32) & 1 == 1 {
                below += bv.rank0(r) - bv.rank0(l);
                l = self.zeros[level] + bv.rank1(l);
                r = self.zeros[level] + bv.rank1(r);
            } else {
                l = bv.rank0(l);
                r = bv.rank0(r);
            }
        }
        below
    }

    /// The `k`-th (0-based) smallest value in the 0-based range `[l, r)`.
    fn kth_smallest(&self, mut l: usize, mut r: usize, mut k: usize) -> Rank {
        let mut value = 0;
        for (level, bv) in self.levels.iter().enumerate() {
            let (l0, r0) = (bv.rank0(l), bv.rank0(r));
            value <<= 1;
            if k < r0 - l0 {
                l = l0;
                r = r0;
            } else {
                k -= r0 - l0;
                value |= 1;
                l = self.zeros[level] + (l - l0);
                r = self.zeros[level] + (r - r0);
            }
        }
        value
    }
}

impl RangeSuccessor for WaveletTree {
    fn range_successor(&self, i: usize, j: usize, b: Rank) -> Option<(Rank, usize)> {
        if i == 0 || i > j || j > self.len {
            return None;
        }
        let (l, r) = (i - 1, j);
        let k = self.count_less(l, r, b.checked_add(1)?);
        if k == r - l {
            return None;
        }
        let c = self.kth_smallest(l, r, k);
        let pos = self.select(c, self.rank(c, l))?;
        Some((c, pos + 1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let t = Text::from_bytes(b"bacdb");
        let wt = WaveletTree::new(&t);
        assert_eq!(wt.access(3), t.at(3));
        let (a, b, c) = (1, 2, 3);
        assert_eq!(wt.range_successor(2, 5, b), Some((c, 3)));
        assert_eq!(wt.range_successor(2, 5, a), Some((b, 5)));
        assert_eq!(wt.range_successor(4, 3, a), None);
        assert_eq!(wt.range_successor(1, 5, 4), None);

        let empty = WaveletTree::new(&Text::from_bytes(b""));
        assert_eq!(empty.range_successor(1, 0, 0), None);
        assert_eq!(empty.range_successor(1, 1, 0), None);

        let aaa = WaveletTree::new(&Text::from_bytes(b"aaa"));
        assert_eq!(aaa.range_successor(1, 3, 1), None);
        assert_eq!(aaa.range_successor(2, 3, 0), Some((1, 2)));
    }

    #[test]
    fn access_reconstructs() {
        let t = Text::from_bytes(b"mississippi river banks");
        let wt = WaveletTree::new(&t);
        for p in 1..=t.len() {
            assert_eq!(wt.access(p), t.at(p));
        }
    }
}
