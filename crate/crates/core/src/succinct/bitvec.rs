/// Plain bitvector with one cumulative count per 64-bit word.
#[derive(Debug, Clone, Default)]
pub struct RankBitVec {
    words: Vec<u64>,
    /// `ones[k]` = number of set bits in words `0..k`.
    ones: Vec<u32>,
    len: usize,
}

impl RankBitVec {
    pub fn from_bits(bits: impl IntoIterator<Item = bool>) -> Self {
        let mut words = Vec::new();
        let mut len = 0;
        for b in bits {
            if len % 64 == 0 {
                words.push(0u64);
            }
            if b {
                *words.last_mut().unwrap() |= 1 << (len % 64);
            }
            len += 1;
        }
        let mut ones = Vec::with_capacity(words.len() + 1);
        let mut acc = 0u32;
        ones.push(0);
        for w in &words {
            acc += w.count_ones();
            ones.push(acc);
        }
        RankBitVec { words, ones, len }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    /// Set bits in `[0, i)`.
    #[inline]
    pub fn rank1(&self, i: usize) -> usize {
        let (w, b) = (i / 64, i % 64);
        let mut r = self.ones[w] as usize;
        if b > 0 {
            r += (self.words[w] & ((1u64 << b) - 1)).count_ones() as usize;
        }
        r
    }

    #[inline]
    pub fn rank0(&self, i: usize) -> usize {
        i - self.rank1(i)
    }

    /// Position of the `k`-th (0-based) set bit.
    pub fn select1(&self, k: usize) -> Option<usize> {
        self.select_by(k, |bv, w| bv.ones[w] as usize, |w| w)
    }

    /// Position of the `k`-th (0-based) clear bit.
    pub fn select0(&self, k: usize) -> Option<usize> {
        self.select_by(k, |bv, w| 64 * w - bv.ones[w] as usize, |w| !w)
    }

    fn select_by(
        &self,
        k: usize,
        before: impl Fn(&Self, usize) -> usize,
        view: impl Fn(u64) -> u64,
    ) -> Option<usize> {
        // last word whose prefix count is <= k
        let (mut lo, mut hi) = (0, self.words.len());
        if hi == 0 {
            return None;
        }
        while hi - lo > 1 {
            let mid = (lo + hi) / 2;
            if before(self, mid) <= k {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        let mut word = view(self.words[lo]);
        let mut rest = k - before(self, lo);
        while rest > 0 && word != 0 {
            word &= word - 1;
            rest -= 1;
        }
        if word == 0 {
            return None;
        }
        let pos = 64 * lo + word.trailing_zeros() as usize;
        (pos < self.len).then_some(pos)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    proptest! {
        #[test]
        fn rank_select_match_scan(bits in proptest::collection::vec(any::<bool>(), 0..300)) {
            let bv = RankBitVec::from_bits(bits.iter().copied());
            let mut ones = 0;
            for (i, &b) in bits.iter().enumerate() {
                prop_assert_eq!(bv.rank1(i), ones);
                prop_assert_eq!(bv.get(i), b);
                ones += b as usize;
            }
            prop_assert_eq!(bv.rank1(bits.len()), ones);
            let set: Vec<usize> = (0..bits.len()).filter(|&i| bits[i]).collect();
            let clear: Vec<usize> = (0..bits.len()).filter(|&i| !bits[i]).collect();
            for (k, &p) in set.iter().enumerate() {
                prop_assert_eq!(bv.select1(k), Some(p));
            }
            for (k, &p) in clear.iter().enumerate() {
                prop_assert_eq!(bv.select0(k), Some(p));
            }
            prop_assert_eq!(bv.select1(set.len()), None);
            prop_assert_eq!(bv.select0(clear.len()), None);
        }
    }
}
