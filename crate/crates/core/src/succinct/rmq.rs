use crate::text::{Rank, Text};

/// Sparse table of leftmost argmax positions over power-of-two windows.
#[derive(Debug, Clone)]
pub struct RmqIndex {
    ranks: Vec<Rank>,
    /// `table[k][i]`: 0-based leftmost argmax of `ranks[i..i + 2^k]`.
    table: Vec<Vec<u32>>,
}

impl RmqIndex {
    pub fn new(t: &Text) -> Self {
        Self::from_ranks(t.ranks())
    }

    pub fn from_ranks(ranks: &[Rank]) -> Self {
        let n = ranks.len();
        let mut table: Vec<Vec<u32>> = Vec::new();
        if n > 0 {
            table.push((0..n as u32).collect());
        }
        let mut k = 1;
        while 1 << k <= n {
            let half = 1 << (k - 1);
            let prev = &table[k - 1];
            let row = (0..=n - (1 << k))
                .map(|i| pick(ranks, prev[i], prev[i + half]))
                .collect();
            table.push(row);
            k += 1;
        }
        RmqIndex {
            ranks: ranks.to_vec(),
            table,
        }
    }

    /// Leftmost position of a maximum rank in `T[i..=j]`.
    pub fn range_max_pos(&self, i: usize, j: usize) -> Option<usize> {
        if i == 0 || i > j || j > self.ranks.len() {
            return None;
        }
        let (l, r) = (i - 1, j);
        let k = (usize::BITS - 1 - (r - l).leading_zeros()) as usize;
        let row = &self.table[k];
        Some(pick(&self.ranks, row[l], row[r - (1 << k)]) as usize + 1)
    }
}

#[inline]
fn pick(ranks: &[Rank], a: u32, b: u32) -> u32 {
    let (va, vb) = (ranks[a as usize], ranks[b as usize]);
    if vb > va || (vb == va && b < a) {
        b
    } else {
        a
    }
}
