use super::RangeSuccessor;
use crate::text::{Rank, Text};

/// Per-character sorted occurrence lists. O(σ log n) range successor; used
/// as a reference backend and for next-occurrence lookups.
#[derive(Debug, Clone)]
pub struct PositionLists {
    occ: Vec<Vec<usize>>,
}

impl PositionLists {
    pub fn new(t: &Text) -> Self {
        let mut occ = vec![Vec::new(); t.sigma() + 1];
        for (k, &r) in t.ranks().iter().enumerate() {
            occ[r as usize].push(k + 1);
        }
        PositionLists { occ }
    }

    /// Smallest position `>= from` holding `c`.
    pub fn next_at_or_after(&self, from: usize, c: Rank) -> Option<usize> {
        let list = self.occ.get(c as usize)?;
        let k = list.partition_point(|&p| p < from);
        list.get(k).copied()
    }
}

impl RangeSuccessor for PositionLists {
    fn range_successor(&self, i: usize, j: usize, b: Rank) -> Option<(Rank, usize)> {
        if i > j {
            return None;
        }
        (b as usize + 1..self.occ.len()).find_map(|c| {
            self.next_at_or_after(i, c as Rank)
                .filter(|&p| p <= j)
                .map(|p| (c as Rank, p))
        })
    }
}
