//! Longest common Lyndon subsequence of two strings.
//!
//! Depth-first search over common pre-Lyndon subsequences, each node held as
//! the pair of leftmost end positions `(x, y)` in `X` and `Y`. For every
//! length the non-dominated end pairs of common Lyndon subsequences found so
//! far are kept; a node whose pair is dominated at its depth is skipped
//! along with its subtree.

use crate::error::{Error, Result};
use crate::longest::NextTable;
use crate::lyndon::PeriodState;
use crate::text::{PositionSeq, Rank, Text};

/// Pairwise non-dominated `(x, y)` pairs together with
/// `R[i] = min { y : (x, y) in list, x <= i }`, so dominance is one lookup.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominanceList {
    /// Sorted by increasing `x`, hence decreasing `y`.
    pairs: Vec<(usize, usize)>,
    /// 1-based; `r[0]` is unused. `usize::MAX` stands for ∞.
    r: Vec<usize>,
}

pub const INFINITY: usize = usize::MAX;

impl DominanceList {
    /// Empty list over `x ∈ [1..n]`.
    pub fn new(n: usize) -> Self {
        DominanceList {
            pairs: Vec::new(),
            r: vec![INFINITY; n + 1],
        }
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// `R[1..=n]`, with [`INFINITY`] where no pair has `x <= i`.
    pub fn r(&self) -> &[usize] {
        &self.r[1..]
    }

    /// Whether `(x, y)` is dominated by (or equal to) a stored pair.
    #[inline]
    pub fn is_dominated(&self, x: usize, y: usize) -> bool {
        self.r[x] <= y
    }

    /// Inserts a non-dominated pair, drops the pairs it dominates and
    /// returns how many entries of `R` changed.
    pub fn insert(&mut self, x: usize, y: usize) -> Result<usize> {
        if x == 0 || x >= self.r.len() {
            return Err(Error::Contract(format!(
                "x = {x} outside [1..{}]",
                self.r.len() - 1
            )));
        }
        if self.is_dominated(x, y) {
            return Err(Error::Contract(format!("({x}, {y}) is already dominated")));
        }
        self.pairs.retain(|&(a, b)| a < x || b < y);
        let at = self.pairs.partition_point(|&(a, _)| a < x);
        self.pairs.insert(at, (x, y));

        let mut changed = 0;
        // R is non-increasing, so the first entry already <= y ends the run
        for slot in &mut self.r[x..] {
            if *slot <= y {
                break;
            }
            *slot = y;
            changed += 1;
        }
        Ok(changed)
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CommonStats {
    pub nodes_visited: u64,
    pub nodes_pruned: u64,
    pub insertions: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommonLyndonResult {
    pub length: usize,
    pub x_positions: PositionSeq,
    pub y_positions: PositionSeq,
    pub stats: CommonStats,
}

#[derive(Debug, Clone, Copy)]
struct PairFrame {
    x: usize,
    y: usize,
    period: usize,
}

/// Both texts must share one normalized alphabet (see
/// [`Text::normalize_pair`]).
pub fn longest_common_lyndon(x: &Text, y: &Text) -> CommonLyndonResult {
    let sigma = x.sigma().max(y.sigma());
    let (next_x, next_y) = (
        NextTable::new(x.ranks(), sigma),
        NextTable::new(y.ranks(), sigma),
    );
    let max_len = x.len().min(y.len());
    let mut lists: Vec<DominanceList> =
        (0..=max_len).map(|_| DominanceList::new(x.len())).collect();
    let mut stats = CommonStats::default();
    let mut frames: Vec<PairFrame> = Vec::with_capacity(max_len);
    let mut best: Vec<PairFrame> = Vec::new();
    let mut descend_from: Option<Rank> = Some(1);

    let pivot = |frames: &[PairFrame]| match frames.last() {
        None => 1,
        Some(top) => x.at(frames[frames.len() - top.period].x),
    };

    loop {
        if let Some(from) = descend_from {
            let (at_x, at_y) = frames.last().map_or((0, 0), |f| (f.x, f.y));
            let piv = pivot(&frames);
            let child = (from.max(piv)..=sigma as Rank)
                .find_map(|c| Some((c, next_x.next(at_x, c)?, next_y.next(at_y, c)?)));
            if let Some((c, cx, cy)) = child {
                let period = match frames.last() {
                    None => 1,
                    Some(top) => {
                        PeriodState {
                            length: frames.len(),
                            period: top.period,
                        }
                        .extend(piv, c)
                        .expect("labels start at the pivot")
                        .period
                    }
                };
                frames.push(PairFrame {
                    x: cx,
                    y: cy,
                    period,
                });
                stats.nodes_visited += 1;
                let len = frames.len();
                if lists[len].is_dominated(cx, cy) {
                    stats.nodes_pruned += 1;
                    descend_from = None;
                    continue;
                }
                if period == len {
                    lists[len]
                        .insert(cx, cy)
                        .expect("checked for dominance above");
                    stats.insertions += 1;
                    if len > best.len() {
                        best = frames.clone();
                    }
                }
                descend_from = Some(1);
                continue;
            }
        }
        let Some(done) = frames.pop() else { break };
        descend_from = Some(x.at(done.x) + 1);
    }

    CommonLyndonResult {
        length: best.len(),
        x_positions: PositionSeq::new(best.iter().map(|f| f.x).collect(), x.len())
            .expect("increasing"),
        y_positions: PositionSeq::new(best.iter().map(|f| f.y).collect(), y.len())
            .expect("increasing"),
        stats,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::letters;

    const INF: usize = INFINITY;

    fn example() -> DominanceList {
        let mut l = DominanceList::new(10);
        for (x, y) in [(3, 9), (5, 4), (8, 2)] {
            l.insert(x, y).unwrap();
        }
        l
    }

    #[test]
    fn dominance_array_example() {
        let l = example();
        assert_eq!(l.r(), &[INF, INF, 9, 9, 4, 4, 4, 2, 2, 2]);
        assert!(l.is_dominated(6, 5));
        assert!(!l.is_dominated(2, 1));
        assert!(!DominanceList::new(10).is_dominated(5, 5));
    }

    #[test]
    fn insert_examples() {
        let mut l = example();
        assert_eq!(l.insert(7, 3), Ok(1));
        assert_eq!(l.r(), &[INF, INF, 9, 9, 4, 4, 3, 2, 2, 2]);

        let mut l = example();
        // R[8..] already holds 2
        assert_eq!(l.insert(3, 2), Ok(5));
        assert_eq!(l.pairs(), &[(3, 2)]);
        assert_eq!(l.r(), &[INF, INF, 2, 2, 2, 2, 2, 2, 2, 2]);

        let mut l = DominanceList::new(4);
        l.insert(1, 1).unwrap();
        assert_eq!(l.r(), &[1, 1, 1, 1]);
        assert!(matches!(l.insert(2, 3), Err(Error::Contract(_))));
        assert!(matches!(l.insert(1, 1), Err(Error::Contract(_))));
    }

    #[test]
    fn common_examples() {
        for (a, b, len, w) in [
            ("aba", "ab", 2, "ab"),
            ("ab", "ba", 1, "a"),
            ("aaa", "aa", 1, "a"),
        ] {
            let (x, y) = Text::pair_from_bytes(a.as_bytes(), b.as_bytes());
            let r = longest_common_lyndon(&x, &y);
            assert_eq!(r.length, len, "{a} {b}");
            let wx = x.extract(r.x_positions.as_slice()).unwrap();
            let wy = y.extract(r.y_positions.as_slice()).unwrap();
            assert_eq!(wx, wy);
            assert_eq!(wx, letters(w));
        }
    }

    #[test]
    fn disjoint_alphabets() {
        let (x, y) = Text::pair_from_bytes(b"ab", b"cd");
        assert_eq!(longest_common_lyndon(&x, &y).length, 0);
    }
}
