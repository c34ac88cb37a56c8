//! Lexicographically smallest subsequences of every length.
//!
//! `D[i, ℓ]` is the smallest length-`ℓ` subsequence of `T[1..i]` and obeys
//! `D[i, ℓ] = min(D[i-1, ℓ], D[i-1, ℓ-1]·T[i])`. Both table builders consume
//! the text one character at a time, so every prefix is answered as soon as
//! its last character has been pushed.

use crate::error::{Error, Result};
use crate::text::{LexString, PositionSeq, Rank, Text};
use crate::trie::{NodeId, OrderTrie};

pub trait LexTable {
    /// Number of text characters consumed so far.
    fn len(&self) -> usize;

    /// `D[i, ℓ]`; `⊥` whenever `ℓ > i` or either index is zero.
    fn cell(&self, i: usize, len: usize) -> LexString;

    fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// `D` with explicit strings and naive comparisons, O(n³) time overall.
/// Cells point into a shared string arena so copying a cell is O(1).
#[derive(Debug, Clone, Default)]
pub struct NaiveLexTable {
    arena: Vec<Vec<Rank>>,
    rows: Vec<Vec<u32>>,
}

impl NaiveLexTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, c: Rank) {
        let i = self.rows.len() + 1;
        let mut row = Vec::with_capacity(i);
        for len in 1..=i {
            let keep = (len < i).then(|| self.rows[i - 2][len - 1]);
            let mut candidate = match len {
                1 => Vec::with_capacity(1),
                _ => self.arena[self.rows[i - 2][len - 2] as usize].clone(),
            };
            candidate.push(c);
            let take_new = match keep {
                None => true,
                Some(k) => candidate < self.arena[k as usize],
            };
            if take_new {
                self.arena.push(candidate);
                row.push(self.arena.len() as u32 - 1);
            } else {
                row.push(keep.unwrap());
            }
        }
        self.rows.push(row);
    }
}

impl LexTable for NaiveLexTable {
    fn len(&self) -> usize {
        self.rows.len()
    }

    fn cell(&self, i: usize, len: usize) -> LexString {
        if i == 0 || len == 0 || len > i || i > self.rows.len() {
            return LexString::Bottom;
        }
        LexString::Word(self.arena[self.rows[i - 1][len - 1] as usize].clone())
    }
}

pub fn lex_smallest_rows_naive(t: &Text) -> NaiveLexTable {
    let mut table = NaiveLexTable::new();
    for &c in t.ranks() {
        table.push(c);
    }
    table
}

/// `D` with cells as trie handles and comparisons through `precedes`.
#[derive(Debug, Clone, Default)]
pub struct TrieLexTable {
    trie: OrderTrie,
    rows: Vec<Vec<NodeId>>,
}

impl TrieLexTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, c: Rank) {
        let i = self.rows.len() + 1;
        let mut row = Vec::with_capacity(i);
        for len in 1..=i {
            let keep = if len < i {
                self.rows[i - 2][len - 1]
            } else {
                NodeId::ROOT
            };
            let stem = if len == 1 {
                NodeId::ROOT
            } else {
                self.rows[i - 2][len - 2]
            };
            // copying wins ties, so a new leaf is always a brand-new string
            if self.trie.precedes_extended(stem, c, keep) {
                let leaf = self
                    .trie
                    .insert(stem, c)
                    .expect("a strictly smaller string cannot already be stored");
                row.push(leaf);
            } else {
                row.push(keep);
            }
        }
        self.rows.push(row);
    }

    pub fn trie(&self) -> &OrderTrie {
        &self.trie
    }

    pub fn node(&self, i: usize, len: usize) -> NodeId {
        if i == 0 || len == 0 || len > i || i > self.rows.len() {
            NodeId::ROOT
        } else {
            self.rows[i - 1][len - 1]
        }
    }
}

impl LexTable for TrieLexTable {
    fn len(&self) -> usize {
        self.rows.len()
    }

    fn cell(&self, i: usize, len: usize) -> LexString {
        self.trie.string(self.node(i, len))
    }
}

pub fn lex_smallest_rows_fast(t: &Text) -> TrieLexTable {
    let mut table = TrieLexTable::new();
    for &c in t.ranks() {
        table.push(c);
    }
    table
}

/// Positions of the smallest length-`len` subsequence of the whole text,
/// computed with a monotone stack in O(n).
pub fn most_competitive(t: &Text, len: usize) -> Result<PositionSeq> {
    let n = t.len();
    if len == 0 || len > n {
        return Err(Error::Contract(format!("length {len} outside [1..{n}]")));
    }
    let mut stack: Vec<usize> = Vec::with_capacity(len);
    for i in 1..=n {
        while let Some(&top) = stack.last() {
            // after popping, |S| - 1 kept plus n - i + 1 remaining must still reach len
            if t.at(top) > t.at(i) && stack.len() - 1 + (n - i + 1) >= len {
                stack.pop();
            } else {
                break;
            }
        }
        if stack.len() < len {
            stack.push(i);
        }
    }
    PositionSeq::new(stack, n)
}

/// `D₃[ℓ, x, y]`: smallest common length-`ℓ` subsequence of `X[1..x]` and
/// `Y[1..y]`, stored as trie handles.
#[derive(Debug, Clone)]
pub struct CommonLexCube {
    trie: OrderTrie,
    nx: usize,
    ny: usize,
    /// Slab `ℓ - 1` holds `(nx + 1) × (ny + 1)` handles, row-major in `x`.
    slabs: Vec<Vec<NodeId>>,
}

impl CommonLexCube {
    pub fn max_len(&self) -> usize {
        self.slabs.len()
    }

    pub fn trie(&self) -> &OrderTrie {
        &self.trie
    }

    pub fn node(&self, len: usize, x: usize, y: usize) -> NodeId {
        if len == 0 || len > self.slabs.len() || x > self.nx || y > self.ny {
            return NodeId::ROOT;
        }
        self.slabs[len - 1][x * (self.ny + 1) + y]
    }

    pub fn cell(&self, len: usize, x: usize, y: usize) -> LexString {
        self.trie.string(self.node(len, x, y))
    }

    /// Smallest common subsequence of length `len` of the full strings.
    pub fn result(&self, len: usize) -> LexString {
        self.cell(len, self.nx, self.ny)
    }
}

/// Fills slab `ℓ` from slab `ℓ - 1` (`None` when `ℓ = 1`).
fn fill_slab(
    trie: &mut OrderTrie,
    below: Option<&[NodeId]>,
    x: &[Rank],
    y: &[Rank],
) -> Vec<NodeId> {
    let w = y.len() + 1;
    let mut slab = vec![NodeId::ROOT; (x.len() + 1) * w];
    for i in 1..=x.len() {
        for j in 1..=y.len() {
            let (up, left) = (slab[(i - 1) * w + j], slab[i * w + j - 1]);
            let mut best = if trie.precedes(left, up) { left } else { up };
            if x[i - 1] == y[j - 1] {
                let stem = match below {
                    None => Some(NodeId::ROOT),
                    // ⊥ below means no common subsequence of length ℓ - 1
                    Some(b) => Some(b[(i - 1) * w + j - 1]).filter(|&s| s != NodeId::ROOT),
                };
                if let Some(stem) = stem {
                    if trie.precedes_extended(stem, x[i - 1], best) {
                        best = trie.insert(stem, x[i - 1]).expect(
                            "a strictly smaller common subsequence cannot already be stored",
                        );
                    }
                }
            }
            slab[i * w + j] = best;
        }
    }
    slab
}

pub fn lex_smallest_common_rows(x: &Text, y: &Text) -> CommonLexCube {
    let max_len = x.len().min(y.len());
    let mut trie = OrderTrie::new();
    let mut slabs: Vec<Vec<NodeId>> = Vec::with_capacity(max_len);
    for _ in 0..max_len {
        let slab = fill_slab(
            &mut trie,
            slabs.last().map(Vec::as_slice),
            x.ranks(),
            y.ranks(),
        );
        slabs.push(slab);
    }
    CommonLexCube {
        trie,
        nx: x.len(),
        ny: y.len(),
        slabs,
    }
}

/// Per-length answers of the cube keeping only two slabs alive.
pub fn lex_smallest_common(x: &Text, y: &Text) -> Vec<LexString> {
    let max_len = x.len().min(y.len());
    let mut trie = OrderTrie::new();
    let mut below: Option<Vec<NodeId>> = None;
    let mut out = Vec::with_capacity(max_len);
    for _ in 0..max_len {
        let slab = fill_slab(&mut trie, below.as_deref(), x.ranks(), y.ranks());
        out.push(trie.string(*slab.last().unwrap()));
        below = Some(slab);
    }
    out
}
