//! Longest Lyndon subsequence.
//!
//! The offline variants walk the trie of pre-Lyndon subsequences in
//! lexicographic preorder without materializing it. A stack holds the
//! leftmost embedding `i_1 < … < i_ℓ` of the current node, each entry tagged
//! with the smallest period of its prefix so Lyndon and pre-Lyndon checks
//! for an extension take O(1).
//!
//! `prune[ℓ]` is the smallest end position of a length-`ℓ` Lyndon
//! subsequence explored so far. A node of depth `ℓ` ending at `i_ℓ >=
//! prune[ℓ]` is irrelevant: an earlier, smaller Lyndon word of the same length
//! ends no later, and swapping it in front of any completion keeps the result
//! Lyndon and no shorter. Its subtree is skipped.

use crate::error::{Error, Result};
use crate::lyndon::PeriodState;
use crate::succinct::{RangeSuccessor, RmqIndex, WaveletTree};
use crate::text::{LexString, PositionSeq, Rank, Text};
use crate::trie::{NodeId, OrderTrie};

/// One stack entry: 1-based text position and period of the prefix ending
/// there.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Frame {
    pub pos: usize,
    pub period: usize,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct TraversalStats {
    pub nodes_visited: u64,
    pub nodes_pruned: u64,
    /// Times an entry of the prune table was lowered.
    pub prune_updates: u64,
    pub rmq_queries: u64,
    pub successor_queries: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LyndonResult {
    pub length: usize,
    pub positions: PositionSeq,
    pub stats: TraversalStats,
}

/// Hooks into the offline traversals, for instrumentation and tests.
pub trait TraversalObserver {
    /// Called once per visited node with the stack from the root down.
    fn on_visit(&mut self, _text: &Text, _frames: &[Frame]) {}

    /// Called when `prune[len]` drops from `old` to `new`; `old` is `n + 1`
    /// while unset.
    fn on_prune_update(&mut self, _len: usize, _old: usize, _new: usize) {}
}

pub struct NoObserver;

impl TraversalObserver for NoObserver {}

/// `next(i, c)`: smallest `j > i` with `T[j] = c`.
#[derive(Debug, Clone)]
pub struct NextTable {
    stride: usize,
    table: Vec<u32>,
}

impl NextTable {
    const NONE: u32 = u32::MAX;

    pub fn new(ranks: &[Rank], sigma: usize) -> Self {
        let stride = sigma + 1;
        let n = ranks.len();
        let mut table = vec![Self::NONE; (n + 1) * stride];
        for i in (0..n).rev() {
            // row i is row i + 1 plus the occurrence at position i + 1
            let (head, tail) = table.split_at_mut((i + 1) * stride);
            head[i * stride..].copy_from_slice(&tail[..stride]);
            head[i * stride + ranks[i] as usize] = i as u32 + 1;
        }
        NextTable { stride, table }
    }

    #[inline]
    pub fn next(&self, i: usize, c: Rank) -> Option<usize> {
        match self.table[i * self.stride + c as usize] {
            Self::NONE => None,
            j => Some(j as usize),
        }
    }
}

/// Character `S[|S| - p + 1]` of the word spelled by `frames`.
#[inline]
fn pivot(t: &Text, frames: &[Frame]) -> Rank {
    match frames.last() {
        None => 1,
        Some(top) => t.at(frames[frames.len() - top.period].pos),
    }
}

#[inline]
fn child_period(t: &Text, frames: &[Frame], c: Rank) -> Option<usize> {
    match frames.last() {
        None => Some(1),
        Some(top) => PeriodState {
            length: frames.len(),
            period: top.period,
        }
        .extend(pivot(t, frames), c)
        .map(|st| st.period),
    }
}

/// How a traversal finds the next child of the node on top of the stack.
trait ChildSource {
    /// First child with edge label `>= from`, as `(label, position)`.
    fn first_child(
        &self,
        frames: &[Frame],
        prune: &[usize],
        from: Rank,
        stats: &mut TraversalStats,
    ) -> Option<(Rank, usize)>;
}

struct NextTableSource<'a> {
    next: NextTable,
    sigma: Rank,
    text: &'a Text,
}

impl ChildSource for NextTableSource<'_> {
    fn first_child(
        &self,
        frames: &[Frame],
        _: &[usize],
        from: Rank,
        _: &mut TraversalStats,
    ) -> Option<(Rank, usize)> {
        let at = frames.last().map_or(0, |f| f.pos);
        let from = from.max(pivot(self.text, frames));
        (from..=self.sigma).find_map(|c| self.next.next(at, c).map(|j| (c, j)))
    }
}

struct SuccinctSource<'a> {
    wavelet: WaveletTree,
    rmq: RmqIndex,
    text: &'a Text,
}

impl ChildSource for SuccinctSource<'_> {
    fn first_child(
        &self,
        frames: &[Frame],
        prune: &[usize],
        from: Rank,
        stats: &mut TraversalStats,
    ) -> Option<(Rank, usize)> {
        let at = frames.last().map_or(0, |f| f.pos);
        // children at or after prune[ℓ + 1] would be irrelevant
        let (lo, hi) = (at + 1, prune[frames.len() + 1] - 1);
        let from = from.max(pivot(self.text, frames));
        stats.rmq_queries += 1;
        let top = self.rmq.range_max_pos(lo, hi)?;
        // largest character below the pivot: no pre-Lyndon child at all;
        // equal to it: only the immature child remains
        if self.text.at(top) < from {
            return None;
        }
        stats.successor_queries += 1;
        self.wavelet.range_successor(lo, hi, from - 1)
    }
}

fn traverse(t: &Text, source: &impl ChildSource, obs: &mut impl TraversalObserver) -> LyndonResult {
    let n = t.len();
    let mut prune = vec![n + 1; n + 2];
    let mut stats = TraversalStats::default();
    let mut frames: Vec<Frame> = Vec::with_capacity(n);
    let mut best: Vec<usize> = Vec::new();
    // Some(c): look for a child of the top with label >= c
    let mut descend_from: Option<Rank> = Some(1);

    loop {
        if let Some(from) = descend_from {
            if let Some((c, pos)) = source.first_child(&frames, &prune, from, &mut stats) {
                let period = child_period(t, &frames, c).expect("children are pre-Lyndon");
                frames.push(Frame { pos, period });
                stats.nodes_visited += 1;
                obs.on_visit(t, &frames);

                let len = frames.len();
                if prune[len] <= pos {
                    stats.nodes_pruned += 1;
                    descend_from = None;
                    continue;
                }
                if period == len {
                    obs.on_prune_update(len, prune[len], pos);
                    prune[len] = pos;
                    stats.prune_updates += 1;
                    if len > best.len() {
                        best = frames.iter().map(|f| f.pos).collect();
                    }
                }
                descend_from = Some(1);
                continue;
            }
        }
        // subtree exhausted: move on to the next sibling
        let Some(done) = frames.pop() else { break };
        descend_from = Some(t.at(done.pos) + 1);
    }

    LyndonResult {
        length: best.len(),
        positions: PositionSeq::new(best, n).expect("stack positions are increasing"),
        stats,
    }
}

/// Pruned preorder traversal with next-occurrence tables: O(n³σ) time,
/// O(nσ) words.
pub fn longest_lyndon_basic(t: &Text) -> LyndonResult {
    longest_lyndon_basic_observed(t, &mut NoObserver)
}

pub fn longest_lyndon_basic_observed(t: &Text, obs: &mut impl TraversalObserver) -> LyndonResult {
    let source = NextTableSource {
        next: NextTable::new(t.ranks(), t.sigma()),
        sigma: t.sigma() as Rank,
        text: t,
    };
    traverse(t, &source, obs)
}

/// Traversal that only ever steps onto relevant nodes, enumerating children
/// through RMQ-gated range-successor queries. The witness is the
/// lexicographically smallest longest Lyndon subsequence.
pub fn longest_lyndon_fast(t: &Text) -> LyndonResult {
    longest_lyndon_fast_observed(t, &mut NoObserver)
}

pub fn longest_lyndon_fast_observed(t: &Text, obs: &mut impl TraversalObserver) -> LyndonResult {
    let source = SuccinctSource {
        wavelet: WaveletTree::new(t),
        rmq: RmqIndex::new(t),
        text: t,
    };
    traverse(t, &source, obs)
}

#[derive(Debug, Clone, Copy)]
struct NodeMeta {
    period: u32,
    /// `S[|S| - p + 1]`, the character deciding how this node extends.
    pivot: Rank,
    /// Text position of the entering edge.
    pos: u32,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct OnlineStats {
    pub nodes_created: u64,
    pub best_updates: u64,
    pub events_issued: u64,
}

/// Streaming longest Lyndon subsequence over a declared alphabet `[1..σ]`.
///
/// The visited part of the pre-Lyndon trie is kept explicitly. Every node
/// waits in the event list of each character that would extend it to a
/// pre-Lyndon word; when that character arrives, the node grows a leaf whose
/// edge is the leftmost occurrence after it.
#[derive(Debug, Clone)]
pub struct OnlineLyndon {
    sigma: usize,
    trie: OrderTrie,
    meta: Vec<NodeMeta>,
    /// `best[ℓ]`: smallest Lyndon node of depth `ℓ` so far; root when unset.
    best: Vec<NodeId>,
    events: Vec<Vec<NodeId>>,
    longest: usize,
    consumed: usize,
    node_cap: Option<usize>,
    stats: OnlineStats,
}

impl OnlineLyndon {
    pub fn new(sigma: usize) -> Self {
        let mut events = vec![Vec::new(); sigma + 1];
        for list in events.iter_mut().skip(1) {
            list.push(NodeId::ROOT);
        }
        OnlineLyndon {
            sigma,
            trie: OrderTrie::new(),
            meta: vec![NodeMeta {
                period: 0,
                pivot: 0,
                pos: 0,
            }],
            best: vec![NodeId::ROOT],
            events,
            longest: 0,
            consumed: 0,
            node_cap: None,
            stats: OnlineStats::default(),
        }
    }

    /// Refuse to grow the trie past `cap` nodes.
    pub fn with_node_cap(mut self, cap: usize) -> Self {
        self.node_cap = Some(cap);
        self
    }

    /// Consumes the next character and returns the longest Lyndon
    /// subsequence length of the prefix read so far. On error the state is
    /// unchanged.
    pub fn push(&mut self, c: Rank) -> Result<usize> {
        if c == 0 || c as usize > self.sigma {
            return Err(Error::OutOfAlphabet {
                rank: c,
                sigma: self.sigma as u32,
            });
        }
        let waiting = std::mem::take(&mut self.events[c as usize]);
        if let Some(cap) = self.node_cap {
            if self.trie.len() + waiting.len() > cap {
                self.events[c as usize] = waiting;
                return Err(Error::NodeCap { cap });
            }
        }
        self.consumed += 1;

        let mut leaves = Vec::with_capacity(waiting.len());
        for v in waiting {
            let state = match v {
                NodeId::ROOT => PeriodState::SINGLE,
                _ => PeriodState {
                    length: self.trie.depth(v),
                    period: self.meta[v.index()].period as usize,
                }
                .extend(self.meta[v.index()].pivot, c)
                .expect("nodes only wait on pre-Lyndon extensions"),
            };
            let leaf = self
                .trie
                .insert(v, c)
                .expect("each node is extended by a character at most once");
            let pivot_at = state.pivot_index();
            let pivot = if pivot_at == state.length {
                c
            } else {
                let anc = self
                    .trie
                    .level_anc(leaf, pivot_at)
                    .expect("pivot lies on the path");
                self.trie.label(anc).expect("pivot is below the root")
            };
            self.meta.push(NodeMeta {
                period: state.period as u32,
                pivot,
                pos: self.consumed as u32,
            });
            self.stats.nodes_created += 1;

            if state.is_lyndon() {
                let len = state.length;
                if self.best.len() <= len {
                    self.best.resize(len + 1, NodeId::ROOT);
                }
                // precedes(_, root) holds: root stands for ⊥
                if self.trie.precedes(leaf, self.best[len]) {
                    self.best[len] = leaf;
                    self.stats.best_updates += 1;
                    self.longest = self.longest.max(len);
                }
            }
            leaves.push(leaf);
        }

        for leaf in leaves {
            let len = self.trie.depth(leaf);
            let rival = self.best.get(len).copied().unwrap_or(NodeId::ROOT);
            if rival != NodeId::ROOT && self.trie.precedes(rival, leaf) {
                continue;
            }
            let pivot = self.meta[leaf.index()].pivot as usize;
            for list in &mut self.events[pivot..] {
                list.push(leaf);
            }
            self.stats.events_issued += (self.sigma + 1 - pivot) as u64;
        }
        Ok(self.longest)
    }

    pub fn longest(&self) -> usize {
        self.longest
    }

    pub fn consumed(&self) -> usize {
        self.consumed
    }

    pub fn node_count(&self) -> usize {
        self.trie.len()
    }

    pub fn stats(&self) -> OnlineStats {
        self.stats
    }

    /// Smallest length-`len` Lyndon subsequence of the prefix read so far.
    pub fn best(&self, len: usize) -> Option<LexString> {
        let v = *self.best.get(len)?;
        (v != NodeId::ROOT).then(|| self.trie.string(v))
    }

    /// Positions of `best(len)` in the stream, 1-based.
    pub fn positions(&self, len: usize) -> Option<PositionSeq> {
        let mut v = *self.best.get(len)?;
        if v == NodeId::ROOT {
            return None;
        }
        let mut out = Vec::with_capacity(len);
        while let Some(p) = self.trie.parent(v) {
            out.push(self.meta[v.index()].pos as usize);
            v = p;
        }
        out.reverse();
        Some(PositionSeq::new(out, self.consumed).expect("edge positions increase along a path"))
    }
}

/// Feeds the whole text through [`OnlineLyndon`] and returns the report
/// after every character.
pub fn longest_lyndon_online(t: &Text) -> Vec<usize> {
    let mut online = OnlineLyndon::new(t.sigma());
    t.ranks()
        .iter()
        .map(|&c| {
            online
                .push(c)
                .expect("normalized ranks are in the alphabet")
        })
        .collect()
}
