//! Grow-only trie of subsequences with lexicographic `precedes`.
//!
//! Nodes are only ever added as leaves. Each node keeps one skew-binary jump
//! pointer (Myers' scheme), which gives level-ancestor and LCA in O(log n)
//! with O(1) extra words per node and O(1) work per insertion.

use std::collections::hash_map::Entry;
use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::text::{LexString, Rank};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NodeId(u32);

impl NodeId {
    /// The root, standing for `⊥`.
    pub const ROOT: NodeId = NodeId(0);

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

const NONE: u32 = u32::MAX;

#[derive(Debug, Clone)]
struct Node {
    parent: u32,
    jump: u32,
    depth: u32,
    label: Rank,
    first_child: u32,
    last_child: u32,
    next_sibling: u32,
}

#[derive(Debug, Clone)]
pub struct OrderTrie {
    nodes: Vec<Node>,
    edges: HashMap<(u32, Rank), u32>,
}

impl Default for OrderTrie {
    fn default() -> Self {
        Self::new()
    }
}

impl OrderTrie {
    pub fn new() -> Self {
        OrderTrie {
            nodes: vec![Node {
                parent: 0,
                jump: 0,
                depth: 0,
                label: 0,
                first_child: NONE,
                last_child: NONE,
                next_sibling: NONE,
            }],
            edges: HashMap::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    #[inline]
    fn node(&self, v: NodeId) -> &Node {
        &self.nodes[v.index()]
    }

    #[inline]
    pub fn depth(&self, v: NodeId) -> usize {
        self.node(v).depth as usize
    }

    #[inline]
    pub fn parent(&self, v: NodeId) -> Option<NodeId> {
        (v != NodeId::ROOT).then(|| NodeId(self.node(v).parent))
    }

    /// Label of the edge entering `v`; `None` at the root.
    #[inline]
    pub fn label(&self, v: NodeId) -> Option<Rank> {
        (v != NodeId::ROOT).then(|| self.node(v).label)
    }

    pub fn child(&self, v: NodeId, c: Rank) -> Option<NodeId> {
        self.edges.get(&(v.0, c)).map(|&u| NodeId(u))
    }

    /// Children of `v` in creation order.
    pub fn children(&self, v: NodeId) -> impl Iterator<Item = NodeId> + '_ {
        let mut cur = self.node(v).first_child;
        std::iter::from_fn(move || {
            (cur != NONE).then(|| {
                let out = NodeId(cur);
                cur = self.nodes[cur as usize].next_sibling;
                out
            })
        })
    }

    /// Appends a new leaf below `v` along an edge labelled `c`.
    pub fn insert(&mut self, v: NodeId, c: Rank) -> Result<NodeId> {
        let id = self.nodes.len() as u32;
        match self.edges.entry((v.0, c)) {
            Entry::Occupied(_) => return Err(Error::DuplicateEdge { label: c }),
            Entry::Vacant(slot) => {
                slot.insert(id);
            }
        }
        let p = self.node(v);
        let jp = &self.nodes[p.jump as usize];
        let jjp = &self.nodes[jp.jump as usize];
        let jump = if p.depth - jp.depth == jp.depth - jjp.depth {
            jp.jump
        } else {
            v.0
        };
        let depth = p.depth + 1;
        self.nodes.push(Node {
            parent: v.0,
            jump,
            depth,
            label: c,
            first_child: NONE,
            last_child: NONE,
            next_sibling: NONE,
        });
        let parent = &mut self.nodes[v.index()];
        let last = parent.last_child;
        parent.last_child = id;
        if last == NONE {
            parent.first_child = id;
        } else {
            self.nodes[last as usize].next_sibling = id;
        }
        Ok(NodeId(id))
    }

    /// Ancestor of `u` at depth `d`.
    pub fn level_anc(&self, u: NodeId, d: usize) -> Result<NodeId> {
        if d > self.depth(u) {
            return Err(Error::Contract(format!(
                "depth {d} below node at depth {}",
                self.depth(u)
            )));
        }
        Ok(self.ancestor_at(u, d as u32))
    }

    #[inline]
    fn ancestor_at(&self, u: NodeId, d: u32) -> NodeId {
        let mut v = u.0;
        loop {
            let node = &self.nodes[v as usize];
            if node.depth == d {
                return NodeId(v);
            }
            v = if self.nodes[node.jump as usize].depth >= d {
                node.jump
            } else {
                node.parent
            };
        }
    }

    pub fn lca(&self, u: NodeId, v: NodeId) -> NodeId {
        let d = self.node(u).depth.min(self.node(v).depth);
        let (mut a, mut b) = (self.ancestor_at(u, d).0, self.ancestor_at(v, d).0);
        // equal depths have equal jump depths, so both sides move in lockstep
        while a != b {
            let (na, nb) = (&self.nodes[a as usize], &self.nodes[b as usize]);
            if na.jump != nb.jump {
                a = na.jump;
                b = nb.jump;
            } else {
                a = na.parent;
                b = nb.parent;
            }
        }
        NodeId(a)
    }

    pub fn is_ancestor(&self, a: NodeId, v: NodeId) -> bool {
        let da = self.node(a).depth;
        da <= self.node(v).depth && self.ancestor_at(v, da) == a
    }

    /// `string(u) ≺ string(v)`, where the root is `⊥`.
    pub fn precedes(&self, u: NodeId, v: NodeId) -> bool {
        if u == v || u == NodeId::ROOT {
            return false;
        }
        if v == NodeId::ROOT {
            return true;
        }
        let (du, dv) = (self.node(u).depth, self.node(v).depth);
        if du < dv && self.ancestor_at(v, du) == u {
            return true;
        }
        if dv < du && self.ancestor_at(u, dv) == v {
            return false;
        }
        let w = self.node(self.lca(u, v)).depth;
        let cu = self.ancestor_at(u, w + 1);
        let cv = self.ancestor_at(v, w + 1);
        self.node(cu).label < self.node(cv).label
    }

    /// `string(u)·c ≺ string(v)`. Here the root on the left is the empty
    /// prefix, while the root on the right is `⊥`.
    pub fn precedes_extended(&self, u: NodeId, c: Rank, v: NodeId) -> bool {
        if v == NodeId::ROOT {
            return true;
        }
        let (du, dv) = (self.node(u).depth, self.node(v).depth);
        if du < dv && self.ancestor_at(v, du) == u {
            let next = self.node(self.ancestor_at(v, du + 1)).label;
            return c < next || (c == next && dv > du + 1);
        }
        if dv <= du && self.ancestor_at(u, dv) == v {
            // string(v) is a prefix of string(u)·c
            return false;
        }
        self.precedes(u, v)
    }

    /// The string spelled from the root to `v`; the root gives `⊥`.
    pub fn string(&self, v: NodeId) -> LexString {
        let mut out = Vec::with_capacity(self.depth(v));
        let mut cur = v;
        while let Some(p) = self.parent(cur) {
            out.push(self.node(cur).label);
            cur = p;
        }
        out.reverse();
        LexString::from_ranks(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::{letters, lex_compare};
    use rand::{rngs::StdRng, Rng, SeedableRng};
    use std::cmp::Ordering;

    fn build(trie: &mut OrderTrie, word: &str) -> NodeId {
        let mut v = NodeId::ROOT;
        for r in letters(word).ranks() {
            v = match trie.child(v, *r) {
                Some(c) => c,
                None => trie.insert(v, *r).unwrap(),
            };
        }
        v
    }

    #[test]
    fn insert_keeps_creation_order() {
        let mut t = OrderTrie::new();
        let b = t.insert(NodeId::ROOT, 2).unwrap();
        let a = t.insert(NodeId::ROOT, 1).unwrap();
        assert_eq!(t.children(NodeId::ROOT).collect::<Vec<_>>(), [b, a]);
        assert_eq!(
            t.insert(NodeId::ROOT, 1),
            Err(Error::DuplicateEdge { label: 1 })
        );
        // failed insert leaves the trie untouched
        assert_eq!(t.child(NodeId::ROOT, 1), Some(a));
        assert_eq!(t.len(), 3);
        let ab = t.insert(a, 2).unwrap();
        assert_eq!(t.depth(ab), 2);
        assert_eq!(t.string(ab), letters("ab"));
    }

    #[test]
    fn query_examples() {
        let mut t = OrderTrie::new();
        let ab = build(&mut t, "ab");
        let ac = build(&mut t, "ac");
        let b = build(&mut t, "b");
        let a = build(&mut t, "a");
        let abc = build(&mut t, "abc");
        assert!(t.precedes(ab, b));
        assert!(t.precedes(a, ab));
        assert!(!t.precedes(ab, ab));
        assert!(t.precedes(ab, NodeId::ROOT));
        assert!(!t.precedes(NodeId::ROOT, ab));
        assert_eq!(t.lca(ab, ac), a);
        assert_eq!(t.lca(ab, NodeId::ROOT), NodeId::ROOT);
        assert_eq!(t.lca(ab, ab), ab);
        assert_eq!(t.level_anc(abc, 1).unwrap(), a);
        assert_eq!(t.level_anc(abc, 3).unwrap(), abc);
        assert_eq!(t.level_anc(abc, 0).unwrap(), NodeId::ROOT);
        assert!(t.level_anc(abc, 4).is_err());
    }

    #[test]
    fn deep_path_level_ancestors() {
        let mut t = OrderTrie::new();
        let mut path = vec![NodeId::ROOT];
        for i in 0..1000 {
            let v = t.insert(*path.last().unwrap(), i % 3 + 1).unwrap();
            path.push(v);
        }
        for d in [0, 1, 2, 511, 512, 513, 999, 1000] {
            assert_eq!(t.level_anc(path[1000], d).unwrap(), path[d]);
        }
        let side = t.insert(path[700], 9).unwrap();
        assert_eq!(t.lca(side, path[1000]), path[700]);
    }

    #[test]
    fn random_tries_agree_with_string_order() {
        let mut rng = StdRng::seed_from_u64(7);
        for _ in 0..40 {
            let mut t = OrderTrie::new();
            let mut all = vec![NodeId::ROOT];
            while t.len() < 200 {
                let v = all[rng.gen_range(0..all.len())];
                let c = rng.gen_range(1..=4);
                if t.child(v, c).is_none() {
                    all.push(t.insert(v, c).unwrap());
                }
            }
            let strings: Vec<LexString> = all.iter().map(|&v| t.string(v)).collect();
            for (i, &u) in all.iter().enumerate() {
                for (j, &v) in all.iter().enumerate() {
                    let ord = lex_compare(&strings[i], &strings[j]);
                    assert_eq!(t.precedes(u, v), ord == Ordering::Less);
                    if u != NodeId::ROOT && v != NodeId::ROOT {
                        let n = [t.precedes(u, v), t.precedes(v, u), u == v];
                        assert_eq!(n.iter().filter(|&&b| b).count(), 1);
                    }
                    for c in 1..=4 {
                        let mut ext = strings[i].ranks().to_vec();
                        ext.push(c);
                        let expect = LexString::Word(ext) < strings[j];
                        assert_eq!(
                            t.precedes_extended(u, c, v),
                            expect,
                            "{} {c} {}",
                            strings[i],
                            strings[j]
                        );
                    }
                }
            }
        }
    }
}
