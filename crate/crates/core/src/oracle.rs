//! Exhaustive ground truth on tiny inputs.
//!
//! Enumerates every position subset, so lengths are capped hard. Lyndon
//! membership here is decided by comparing against all rotations, which is
//! independent of the suffix-based check in [`crate::lyndon`].

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::text::{LexString, Rank, Text};

pub const MAX_SINGLE: usize = 16;
pub const MAX_COMMON: usize = 12;

/// All distinct non-empty subsequences of a text.
#[derive(Debug, Clone, Default)]
pub struct SubseqSet {
    members: BTreeSet<Vec<Rank>>,
}

impl SubseqSet {
    pub fn of(t: &Text) -> Result<Self> {
        Self::of_ranks(t.ranks(), MAX_SINGLE)
    }

    fn of_ranks(s: &[Rank], limit: usize) -> Result<Self> {
        if s.len() > limit {
            return Err(Error::OracleTooLarge {
                len: s.len(),
                limit,
            });
        }
        let members = (1u32..1 << s.len())
            .map(|mask| {
                (0..s.len())
                    .filter(|k| mask >> k & 1 == 1)
                    .map(|k| s[k])
                    .collect()
            })
            .collect();
        Ok(SubseqSet { members })
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, s: &[Rank]) -> bool {
        self.members.contains(s)
    }

    /// Members in increasing lexicographic order.
    pub fn iter(&self) -> impl Iterator<Item = &[Rank]> {
        self.members.iter().map(Vec::as_slice)
    }

    fn intersect(&self, other: &SubseqSet) -> SubseqSet {
        SubseqSet {
            members: self.members.intersection(&other.members).cloned().collect(),
        }
    }

    /// Smallest member of each length `1..=max_len`.
    fn per_length(&self, max_len: usize) -> Vec<LexString> {
        let mut out = vec![LexString::Bottom; max_len];
        for m in self.iter() {
            if out[m.len() - 1].is_bottom() {
                out[m.len() - 1] = LexString::Word(m.to_vec());
            }
        }
        out
    }

    /// Longest Lyndon member, smallest among equals.
    fn longest_lyndon(&self) -> (usize, LexString) {
        let mut best: Option<&[Rank]> = None;
        for m in self.iter().filter(|m| smaller_than_rotations(m)) {
            if best.is_none_or(|b| m.len() > b.len()) {
                best = Some(m);
            }
        }
        best.map_or((0, LexString::Bottom), |b| {
            (b.len(), LexString::Word(b.to_vec()))
        })
    }
}

fn smaller_than_rotations(w: &[Rank]) -> bool {
    (1..w.len()).all(|k| {
        let mut rotation = w[k..].to_vec();
        rotation.extend_from_slice(&w[..k]);
        w < rotation.as_slice()
    })
}

pub fn oracle_lex_smallest(t: &Text, len: usize) -> Result<LexString> {
    let set = SubseqSet::of(t)?;
    Ok(if len == 0 || len > t.len() {
        LexString::Bottom
    } else {
        set.per_length(t.len()).swap_remove(len - 1)
    })
}

/// Smallest subsequence of every length `1..=n`.
pub fn oracle_lex_per_length(t: &Text) -> Result<Vec<LexString>> {
    Ok(SubseqSet::of(t)?.per_length(t.len()))
}

/// Length and lexicographically smallest witness; `(0, ⊥)` for empty text.
pub fn oracle_longest_lyndon(t: &Text) -> Result<(usize, LexString)> {
    Ok(SubseqSet::of(t)?.longest_lyndon())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CommonMode {
    LexPerLength,
    LongestLyndon,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CommonAnswer {
    /// Entry `ℓ - 1` is the smallest common subsequence of length `ℓ`.
    PerLength(Vec<LexString>),
    LongestLyndon(usize, LexString),
}

pub fn oracle_common(x: &Text, y: &Text, mode: CommonMode) -> Result<CommonAnswer> {
    let common = SubseqSet::of_ranks(x.ranks(), MAX_COMMON)?
        .intersect(&SubseqSet::of_ranks(y.ranks(), MAX_COMMON)?);
    Ok(match mode {
        CommonMode::LexPerLength => {
            CommonAnswer::PerLength(common.per_length(x.len().min(y.len())))
        }
        CommonMode::LongestLyndon => {
            let (len, w) = common.longest_lyndon();
            CommonAnswer::LongestLyndon(len, w)
        }
    })
}

/// Greedy leftmost embedding of `s` into `t`, 1-based.
pub fn leftmost_embedding(t: &[Rank], s: &[Rank]) -> Option<Vec<usize>> {
    let mut out = Vec::with_capacity(s.len());
    let mut from = 0;
    for &c in s {
        let k = from + t[from..].iter().position(|&r| r == c)?;
        out.push(k + 1);
        from = k + 1;
    }
    Some(out)
}
