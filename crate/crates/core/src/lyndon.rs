//! Lyndon predicates, O(1) period bookkeeping for pre-Lyndon words and
//! Duval's factorization.

use crate::error::{Error, Result};
use crate::text::{LexString, Rank, Text};

/// Length and smallest period of a non-empty pre-Lyndon word.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PeriodState {
    pub length: usize,
    pub period: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExtensionClass {
    SamePeriodPreLyndon,
    NewLyndon,
    NotPreLyndon,
}

impl PeriodState {
    /// State of any one-character word, which is always Lyndon.
    pub const SINGLE: PeriodState = PeriodState {
        length: 1,
        period: 1,
    };

    pub fn is_lyndon(self) -> bool {
        self.period == self.length
    }

    /// 1-based index into the word of the character that decides how the
    /// next extension classifies: `S[|S| - p + 1]`.
    pub fn pivot_index(self) -> usize {
        self.length - self.period + 1
    }

    /// The state after appending `c`, or `None` if the result is not
    /// pre-Lyndon.
    pub fn extend(self, pivot_char: Rank, c: Rank) -> Option<PeriodState> {
        match classify_extension(self, pivot_char, c) {
            ExtensionClass::SamePeriodPreLyndon => Some(PeriodState {
                length: self.length + 1,
                period: self.period,
            }),
            ExtensionClass::NewLyndon => Some(PeriodState {
                length: self.length + 1,
                period: self.length + 1,
            }),
            ExtensionClass::NotPreLyndon => None,
        }
    }
}

/// Classifies `Sc` given the pre-Lyndon `S` and its pivot character
/// `S[|S| - p + 1]`.
#[inline]
pub fn classify_extension(_st: PeriodState, pivot_char: Rank, c: Rank) -> ExtensionClass {
    use std::cmp::Ordering::*;
    match c.cmp(&pivot_char) {
        Equal => ExtensionClass::SamePeriodPreLyndon,
        Greater => ExtensionClass::NewLyndon,
        Less => ExtensionClass::NotPreLyndon,
    }
}

fn non_bottom(s: &LexString) -> Result<&[Rank]> {
    match s {
        LexString::Bottom => Err(Error::Contract("⊥ has no Lyndon structure".into())),
        LexString::Word(w) => Ok(w),
    }
}

/// Strictly smaller than each non-empty proper suffix. Quadratic.
pub fn is_lyndon(s: &LexString) -> Result<bool> {
    let w = non_bottom(s)?;
    Ok(is_lyndon_ranks(w))
}

pub(crate) fn is_lyndon_ranks(w: &[Rank]) -> bool {
    !w.is_empty() && (1..w.len()).all(|k| w < &w[k..])
}

/// Smallest `p` with `S[i] = S[i + p]` wherever both sides exist. Quadratic.
pub fn naive_period(s: &LexString) -> Result<usize> {
    let w = non_bottom(s)?;
    Ok(naive_period_ranks(w))
}

pub(crate) fn naive_period_ranks(w: &[Rank]) -> usize {
    (1..=w.len())
        .find(|&p| (0..w.len() - p).all(|i| w[i] == w[i + p]))
        .unwrap_or(w.len())
}

/// Lyndon factorization as 1-based inclusive `(start, end)` spans.
pub fn duval_factorize(t: &Text) -> Vec<(usize, usize)> {
    duval_ranks(t.ranks())
}

pub(crate) fn duval_ranks(s: &[Rank]) -> Vec<(usize, usize)> {
    let n = s.len();
    let mut factors = Vec::new();
    let mut i = 0;
    while i < n {
        let mut j = i + 1;
        let mut k = i;
        while j < n && s[k] <= s[j] {
            if s[k] < s[j] {
                k = i;
            } else {
                k += 1;
            }
            j += 1;
        }
        while i <= k {
            factors.push((i + 1, i + j - k));
            i += j - k;
        }
    }
    factors
}

/// Span of the leftmost longest Lyndon factor, which is a longest Lyndon
/// substring.
pub fn longest_lyndon_substring(t: &Text) -> Result<(usize, usize)> {
    duval_factorize(t)
        .into_iter()
        .reduce(|best, f| if f.1 - f.0 > best.1 - best.0 { f } else { best })
        .ok_or_else(|| Error::Contract("empty text has no Lyndon substring".into()))
}
