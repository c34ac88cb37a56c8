//! Input texts, rank normalization and the `⊥`-aware string order.
//!
//! Every algorithm in the crate works on dense ranks in `[1..σ]`. Positions
//! exposed through the public API are 1-based, matching how subsequences are
//! usually written down (`i_1 < i_2 < … < i_ℓ`).

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Dense character rank in `[1..σ]`.
pub type Rank = u32;

/// How the original symbols were read, used only for rendering.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SymbolKind {
    #[default]
    Bytes,
    Tokens,
}

/// A rank-normalized string together with the alphabet it was reduced from.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Text {
    symbols: Vec<i64>,
    ranks: Vec<Rank>,
    /// Sorted distinct symbols; rank `r` denotes `alphabet[r - 1]`.
    alphabet: Vec<i64>,
    kind: SymbolKind,
}

impl Text {
    /// Reduces `raw` to ranks `1..=σ` preserving the order of the symbols.
    pub fn normalize(raw: &[i64], kind: SymbolKind) -> Self {
        let mut alphabet = raw.to_vec();
        alphabet.sort_unstable();
        alphabet.dedup();
        Self::with_alphabet(raw, alphabet, kind)
    }

    pub fn from_bytes(bytes: &[u8]) -> Self {
        let raw: Vec<i64> = bytes.iter().map(|&b| i64::from(b)).collect();
        Self::normalize(&raw, SymbolKind::Bytes)
    }

    /// Parses whitespace-separated decimal integers.
    pub fn from_tokens(input: &str) -> Result<Self> {
        Ok(Self::normalize(&parse_tokens(input)?, SymbolKind::Tokens))
    }

    /// Normalizes two strings over their joint alphabet so that ranks are
    /// comparable across them.
    pub fn normalize_pair(x: &[i64], y: &[i64], kind: SymbolKind) -> (Self, Self) {
        let mut alphabet: Vec<i64> = x.iter().chain(y).copied().collect();
        alphabet.sort_unstable();
        alphabet.dedup();
        (
            Self::with_alphabet(x, alphabet.clone(), kind),
            Self::with_alphabet(y, alphabet, kind),
        )
    }

    pub fn pair_from_bytes(x: &[u8], y: &[u8]) -> (Self, Self) {
        let widen = |s: &[u8]| s.iter().map(|&b| i64::from(b)).collect::<Vec<_>>();
        Self::normalize_pair(&widen(x), &widen(y), SymbolKind::Bytes)
    }

    fn with_alphabet(raw: &[i64], alphabet: Vec<i64>, kind: SymbolKind) -> Self {
        let ranks = raw
            .iter()
            .map(|s| alphabet.binary_search(s).expect("symbol is in alphabet") as Rank + 1)
            .collect();
        Text {
            symbols: raw.to_vec(),
            ranks,
            alphabet,
            kind,
        }
    }

    pub fn len(&self) -> usize {
        self.ranks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ranks.is_empty()
    }

    /// Alphabet size. For pair-normalized texts this is the joint alphabet.
    pub fn sigma(&self) -> usize {
        self.alphabet.len()
    }

    pub fn ranks(&self) -> &[Rank] {
        &self.ranks
    }

    pub fn symbols(&self) -> &[i64] {
        &self.symbols
    }

    pub fn kind(&self) -> SymbolKind {
        self.kind
    }

    /// Rank at 1-based position `pos`.
    #[inline]
    pub fn at(&self, pos: usize) -> Rank {
        self.ranks[pos - 1]
    }

    pub fn symbol_of(&self, rank: Rank) -> i64 {
        self.alphabet[rank as usize - 1]
    }

    /// The rank sequence `T[p_1] … T[p_k]`; the empty sequence is `⊥`.
    pub fn extract(&self, positions: &[usize]) -> Result<LexString> {
        PositionSeq::validate(positions, self.len())?;
        Ok(LexString::from_ranks(
            positions.iter().map(|&p| self.at(p)).collect(),
        ))
    }

    /// Renders a rank string with the original symbols.
    pub fn render(&self, s: &LexString) -> String {
        let symbols = s.ranks().iter().map(|&r| self.symbol_of(r));
        match self.kind {
            SymbolKind::Bytes => {
                let bytes: Vec<u8> = symbols.map(|b| b as u8).collect();
                String::from_utf8_lossy(&bytes).into_owned()
            }
            SymbolKind::Tokens => symbols.map(|t| t.to_string()).collect::<Vec<_>>().join(" "),
        }
    }
}

pub fn parse_tokens(input: &str) -> Result<Vec<i64>> {
    input
        .split_whitespace()
        .map(|tok| {
            tok.parse::<i64>()
                .map_err(|_| Error::Parse(format!("not an integer token: {tok:?}")))
        })
        .collect()
}

/// Strictly increasing 1-based positions into a text.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PositionSeq(Vec<usize>);

impl PositionSeq {
    pub fn new(positions: Vec<usize>, n: usize) -> Result<Self> {
        Self::validate(&positions, n)?;
        Ok(PositionSeq(positions))
    }

    fn validate(positions: &[usize], n: usize) -> Result<()> {
        if let Some(&p) = positions.iter().find(|&&p| p == 0 || p > n) {
            return Err(Error::Contract(format!("position {p} outside [1..{n}]")));
        }
        if positions.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Contract(
                "positions are not strictly increasing".into(),
            ));
        }
        Ok(())
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }
}

/// A string under the order where the empty string `⊥` is larger than every
/// non-empty string.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum LexString {
    Bottom,
    Word(Vec<Rank>),
}

impl LexString {
    pub fn from_ranks(ranks: Vec<Rank>) -> Self {
        if ranks.is_empty() {
            LexString::Bottom
        } else {
            LexString::Word(ranks)
        }
    }

    pub fn ranks(&self) -> &[Rank] {
        match self {
            LexString::Bottom => &[],
            LexString::Word(w) => w,
        }
    }

    pub fn len(&self) -> usize {
        self.ranks().len()
    }

    /// `⊥` is the only empty string.
    pub fn is_empty(&self) -> bool {
        self.is_bottom()
    }

    pub fn is_bottom(&self) -> bool {
        matches!(self, LexString::Bottom)
    }

    /// Renders ranks `1, 2, …` as `a, b, …`; handy in tests and diagnostics.
    pub fn to_letters(&self) -> String {
        match self {
            LexString::Bottom => "⊥".to_owned(),
            LexString::Word(w) => w.iter().map(|&r| rank_letter(r)).collect(),
        }
    }
}

fn rank_letter(r: Rank) -> char {
    if (1..=26).contains(&r) {
        (b'a' + (r - 1) as u8) as char
    } else {
        '?'
    }
}

/// Parses a lowercase literal such as `"aba"` into ranks `a=1, b=2, …`.
pub fn letters(s: &str) -> LexString {
    LexString::from_ranks(s.bytes().map(|b| Rank::from(b - b'a' + 1)).collect())
}

impl fmt::Display for LexString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_letters())
    }
}

pub fn lex_compare(a: &LexString, b: &LexString) -> Ordering {
    match (a, b) {
        (LexString::Bottom, LexString::Bottom) => Ordering::Equal,
        (LexString::Bottom, _) => Ordering::Greater,
        (_, LexString::Bottom) => Ordering::Less,
        // slice order already puts a proper prefix first
        (LexString::Word(x), LexString::Word(y)) => x.cmp(y),
    }
}

impl Ord for LexString {
    fn cmp(&self, other: &Self) -> Ordering {
        lex_compare(self, other)
    }
}

impl PartialOrd for LexString {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn normalize_examples() {
        let t = Text::from_bytes(b"bca");
        assert_eq!(t.ranks(), &[2, 3, 1]);
        assert_eq!(t.sigma(), 3);

        let t = Text::from_bytes(b"aaaa");
        assert_eq!(t.ranks(), &[1, 1, 1, 1]);
        assert_eq!(t.sigma(), 1);

        let t = Text::from_bytes(b"");
        assert_eq!((t.len(), t.sigma()), (0, 0));
    }

    #[test]
    fn tokens_are_ordered_numerically() {
        let t = Text::from_tokens("10 -3 7 10\n2").unwrap();
        assert_eq!(t.ranks(), &[4, 1, 3, 4, 2]);
        assert_eq!(t.render(&LexString::Word(vec![1, 4])), "-3 10");
    }

    #[test]
    fn bad_token_is_parse_error() {
        assert!(matches!(Text::from_tokens("1 2 x"), Err(Error::Parse(_))));
    }

    #[test]
    fn joint_alphabet() {
        let (x, y) = Text::pair_from_bytes(b"ab", b"cd");
        assert_eq!(x.ranks(), &[1, 2]);
        assert_eq!(y.ranks(), &[3, 4]);
        assert_eq!(x.sigma(), 4);
    }

    #[test]
    fn extract_examples() {
        let t = Text::from_bytes(b"aba");
        assert_eq!(t.extract(&[1, 2]).unwrap(), letters("ab"));
        assert_eq!(t.extract(&[1, 3]).unwrap(), letters("aa"));
        assert_eq!(t.extract(&[]).unwrap(), LexString::Bottom);
        assert!(matches!(t.extract(&[2, 2]), Err(Error::Contract(_))));
        assert!(matches!(t.extract(&[0]), Err(Error::Contract(_))));
        assert!(matches!(t.extract(&[4]), Err(Error::Contract(_))));
    }

    #[test]
    fn compare_examples() {
        assert_eq!(lex_compare(&letters("ab"), &letters("b")), Ordering::Less);
        assert_eq!(lex_compare(&letters("a"), &letters("ab")), Ordering::Less);
        assert_eq!(
            lex_compare(&LexString::Bottom, &letters("a")),
            Ordering::Greater
        );
        assert_eq!(
            lex_compare(&LexString::Bottom, &LexString::Bottom),
            Ordering::Equal
        );
    }

    fn naive_compare(a: &[Rank], b: &[Rank]) -> Ordering {
        match (a.is_empty(), b.is_empty()) {
            (true, true) => return Ordering::Equal,
            (true, false) => return Ordering::Greater,
            (false, true) => return Ordering::Less,
            _ => {}
        }
        let mut k = 0;
        loop {
            match (a.get(k), b.get(k)) {
                (None, None) => return Ordering::Equal,
                (None, Some(_)) => return Ordering::Less,
                (Some(_), None) => return Ordering::Greater,
                (Some(x), Some(y)) if x != y => return x.cmp(y),
                _ => k += 1,
            }
        }
    }

    fn all_strings(max_len: usize, sigma: Rank) -> Vec<Vec<Rank>> {
        let mut out = vec![vec![]];
        let mut frontier = vec![vec![]];
        for _ in 0..max_len {
            let mut next = Vec::new();
            for s in &frontier {
                for c in 1..=sigma {
                    let mut t: Vec<Rank> = s.clone();
                    t.push(c);
                    next.push(t);
                }
            }
            out.extend(next.iter().cloned());
            frontier = next;
        }
        out
    }

    #[test]
    fn compare_matches_naive_exhaustively() {
        let strings = all_strings(6, 3);
        let sample: Vec<_> = strings.iter().step_by(7).collect();
        for a in &strings {
            for b in &sample {
                let (x, y) = (
                    LexString::from_ranks(a.clone()),
                    LexString::from_ranks((*b).clone()),
                );
                assert_eq!(lex_compare(&x, &y), naive_compare(a, b), "{x} vs {y}");
                assert_eq!(lex_compare(&y, &x), naive_compare(b, a), "{y} vs {x}");
            }
        }
    }

    proptest! {
        #[test]
        fn normalize_is_idempotent(raw in proptest::collection::vec(-50i64..50, 0..40)) {
            let once = Text::normalize(&raw, SymbolKind::Tokens);
            let widened: Vec<i64> = once.ranks().iter().map(|&r| i64::from(r)).collect();
            let twice = Text::normalize(&widened, SymbolKind::Tokens);
            prop_assert_eq!(once.ranks(), twice.ranks());
            prop_assert!(once.ranks().iter().all(|&r| r >= 1 && r as usize <= once.sigma()));
            for i in 0..raw.len() {
                for j in 0..raw.len() {
                    prop_assert_eq!(raw[i].cmp(&raw[j]), once.ranks()[i].cmp(&once.ranks()[j]));
                }
            }
        }

        #[test]
        fn extract_appends(raw in proptest::collection::vec(0i64..4, 1..20), mask in any::<u32>()) {
            let t = Text::normalize(&raw, SymbolKind::Tokens);
            let positions: Vec<usize> = (1..=t.len()).filter(|p| mask >> (p - 1) & 1 == 1).collect();
            let s = t.extract(&positions).unwrap();
            prop_assert_eq!(s.len(), positions.len());
            for k in 0..positions.len() {
                let prefix = t.extract(&positions[..k]).unwrap();
                prop_assert_eq!(prefix.ranks(), &s.ranks()[..k]);
            }
        }
    }
}
