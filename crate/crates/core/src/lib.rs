//! Lexicographically smallest (common) subsequences of every length and
//! longest (common) Lyndon subsequences.
//!
//! Inputs are reduced to dense ranks by [`Text`]; all positions in the public
//! API are 1-based.

pub mod common;
mod error;
pub mod lex;
pub mod longest;
pub mod lyndon;
pub mod oracle;
pub mod succinct;
pub mod text;
pub mod trie;

pub use common::{longest_common_lyndon, CommonLyndonResult, DominanceList};
pub use error::{Error, Result};
pub use lex::{
    lex_smallest_common, lex_smallest_common_rows, lex_smallest_rows_fast, lex_smallest_rows_naive,
    most_competitive, CommonLexCube, LexTable, NaiveLexTable, TrieLexTable,
};
pub use longest::{
    longest_lyndon_basic, longest_lyndon_fast, longest_lyndon_online, LyndonResult, OnlineLyndon,
    TraversalStats,
};
pub use lyndon::{duval_factorize, is_lyndon, longest_lyndon_substring, PeriodState};
pub use text::{lex_compare, LexString, PositionSeq, Rank, SymbolKind, Text};
pub use trie::{NodeId, OrderTrie};
