use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    /// A caller broke a documented precondition.
    #[error("contract violation: {0}")]
    Contract(String),

    #[error("node already has a child labelled {label}")]
    DuplicateEdge { label: u32 },

    #[error("input of length {len} exceeds the oracle limit of {limit}")]
    OracleTooLarge { len: usize, limit: usize },

    #[error("character {rank} is outside the declared alphabet [1..{sigma}]")]
    OutOfAlphabet { rank: u32, sigma: u32 },

    #[error("online trie exceeded the node cap of {cap}")]
    NodeCap { cap: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
