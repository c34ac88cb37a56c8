use std::collections::BTreeMap;
use std::io::Write;

use lynsub::{LexString, Text};
use serde::Serialize;

/// One line of JSON output. Fields that do not apply to a command are
/// omitted.
#[derive(Debug, Default, Serialize)]
pub struct RunReport {
    pub command: &'static str,
    pub input: String,
    pub input_digest: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub algorithm: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub length: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub string: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub positions: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub y_positions: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub results: Option<Vec<LengthResult>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub factors: Option<Vec<Factor>>,
    pub elapsed_ns: u128,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub counters: BTreeMap<&'static str, u64>,
}

#[derive(Debug, Serialize)]
pub struct LengthResult {
    pub length: usize,
    /// `null` when no subsequence of this length exists.
    pub string: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub positions: Option<Vec<usize>>,
}

#[derive(Debug, Serialize)]
pub struct Factor {
    pub start: usize,
    pub end: usize,
    pub factor: String,
}

#[derive(Debug)]
pub struct SelfCheckFailed(pub String);

/// Rendering of a rank string, `None` for `⊥`.
pub fn render(t: &Text, s: &LexString) -> Option<String> {
    (!s.is_bottom()).then(|| t.render(s))
}

/// Verifies that `positions` spell `expected` in `t`.
pub fn check_witness(t: &Text, positions: &[usize], expected: &str) -> Result<(), SelfCheckFailed> {
    match t.extract(positions) {
        Ok(s) if t.render(&s) == expected => Ok(()),
        Ok(s) => Err(SelfCheckFailed(format!(
            "positions {positions:?} spell {:?}, not {expected:?}",
            t.render(&s)
        ))),
        Err(e) => Err(SelfCheckFailed(e.to_string())),
    }
}

pub fn emit<T: Serialize>(value: &T) {
    let mut out = std::io::stdout().lock();
    serde_json::to_writer(&mut out, value).expect("stdout is writable");
    writeln!(out).expect("stdout is writable");
    out.flush().expect("stdout is writable");
}
