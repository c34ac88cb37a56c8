//! Exhaustive self-check of every algorithm against the brute-force oracle.

use rayon::prelude::*;
use serde::Serialize;

use lynsub::oracle::{self, CommonAnswer, CommonMode, MAX_COMMON, MAX_SINGLE};
use lynsub::{LexString, LexTable, SymbolKind, Text};

use crate::report::emit;
use crate::{Failure, Suite};

/// Upper bound on enumerated cases per suite, to keep `verify` interactive.
const MAX_CASES: u64 = 50_000_000;

#[derive(Serialize)]
struct SuiteReport {
    command: &'static str,
    suite: &'static str,
    max_n: usize,
    sigma: u32,
    cases: usize,
    mismatches: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    first_mismatch: Option<String>,
}

type Check = Option<String>;

/// All non-empty strings over `[1..σ]` of length at most `max_n`.
fn all_strings(max_n: usize, sigma: u32) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut layer: Vec<Vec<i64>> = vec![Vec::new()];
    for _ in 0..max_n {
        layer = layer
            .iter()
            .flat_map(|s| {
                (1..=i64::from(sigma)).map(move |c| {
                    let mut t = s.clone();
                    t.push(c);
                    t
                })
            })
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

fn count_strings(max_n: usize, sigma: u32) -> u64 {
    (1..=max_n as u32).fold(0u64, |acc, k| {
        acc.saturating_add(u64::from(sigma).saturating_pow(k))
    })
}

fn single(raw: &[i64]) -> Text {
    Text::normalize(raw, SymbolKind::Tokens)
}

fn lex_smallest(raw: &[i64]) -> Check {
    let t = single(raw);
    let expected = oracle::oracle_lex_per_length(&t).ok()?;
    let naive = lynsub::lex_smallest_rows_naive(&t);
    let fast = lynsub::lex_smallest_rows_fast(&t);
    for (k, want) in expected.iter().enumerate() {
        let l = k + 1;
        for (name, got) in [
            ("naive", naive.cell(t.len(), l)),
            ("fast", fast.cell(t.len(), l)),
        ] {
            if &got != want {
                return Some(format!(
                    "{raw:?} length {l}: {name} gave {got}, oracle {want}"
                ));
            }
        }
    }
    None
}

fn most_competitive(raw: &[i64]) -> Check {
    let t = single(raw);
    let expected = oracle::oracle_lex_per_length(&t).ok()?;
    for (k, want) in expected.iter().enumerate() {
        let got = lynsub::most_competitive(&t, k + 1)
            .and_then(|p| t.extract(p.as_slice()))
            .map_err(|e| e.to_string());
        if got.as_ref() != Ok(want) {
            return Some(format!(
                "{raw:?} length {}: got {got:?}, oracle {want}",
                k + 1
            ));
        }
    }
    None
}

fn longest_lyndon(raw: &[i64]) -> Check {
    let t = single(raw);
    let n2 = (t.len() * t.len()) as u64;
    let (len, want) = oracle::oracle_longest_lyndon(&t).ok()?;
    for (name, r) in [
        ("basic", lynsub::longest_lyndon_basic(&t)),
        ("fast", lynsub::longest_lyndon_fast(&t)),
    ] {
        let got = t.extract(r.positions.as_slice()).ok();
        if r.length != len || got.as_ref() != Some(&want) {
            return Some(format!("{raw:?}: {name} gave {:?}, oracle {want}", got));
        }
        if r.stats.prune_updates > n2 {
            return Some(format!(
                "{raw:?}: {name} made {} prune updates",
                r.stats.prune_updates
            ));
        }
    }
    let reports = lynsub::longest_lyndon_online(&t);
    if reports.last() != Some(&len) {
        return Some(format!(
            "{raw:?}: online reported {:?}, oracle {len}",
            reports.last()
        ));
    }
    None
}

fn factorize(raw: &[i64]) -> Check {
    let t = single(raw);
    let spans = lynsub::duval_factorize(&t);
    let word = |a: usize, b: usize| LexString::from_ranks(t.ranks()[a - 1..b].to_vec());
    let mut next = 1;
    let mut prev: Option<LexString> = None;
    for &(a, b) in &spans {
        let w = word(a, b);
        if a != next
            || b < a
            || !lynsub::is_lyndon(&w).unwrap_or(false)
            || prev.as_ref().is_some_and(|p| p < &w)
        {
            return Some(format!("{raw:?}: bad factorization {spans:?}"));
        }
        next = b + 1;
        prev = Some(w);
    }
    if next != t.len() + 1 {
        return Some(format!(
            "{raw:?}: factorization {spans:?} does not cover the text"
        ));
    }
    let mut best = (1, 1);
    for a in 1..=t.len() {
        for b in a..=t.len() {
            if b - a > best.1 - best.0 && lynsub::is_lyndon(&word(a, b)).unwrap_or(false) {
                best = (a, b);
            }
        }
    }
    match lynsub::longest_lyndon_substring(&t) {
        Ok(got) if got == best => None,
        got => Some(format!(
            "{raw:?}: longest Lyndon substring {got:?}, expected {best:?}"
        )),
    }
}

fn lcls(x: &[i64], y: &[i64]) -> Check {
    let (tx, ty) = Text::normalize_pair(x, y, SymbolKind::Tokens);
    let Ok(CommonAnswer::PerLength(want)) =
        oracle::oracle_common(&tx, &ty, CommonMode::LexPerLength)
    else {
        return None;
    };
    let got = lynsub::lex_smallest_common(&tx, &ty);
    (got != want).then(|| format!("{x:?} {y:?}: got {got:?}, oracle {want:?}"))
}

fn common_lyndon(x: &[i64], y: &[i64]) -> Check {
    let (tx, ty) = Text::normalize_pair(x, y, SymbolKind::Tokens);
    let Ok(CommonAnswer::LongestLyndon(len, want)) =
        oracle::oracle_common(&tx, &ty, CommonMode::LongestLyndon)
    else {
        return None;
    };
    let r = lynsub::longest_common_lyndon(&tx, &ty);
    let gx = tx.extract(r.x_positions.as_slice()).ok();
    let gy = ty.extract(r.y_positions.as_slice()).ok();
    if r.length != len || gx.as_ref() != Some(&want) || gy.as_ref() != Some(&want) {
        return Some(format!("{x:?} {y:?}: got {gx:?}/{gy:?}, oracle {want}"));
    }
    let n = tx.len().max(ty.len()) as u64;
    (r.stats.insertions > n * n * n)
        .then(|| format!("{x:?} {y:?}: {} insertions", r.stats.insertions))
}

fn summarize(suite: &'static str, max_n: usize, sigma: u32, results: Vec<Check>) -> SuiteReport {
    let cases = results.len();
    let failures: Vec<String> = results.into_iter().flatten().collect();
    SuiteReport {
        command: "verify",
        suite,
        max_n,
        sigma,
        cases,
        mismatches: failures.len(),
        first_mismatch: failures.into_iter().next(),
    }
}

fn run_single(
    name: &'static str,
    check: fn(&[i64]) -> Check,
    max_n: usize,
    sigma: u32,
) -> Result<SuiteReport, Failure> {
    if max_n > MAX_SINGLE {
        return Err(Failure::Input(format!(
            "--max-n {max_n} exceeds the oracle limit {MAX_SINGLE}"
        )));
    }
    if count_strings(max_n, sigma) > MAX_CASES {
        return Err(Failure::Input(format!(
            "{name}: more than {MAX_CASES} cases"
        )));
    }
    let corpus = all_strings(max_n, sigma);
    let results = corpus.par_iter().map(|s| check(s)).collect();
    Ok(summarize(name, max_n, sigma, results))
}

fn run_pairs(
    name: &'static str,
    check: fn(&[i64], &[i64]) -> Check,
    max_n: usize,
    sigma: u32,
) -> Result<SuiteReport, Failure> {
    if max_n > MAX_COMMON {
        return Err(Failure::Input(format!(
            "--max-n {max_n} exceeds the pair oracle limit {MAX_COMMON}"
        )));
    }
    let count = count_strings(max_n, sigma);
    if count.saturating_mul(count) > MAX_CASES {
        return Err(Failure::Input(format!(
            "{name}: more than {MAX_CASES} pairs"
        )));
    }
    let corpus = all_strings(max_n, sigma);
    let results = corpus
        .par_iter()
        .flat_map_iter(|x| corpus.iter().map(move |y| check(x, y)))
        .collect();
    Ok(summarize(name, max_n, sigma, results))
}

pub fn run(suite: Suite, max_n: usize, sigma: u32) -> Result<(), Failure> {
    if sigma == 0 {
        return Err(Failure::Input("--sigma must be positive".into()));
    }
    let wanted = |s: Suite| suite == Suite::All || suite == s;
    let mut reports = Vec::new();
    if wanted(Suite::LexSmallest) {
        reports.push(run_single("lex-smallest", lex_smallest, max_n, sigma)?);
    }
    if wanted(Suite::MostCompetitive) {
        reports.push(run_single(
            "most-competitive",
            most_competitive,
            max_n,
            sigma,
        )?);
    }
    if wanted(Suite::LongestLyndon) {
        reports.push(run_single("longest-lyndon", longest_lyndon, max_n, sigma)?);
    }
    if wanted(Suite::Factorize) {
        reports.push(run_single("factorize", factorize, max_n, sigma)?);
    }
    if wanted(Suite::Lcls) {
        reports.push(run_pairs("lcls", lcls, max_n, sigma)?);
    }
    if wanted(Suite::CommonLyndon) {
        reports.push(run_pairs("common-lyndon", common_lyndon, max_n, sigma)?);
    }
    let mut mismatches = 0;
    for r in &reports {
        emit(r);
        mismatches += r.mismatches;
    }
    if mismatches > 0 {
        return Err(Failure::Mismatch(format!(
            "{mismatches} mismatches against the oracle"
        )));
    }
    Ok(())
}
