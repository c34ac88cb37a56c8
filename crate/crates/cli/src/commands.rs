use std::collections::BTreeMap;
use std::time::Instant;

use lynsub::lex::LexTable;
use lynsub::oracle::leftmost_embedding;
use lynsub::{LexString, Text};

use crate::input::{self, RawInput};
use crate::report::{check_witness, emit, render, Factor, LengthResult, RunReport};
use crate::{Failure, InputArgs, LyndonAlgo, PairArgs, TableAlgo};

fn base(command: &'static str, raw: &RawInput) -> RunReport {
    RunReport {
        command,
        input: raw.name.clone(),
        input_digest: input::digest(&[&raw.bytes]),
        ..Default::default()
    }
}

fn length_result(t: &Text, len: usize, s: &LexString) -> Result<LengthResult, Failure> {
    let string = render(t, s);
    let positions = match &string {
        None => None,
        Some(rendered) => {
            let p = leftmost_embedding(t.ranks(), s.ranks())
                .ok_or_else(|| Failure::Mismatch(format!("{rendered:?} does not embed")))?;
            check_witness(t, &p, rendered)?;
            Some(p)
        }
    };
    Ok(LengthResult {
        length: len,
        string,
        positions,
    })
}

pub fn lex_smallest(
    args: &InputArgs,
    length: Option<usize>,
    algo: TableAlgo,
) -> Result<(), Failure> {
    for raw in input::read_inputs(&args.files)? {
        let t = input::text(&raw, args.tokens)?;
        let start = Instant::now();
        let (cells, trie_nodes): (Vec<LexString>, Option<usize>) = match algo {
            TableAlgo::Naive => {
                let d = lynsub::lex_smallest_rows_naive(&t);
                ((1..=t.len()).map(|l| d.cell(t.len(), l)).collect(), None)
            }
            TableAlgo::Fast => {
                let d = lynsub::lex_smallest_rows_fast(&t);
                (
                    (1..=t.len()).map(|l| d.cell(t.len(), l)).collect(),
                    Some(d.trie().len()),
                )
            }
        };
        let elapsed = start.elapsed();
        let mut report = base("lex-smallest", &raw);
        report.algorithm = Some(match algo {
            TableAlgo::Naive => "naive",
            TableAlgo::Fast => "fast",
        });
        report.elapsed_ns = elapsed.as_nanos();
        if let Some(nodes) = trie_nodes {
            report.counters.insert("trie_nodes", nodes as u64);
        }
        match length {
            Some(l) => {
                if l == 0 || l > t.len() {
                    return Err(Failure::Input(format!(
                        "--length {l} outside [1..{}]",
                        t.len()
                    )));
                }
                let r = length_result(&t, l, &cells[l - 1])?;
                report.length = Some(l);
                report.string = r.string;
                report.positions = r.positions;
            }
            None => {
                let results = cells
                    .iter()
                    .enumerate()
                    .map(|(k, s)| length_result(&t, k + 1, s))
                    .collect::<Result<_, _>>()?;
                report.results = Some(results);
            }
        }
        emit(&report);
    }
    Ok(())
}

pub fn most_competitive(args: &InputArgs, length: usize) -> Result<(), Failure> {
    for raw in input::read_inputs(&args.files)? {
        let t = input::text(&raw, args.tokens)?;
        let start = Instant::now();
        let positions = lynsub::most_competitive(&t, length)?;
        let elapsed = start.elapsed();
        let s = t.extract(positions.as_slice())?;
        let mut report = base("most-competitive", &raw);
        report.algorithm = Some("stack");
        report.length = Some(length);
        report.string = Some(t.render(&s));
        report.positions = Some(positions.into_vec());
        report.elapsed_ns = elapsed.as_nanos();
        emit(&report);
    }
    Ok(())
}

fn read_pair(pair: &PairArgs) -> Result<(RawInput, RawInput, Text, Text), Failure> {
    let (rx, ry) = (
        input::read_one(&pair.x_file)?,
        input::read_one(&pair.y_file)?,
    );
    let (sx, sy) = (
        input::symbols(&rx, pair.tokens)?,
        input::symbols(&ry, pair.tokens)?,
    );
    let (x, y) = Text::normalize_pair(&sx, &sy, input::kind(pair.tokens));
    Ok((rx, ry, x, y))
}

fn pair_base(command: &'static str, rx: &RawInput, ry: &RawInput) -> RunReport {
    RunReport {
        command,
        input: format!("{},{}", rx.name, ry.name),
        input_digest: input::digest(&[&rx.bytes, &ry.bytes]),
        ..Default::default()
    }
}

pub fn lcls(pair: &PairArgs) -> Result<(), Failure> {
    let (rx, ry, x, y) = read_pair(pair)?;
    let start = Instant::now();
    let per_length = lynsub::lex_smallest_common(&x, &y);
    let elapsed = start.elapsed();
    let mut report = pair_base("lcls", &rx, &ry);
    report.algorithm = Some("cube");
    report.elapsed_ns = elapsed.as_nanos();
    let mut results = Vec::with_capacity(per_length.len());
    for (k, s) in per_length.iter().enumerate() {
        let string = render(&x, s);
        if !s.is_bottom() && leftmost_embedding(y.ranks(), s.ranks()).is_none() {
            return Err(Failure::Mismatch(format!(
                "{:?} is not a subsequence of Y",
                string
            )));
        }
        results.push(LengthResult {
            length: k + 1,
            positions: None,
            ..length_result(&x, k + 1, s)?
        });
    }
    report.results = Some(results);
    emit(&report);
    Ok(())
}

pub fn longest_lyndon(args: &InputArgs, algo: LyndonAlgo) -> Result<(), Failure> {
    for raw in input::read_inputs(&args.files)? {
        let t = input::text(&raw, args.tokens)?;
        let mut report = base("longest-lyndon", &raw);
        if t.is_empty() {
            report.length = Some(0);
            report.positions = Some(vec![]);
            report.witness = Some(String::new());
            emit(&report);
            continue;
        }
        let start = Instant::now();
        let (result, name) = match algo {
            LyndonAlgo::Basic => (lynsub::longest_lyndon_basic(&t), "basic"),
            _ => (lynsub::longest_lyndon_fast(&t), "fast"),
        };
        report.elapsed_ns = start.elapsed().as_nanos();
        let witness = t.render(&t.extract(result.positions.as_slice())?);
        check_witness(&t, result.positions.as_slice(), &witness)?;
        report.algorithm = Some(name);
        report.length = Some(result.length);
        report.witness = Some(witness);
        report.positions = Some(result.positions.into_vec());
        let s = result.stats;
        report.counters = BTreeMap::from([
            ("nodes_visited", s.nodes_visited),
            ("nodes_pruned", s.nodes_pruned),
            ("prune_updates", s.prune_updates),
            ("rmq_queries", s.rmq_queries),
            ("successor_queries", s.successor_queries),
        ]);
        emit(&report);
    }
    Ok(())
}

pub fn common_lyndon(pair: &PairArgs) -> Result<(), Failure> {
    let (rx, ry, x, y) = read_pair(pair)?;
    let start = Instant::now();
    let r = lynsub::longest_common_lyndon(&x, &y);
    let elapsed = start.elapsed();
    let witness = x.render(&x.extract(r.x_positions.as_slice())?);
    check_witness(&x, r.x_positions.as_slice(), &witness)?;
    check_witness(&y, r.y_positions.as_slice(), &witness)?;
    let mut report = pair_base("common-lyndon", &rx, &ry);
    report.algorithm = Some("dominance-dfs");
    report.length = Some(r.length);
    report.witness = Some(witness);
    report.positions = Some(r.x_positions.into_vec());
    report.y_positions = Some(r.y_positions.into_vec());
    report.elapsed_ns = elapsed.as_nanos();
    report.counters = BTreeMap::from([
        ("nodes_visited", r.stats.nodes_visited),
        ("nodes_pruned", r.stats.nodes_pruned),
        ("pair_insertions", r.stats.insertions),
    ]);
    emit(&report);
    Ok(())
}

pub fn factorize(args: &InputArgs) -> Result<(), Failure> {
    for raw in input::read_inputs(&args.files)? {
        let t = input::text(&raw, args.tokens)?;
        let start = Instant::now();
        let spans = lynsub::duval_factorize(&t);
        let elapsed = start.elapsed();
        let mut report = base("factorize", &raw);
        report.algorithm = Some("duval");
        report.elapsed_ns = elapsed.as_nanos();
        let spell = |a: usize, b: usize| -> Result<String, Failure> {
            Ok(t.render(&t.extract(&(a..=b).collect::<Vec<_>>())?))
        };
        report.factors = Some(
            spans
                .iter()
                .map(|&(start, end)| {
                    Ok(Factor {
                        start,
                        end,
                        factor: spell(start, end)?,
                    })
                })
                .collect::<Result<_, Failure>>()?,
        );
        if let Ok((a, b)) = lynsub::longest_lyndon_substring(&t) {
            let positions: Vec<usize> = (a..=b).collect();
            report.length = Some(b + 1 - a);
            report.witness = Some(spell(a, b)?);
            report.positions = Some(positions);
        }
        emit(&report);
    }
    Ok(())
}
