//! Streaming `longest-lyndon --algo online`: one JSON line per consumed
//! character, then a summary report per input.

use std::collections::BTreeMap;
use std::fs::File;
use std::io::{self, BufRead, BufReader, Read};
use std::time::Instant;

use lynsub::{OnlineLyndon, Rank};
use serde::Serialize;

use crate::report::{emit, RunReport};
use crate::{Failure, InputArgs};

#[derive(Serialize)]
struct Step {
    position: usize,
    symbol: String,
    length: usize,
}

/// Maps input symbols onto `[1..σ]` without seeing the whole text.
enum Alphabet {
    /// Every byte value; rank is `byte + 1`.
    AllBytes,
    /// The sorted distinct bytes of `--alphabet`.
    Bytes(Vec<u8>),
    /// Tokens are already ranks in `[1..σ]`.
    Tokens(u32),
}

impl Alphabet {
    fn new(tokens: bool, alphabet: Option<&str>, sigma: Option<u32>) -> Result<Self, Failure> {
        match (tokens, alphabet, sigma) {
            (true, Some(_), _) => Err(Failure::Input(
                "--alphabet applies to byte input only".into(),
            )),
            (true, None, Some(0)) => Err(Failure::Input("--sigma must be positive".into())),
            (true, None, Some(s)) => Ok(Alphabet::Tokens(s)),
            (true, None, None) => Err(Failure::Input(
                "--tokens with --algo online requires --sigma".into(),
            )),
            (false, _, Some(_)) => {
                Err(Failure::Input("--sigma applies to token input only".into()))
            }
            (false, None, None) => Ok(Alphabet::AllBytes),
            (false, Some(a), None) => {
                let mut bytes = a.as_bytes().to_vec();
                bytes.sort_unstable();
                bytes.dedup();
                if bytes.is_empty() {
                    return Err(Failure::Input("--alphabet is empty".into()));
                }
                Ok(Alphabet::Bytes(bytes))
            }
        }
    }

    fn sigma(&self) -> usize {
        match self {
            Alphabet::AllBytes => 256,
            Alphabet::Bytes(b) => b.len(),
            Alphabet::Tokens(s) => *s as usize,
        }
    }

    fn rank_of_byte(&self, b: u8) -> Result<Rank, Failure> {
        match self {
            Alphabet::Bytes(alpha) => alpha
                .binary_search(&b)
                .map(|k| k as Rank + 1)
                .map_err(|_| Failure::Input(format!("byte {:?} is not in --alphabet", b as char))),
            _ => Ok(Rank::from(b) + 1),
        }
    }

    fn render(&self, ranks: &[Rank]) -> String {
        match self {
            Alphabet::AllBytes => {
                String::from_utf8_lossy(&ranks.iter().map(|&r| (r - 1) as u8).collect::<Vec<_>>())
                    .into_owned()
            }
            Alphabet::Bytes(alpha) => String::from_utf8_lossy(
                &ranks
                    .iter()
                    .map(|&r| alpha[r as usize - 1])
                    .collect::<Vec<_>>(),
            )
            .into_owned(),
            Alphabet::Tokens(_) => ranks
                .iter()
                .map(|r| r.to_string())
                .collect::<Vec<_>>()
                .join(" "),
        }
    }
}

fn open(name: &str) -> io::Result<Box<dyn BufRead>> {
    Ok(if name == "-" {
        Box::new(BufReader::new(io::stdin()))
    } else {
        Box::new(BufReader::new(
            File::open(name).map_err(|e| io::Error::new(e.kind(), format!("{name}: {e}")))?,
        ))
    })
}

pub fn run(
    args: &InputArgs,
    node_cap: usize,
    alphabet: Option<&str>,
    sigma: Option<u32>,
) -> Result<(), Failure> {
    let alpha = Alphabet::new(args.tokens, alphabet, sigma)?;
    let stdin = ["-".to_owned()];
    let files = if args.files.is_empty() {
        &stdin[..]
    } else {
        &args.files[..]
    };
    for name in files {
        stream(name, &alpha, node_cap, args.tokens)?;
    }
    Ok(())
}

fn stream(name: &str, alpha: &Alphabet, node_cap: usize, tokens: bool) -> Result<(), Failure> {
    let reader = open(name)?;
    let mut online = OnlineLyndon::new(alpha.sigma()).with_node_cap(node_cap);
    let mut consumed = Vec::new();
    let mut raw = Vec::new();
    let start = Instant::now();
    let mut feed = |c: Rank, consumed: &mut Vec<Rank>| -> Result<(), Failure> {
        let length = online.push(c)?;
        consumed.push(c);
        emit(&Step {
            position: online.consumed(),
            symbol: alpha.render(&[c]),
            length,
        });
        Ok(())
    };
    if tokens {
        for line in reader.lines() {
            let line = line?;
            raw.extend_from_slice(line.as_bytes());
            raw.push(b'\n');
            for tok in line.split_whitespace() {
                let c: Rank = tok
                    .parse()
                    .ok()
                    .filter(|&c| c >= 1 && c as usize <= alpha.sigma())
                    .ok_or_else(|| {
                        Failure::Input(format!(
                            "token {tok:?} is not a rank in [1..{}]",
                            alpha.sigma()
                        ))
                    })?;
                feed(c, &mut consumed)?;
            }
        }
    } else {
        for b in reader.bytes() {
            let b = b?;
            raw.push(b);
            if b == b'\n' || b == b'\r' {
                continue;
            }
            feed(alpha.rank_of_byte(b)?, &mut consumed)?;
        }
    }
    let elapsed = start.elapsed();

    let len = online.longest();
    let positions = online
        .positions(len)
        .map(|p| p.into_vec())
        .unwrap_or_default();
    let witness = online
        .best(len)
        .map(|s| alpha.render(s.ranks()))
        .unwrap_or_default();
    let spelled: Vec<Rank> = positions.iter().map(|&p| consumed[p - 1]).collect();
    if alpha.render(&spelled) != witness {
        return Err(Failure::Mismatch(format!(
            "self-check failed: positions {positions:?} do not spell {witness:?}"
        )));
    }
    let stats = online.stats();
    emit(&RunReport {
        command: "longest-lyndon",
        input: name.to_owned(),
        input_digest: crate::input::digest(&[&raw]),
        algorithm: Some("online"),
        length: Some(len),
        witness: Some(witness),
        positions: Some(positions),
        elapsed_ns: elapsed.as_nanos(),
        counters: BTreeMap::from([
            ("nodes_created", stats.nodes_created),
            ("best_updates", stats.best_updates),
            ("events_issued", stats.events_issued),
            ("trie_nodes", online.node_count() as u64),
        ]),
        ..Default::default()
    });
    Ok(())
}
