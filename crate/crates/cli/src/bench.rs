//! Timing runs on seeded random texts, printed as CSV.

use std::time::{Duration, Instant};

use lynsub::{LexTable, SymbolKind, Text};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::{BenchAlgo, Failure};

fn random_text(rng: &mut StdRng, n: usize, sigma: u32) -> Vec<i64> {
    (0..n)
        .map(|_| i64::from(rng.gen_range(1..=sigma)))
        .collect()
}

fn name(algo: BenchAlgo) -> &'static str {
    match algo {
        BenchAlgo::Basic => "basic",
        BenchAlgo::Fast => "fast",
        BenchAlgo::Online => "online",
        BenchAlgo::LexNaive => "lex-naive",
        BenchAlgo::LexFast => "lex-fast",
        BenchAlgo::Common => "common",
    }
}

/// Runs `algo` once and returns the elapsed time with the visited and pruned
/// node counts where the algorithm reports them.
fn measure(algo: BenchAlgo, rng: &mut StdRng, n: usize, sigma: u32) -> (Duration, u64, u64) {
    let raw = random_text(rng, n, sigma);
    if algo == BenchAlgo::Common {
        let other = random_text(rng, n, sigma);
        let (x, y) = Text::normalize_pair(&raw, &other, SymbolKind::Tokens);
        let start = Instant::now();
        let r = lynsub::longest_common_lyndon(&x, &y);
        return (start.elapsed(), r.stats.nodes_visited, r.stats.nodes_pruned);
    }
    let t = Text::normalize(&raw, SymbolKind::Tokens);
    let start = Instant::now();
    let (visited, pruned) = match algo {
        BenchAlgo::Basic => {
            let s = lynsub::longest_lyndon_basic(&t).stats;
            (s.nodes_visited, s.nodes_pruned)
        }
        BenchAlgo::Fast => {
            let s = lynsub::longest_lyndon_fast(&t).stats;
            (s.nodes_visited, s.nodes_pruned)
        }
        BenchAlgo::Online => {
            let mut online = lynsub::OnlineLyndon::new(t.sigma());
            for &c in t.ranks() {
                online
                    .push(c)
                    .expect("normalized ranks are in the alphabet");
            }
            (online.stats().nodes_created, 0)
        }
        BenchAlgo::LexNaive => {
            let d = lynsub::lex_smallest_rows_naive(&t);
            std::hint::black_box(d.len());
            (0, 0)
        }
        BenchAlgo::LexFast => {
            let d = lynsub::lex_smallest_rows_fast(&t);
            (d.trie().len() as u64, 0)
        }
        BenchAlgo::Common => unreachable!("handled above"),
    };
    (start.elapsed(), visited, pruned)
}

/// One CSV row per length: the fastest of `reps` runs on fresh texts.
pub fn run(
    algo: BenchAlgo,
    ns: &[usize],
    sigma: u32,
    seed: u64,
    reps: usize,
) -> Result<(), Failure> {
    if sigma == 0 || reps == 0 {
        return Err(Failure::Input("--sigma and --reps must be positive".into()));
    }
    let mut rng = StdRng::seed_from_u64(seed);
    println!("n,sigma,algo,elapsed_ns,nodes_visited,nodes_pruned");
    for &n in ns {
        let (elapsed, visited, pruned) = (0..reps)
            .map(|_| measure(algo, &mut rng, n, sigma))
            .min_by_key(|m| m.0)
            .expect("reps > 0");
        println!(
            "{n},{sigma},{},{},{visited},{pruned}",
            name(algo),
            elapsed.as_nanos()
        );
    }
    Ok(())
}
