use lynsub::lex::{lex_smallest_common_rows, LexTable};
use lynsub::oracle::{leftmost_embedding, oracle_common, CommonAnswer, CommonMode};
use lynsub::succinct::{PositionLists, RangeSuccessor, RmqIndex, WaveletTree};
use lynsub::*;
use proptest::prelude::*;
use rand::{rngs::StdRng, Rng, SeedableRng};

fn random_text(rng: &mut StdRng, max_n: usize, max_sigma: i64) -> (Vec<i64>, Text) {
    let n = rng.gen_range(1..=max_n);
    let sigma = rng.gen_range(1..=max_sigma);
    let raw: Vec<i64> = (0..n).map(|_| rng.gen_range(1..=sigma)).collect();
    let t = Text::normalize(&raw, SymbolKind::Tokens);
    (raw, t)
}

#[test]
fn naive_and_fast_tables_agree() {
    let mut rng = StdRng::seed_from_u64(11);
    for _ in 0..1000 {
        let (_, t) = random_text(&mut rng, 40, 5);
        let (naive, fast) = (lex_smallest_rows_naive(&t), lex_smallest_rows_fast(&t));
        let n = t.len();
        for i in 1..=n {
            for l in 1..=i {
                assert_eq!(naive.cell(i, l), fast.cell(i, l));
            }
        }
        assert!(fast.trie().len() <= 1 + n * (n + 1) / 2);
    }
}

#[test]
fn cube_is_monotone_and_bottom_above_lcs() {
    let mut rng = StdRng::seed_from_u64(12);
    for _ in 0..200 {
        let (rx, _) = random_text(&mut rng, 9, 3);
        let (ry, _) = random_text(&mut rng, 9, 3);
        let (x, y) = Text::normalize_pair(&rx, &ry, SymbolKind::Tokens);
        let cube = lex_smallest_common_rows(&x, &y);
        for l in 1..=cube.max_len() {
            for i in 1..=x.len() {
                for j in 1..=y.len() {
                    let here = cube.cell(l, i, j);
                    assert!(here <= cube.cell(l, i - 1, j));
                    assert!(here <= cube.cell(l, i, j - 1));
                    let lcs = lcs_len(&x.ranks()[..i], &y.ranks()[..j]);
                    assert_eq!(here.is_bottom(), lcs < l);
                }
            }
        }
    }
}

fn lcs_len(a: &[Rank], b: &[Rank]) -> usize {
    let mut dp = vec![vec![0usize; b.len() + 1]; a.len() + 1];
    for i in 1..=a.len() {
        for j in 1..=b.len() {
            dp[i][j] = if a[i - 1] == b[j - 1] {
                dp[i - 1][j - 1] + 1
            } else {
                dp[i - 1][j].max(dp[i][j - 1])
            };
        }
    }
    dp[a.len()][b.len()]
}

#[test]
fn common_lyndon_random_pairs() {
    let mut rng = StdRng::seed_from_u64(13);
    for _ in 0..500 {
        let (rx, _) = random_text(&mut rng, 10, 3);
        let (ry, _) = random_text(&mut rng, 10, 3);
        let (x, y) = Text::normalize_pair(&rx, &ry, SymbolKind::Tokens);
        let CommonAnswer::LongestLyndon(len, _) =
            oracle_common(&x, &y, CommonMode::LongestLyndon).unwrap()
        else {
            unreachable!()
        };
        let r = longest_common_lyndon(&x, &y);
        assert_eq!(r.length, len, "{rx:?} {ry:?}");
        let wx = x.extract(r.x_positions.as_slice()).unwrap();
        assert_eq!(wx, y.extract(r.y_positions.as_slice()).unwrap());
        if len > 0 {
            assert!(is_lyndon(&wx).unwrap());
        }
        let n = x.len().max(y.len()) as u64;
        assert!(r.stats.insertions <= n * n * n);
    }
}

#[test]
fn offline_witnesses_embed_and_are_lyndon() {
    let mut rng = StdRng::seed_from_u64(14);
    for _ in 0..300 {
        let (_, t) = random_text(&mut rng, 60, 6);
        for r in [longest_lyndon_basic(&t), longest_lyndon_fast(&t)] {
            let w = t.extract(r.positions.as_slice()).unwrap();
            assert_eq!(w.len(), r.length);
            assert!(is_lyndon(&w).unwrap());
            assert!(leftmost_embedding(t.ranks(), w.ranks()).is_some());
        }
    }
}

#[test]
fn online_best_matches_fast_witness() {
    let mut rng = StdRng::seed_from_u64(15);
    for _ in 0..100 {
        let (_, t) = random_text(&mut rng, 40, 4);
        let mut online = OnlineLyndon::new(t.sigma());
        for &c in t.ranks() {
            online.push(c).unwrap();
        }
        let fast = longest_lyndon_fast(&t);
        let w = t.extract(fast.positions.as_slice()).unwrap();
        assert_eq!(online.longest(), fast.length);
        assert_eq!(online.best(fast.length), Some(w.clone()));
        let pos = online.positions(fast.length).unwrap();
        assert_eq!(t.extract(pos.as_slice()).unwrap(), w);
    }
}

proptest! {
    #[test]
    fn successor_backends_agree(raw in proptest::collection::vec(1i64..=8, 0..64), i in 1usize..66, span in 0usize..66, b in 0u32..10) {
        let t = Text::normalize(&raw, SymbolKind::Tokens);
        let j = (i + span).saturating_sub(1).min(t.len());
        let (wt, lists, rmq) = (WaveletTree::new(&t), PositionLists::new(&t), RmqIndex::new(&t));
        let got = wt.range_successor(i, j, b);
        prop_assert_eq!(got, lists.range_successor(i, j, b));
        // a maximum no larger than b rules out any successor
        if let Some(m) = rmq.range_max_pos(i, j) {
            if t.at(m) <= b {
                prop_assert_eq!(got, None);
            }
        }
    }
}
