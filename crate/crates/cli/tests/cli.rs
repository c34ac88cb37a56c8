use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn lynsub(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_lynsub"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary starts");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn lines(out: &Output) -> Vec<Value> {
    String::from_utf8(out.stdout.clone())
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).expect("every line is JSON"))
        .collect()
}

fn only(out: &Output) -> Value {
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    let mut v = lines(out);
    assert_eq!(v.len(), 1);
    v.pop().unwrap()
}

#[test]
fn longest_lyndon_fast_on_aba() {
    let v = only(&lynsub(&["longest-lyndon", "--algo", "fast"], "aba\n"));
    assert_eq!(v["length"], 2);
    assert_eq!(v["witness"], "ab");
    assert_eq!(v["positions"], serde_json::json!([1, 2]));
    assert_eq!(v["algorithm"], "fast");
    assert!(v["counters"]["nodes_visited"].as_u64().unwrap() > 0);
    assert_eq!(v["input_digest"].as_str().unwrap().len(), 64);
}

#[test]
fn longest_lyndon_algorithms_agree() {
    let text = "cbabcacbab";
    let want = only(&lynsub(&["longest-lyndon", "--algo", "basic"], text));
    for algo in ["fast", "online"] {
        let out = lynsub(&["longest-lyndon", "--algo", algo], text);
        let last = lines(&out).pop().unwrap();
        assert_eq!(last["length"], want["length"], "{algo}");
        assert_eq!(last["witness"], want["witness"], "{algo}");
    }
}

#[test]
fn lex_smallest_single_length() {
    let v = only(&lynsub(&["lex-smallest", "--length", "2"], "aba\n"));
    assert_eq!(v["string"], "aa");
    assert_eq!(v["positions"], serde_json::json!([1, 3]));
}

#[test]
fn lex_smallest_all_lengths_naive() {
    let v = only(&lynsub(
        &["lex-smallest", "--all-lengths", "--algo", "naive"],
        "cab",
    ));
    let strings: Vec<&str> = v["results"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["string"].as_str().unwrap())
        .collect();
    assert_eq!(strings, ["a", "ab", "cab"]);
}

#[test]
fn most_competitive_pops_from_the_start() {
    let v = only(&lynsub(&["most-competitive", "--length", "2"], "cab"));
    assert_eq!(v["string"], "ab");
    assert_eq!(v["positions"], serde_json::json!([2, 3]));
}

#[test]
fn pair_commands() {
    let dir = tempfile::tempdir().unwrap();
    let x = dir.path().join("x");
    let y = dir.path().join("y");
    std::fs::write(&x, "abcab\n").unwrap();
    std::fs::write(&y, "bacba\n").unwrap();
    let (x, y) = (x.to_str().unwrap(), y.to_str().unwrap());

    let v = only(&lynsub(&["lcls", x, y], ""));
    let strings: Vec<Value> = v["results"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["string"].clone())
        .collect();
    assert_eq!(
        strings,
        serde_json::json!(["a", "aa", "aba", null, null])
            .as_array()
            .unwrap()
            .clone()
    );

    let v = only(&lynsub(&["common-lyndon", x, y], ""));
    assert_eq!(v["length"], 3);
    assert_eq!(v["witness"], "acb");
    assert_eq!(v["positions"], serde_json::json!([1, 3, 5]));
    assert_eq!(v["y_positions"], serde_json::json!([2, 3, 4]));
}

#[test]
fn factorize_banana() {
    let v = only(&lynsub(&["factorize"], "banana\n"));
    let factors: Vec<&str> = v["factors"]
        .as_array()
        .unwrap()
        .iter()
        .map(|f| f["factor"].as_str().unwrap())
        .collect();
    assert_eq!(factors, ["b", "an", "an", "a"]);
    assert_eq!(v["witness"], "an");
}

#[test]
fn token_input() {
    let v = only(&lynsub(&["longest-lyndon", "--tokens"], "10 -3 7 -3 10\n"));
    assert_eq!(v["length"], 4);
    assert_eq!(v["witness"], "-3 7 -3 10");
}

#[test]
fn online_reports_every_prefix() {
    let out = lynsub(&["longest-lyndon", "--algo", "online"], "aba\n");
    assert!(out.status.success());
    let v = lines(&out);
    assert_eq!(v.len(), 4);
    let reported: Vec<u64> = v[..3]
        .iter()
        .map(|s| s["length"].as_u64().unwrap())
        .collect();
    assert_eq!(reported, [1, 2, 2]);
    assert_eq!(v[3]["witness"], "ab");
}

#[test]
fn online_alphabet_and_sigma() {
    let out = lynsub(
        &["longest-lyndon", "--algo", "online", "--alphabet", "ab"],
        "abz",
    );
    assert_eq!(out.status.code(), Some(1));
    let out = lynsub(&["longest-lyndon", "--algo", "online", "--tokens"], "1 2");
    assert_eq!(out.status.code(), Some(1));
    let out = lynsub(
        &[
            "longest-lyndon",
            "--algo",
            "online",
            "--tokens",
            "--sigma",
            "2",
        ],
        "1 2 1 2",
    );
    assert_eq!(lines(&out).pop().unwrap()["length"], 3);
}

#[test]
fn verify_longest_lyndon_exhaustively() {
    let out = lynsub(
        &[
            "verify",
            "--max-n",
            "10",
            "--sigma",
            "2",
            "--suite",
            "longest-lyndon",
        ],
        "",
    );
    let v = only(&out);
    assert_eq!(v["cases"], 2046);
    assert_eq!(v["mismatches"], 0);
}

#[test]
fn verify_all_suites_small() {
    let out = lynsub(&["verify", "--max-n", "4", "--sigma", "3"], "");
    let v = lines(&out);
    assert!(out.status.success());
    assert_eq!(v.len(), 6);
    assert!(v.iter().all(|s| s["mismatches"] == 0));
}

#[test]
fn exit_codes() {
    assert_eq!(
        lynsub(&["longest-lyndon", "--algo", "nope"], "")
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        lynsub(&["lex-smallest", "/no/such/file"], "").status.code(),
        Some(1)
    );
    assert_eq!(
        lynsub(&["lex-smallest", "--length", "9"], "abc")
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        lynsub(&["longest-lyndon", "--tokens"], "1 x").status.code(),
        Some(1)
    );
    assert_eq!(
        lynsub(&["verify", "--max-n", "40"], "").status.code(),
        Some(1)
    );
    let capped = lynsub(
        &["longest-lyndon", "--algo", "online", "--node-cap", "2"],
        "abab",
    );
    assert_eq!(capped.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&capped.stderr).contains("node cap"));
}

#[test]
fn bench_prints_csv() {
    let out = lynsub(
        &["bench", "--algo", "basic", "--n", "20,40", "--reps", "1"],
        "",
    );
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let rows: Vec<&str> = text.lines().collect();
    assert_eq!(
        rows[0],
        "n,sigma,algo,elapsed_ns,nodes_visited,nodes_pruned"
    );
    assert_eq!(rows.len(), 3);
    assert!(rows[2].starts_with("40,4,basic,"));
}
