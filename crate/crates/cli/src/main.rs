mod bench;
mod commands;
mod input;
mod online;
mod report;
mod verify;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(
    name = "lynsub",
    version,
    about = "Smallest and longest Lyndon subsequences"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
pub struct InputArgs {
    /// Input files; stdin when omitted or `-`
    pub files: Vec<String>,

    /// Read whitespace-separated integer tokens instead of bytes
    #[arg(long)]
    pub tokens: bool,
}

#[derive(Args, Clone)]
pub struct PairArgs {
    pub x_file: String,
    pub y_file: String,

    #[arg(long)]
    pub tokens: bool,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum TableAlgo {
    Naive,
    Fast,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum LyndonAlgo {
    Basic,
    Fast,
    Online,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    LexSmallest,
    MostCompetitive,
    Lcls,
    LongestLyndon,
    CommonLyndon,
    Factorize,
    All,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BenchAlgo {
    Basic,
    Fast,
    Online,
    LexNaive,
    LexFast,
    Common,
}

#[derive(Subcommand)]
enum Command {
    /// Lexicographically smallest subsequence of one or every length
    LexSmallest {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, conflicts_with = "all_lengths")]
        length: Option<usize>,
        /// Report every length 1..=n (the default without --length)
        #[arg(long)]
        all_lengths: bool,
        #[arg(long, value_enum, default_value = "fast")]
        algo: TableAlgo,
    },
    /// Smallest subsequence of a fixed length via the stack algorithm
    MostCompetitive {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        length: usize,
    },
    /// Lexicographically smallest common subsequence of every length
    Lcls {
        #[command(flatten)]
        pair: PairArgs,
    },
    /// Longest Lyndon subsequence
    LongestLyndon {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value = "fast")]
        algo: LyndonAlgo,
        /// Online mode: abort once the trie holds this many nodes
        #[arg(long, default_value_t = 20_000_000)]
        node_cap: usize,
        /// Online byte mode: the ordered alphabet (default: all 256 bytes)
        #[arg(long)]
        alphabet: Option<String>,
        /// Online token mode: tokens are ranks in [1..sigma]
        #[arg(long)]
        sigma: Option<u32>,
    },
    /// Longest common Lyndon subsequence of two inputs
    CommonLyndon {
        #[command(flatten)]
        pair: PairArgs,
    },
    /// Lyndon factorization and the longest Lyndon substring
    Factorize {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Exhaustive differential check against the brute-force oracle
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
        /// Longest string enumerated; pair suites enumerate all pairs up to it
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        #[arg(long, default_value_t = 2)]
        sigma: u32,
    },
    /// Timing runs on random texts, CSV on stdout
    Bench {
        #[arg(long, value_enum, default_value = "fast")]
        algo: BenchAlgo,
        /// Comma-separated text lengths
        #[arg(long, value_delimiter = ',', default_value = "50,100,200")]
        n: Vec<usize>,
        #[arg(long, default_value_t = 4)]
        sigma: u32,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 3)]
        reps: usize,
    },
}

/// Process outcome other than success, mapped onto the exit code.
#[derive(Debug)]
pub enum Failure {
    Input(String),
    Mismatch(String),
    ResourceCap(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Input(_) => 1,
            Failure::Mismatch(_) => 2,
            Failure::ResourceCap(_) => 3,
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<lynsub::Error> for Failure {
    fn from(e: lynsub::Error) -> Self {
        match e {
            lynsub::Error::NodeCap { .. } => Failure::ResourceCap(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

impl From<report::SelfCheckFailed> for Failure {
    fn from(e: report::SelfCheckFailed) -> Self {
        Failure::Mismatch(format!("self-check failed: {}", e.0))
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::LexSmallest {
            input,
            length,
            all_lengths: _,
            algo,
        } => commands::lex_smallest(&input, length, algo),
        Command::MostCompetitive { input, length } => commands::most_competitive(&input, length),
        Command::Lcls { pair } => commands::lcls(&pair),
        Command::LongestLyndon {
            input,
            algo: LyndonAlgo::Online,
            node_cap,
            alphabet,
            sigma,
        } => online::run(&input, node_cap, alphabet.as_deref(), sigma),
        Command::LongestLyndon { input, algo, .. } => commands::longest_lyndon(&input, algo),
        Command::CommonLyndon { pair } => commands::common_lyndon(&pair),
        Command::Factorize { input } => commands::factorize(&input),
        Command::Verify {
            suite,
            max_n,
            sigma,
        } => verify::run(suite, max_n, sigma),
        Command::Bench {
            algo,
            n,
            sigma,
            seed,
            reps,
        } => bench::run(algo, &n, sigma, seed, reps),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            let (Failure::Input(msg) | Failure::Mismatch(msg) | Failure::ResourceCap(msg)) = &f;
            eprintln!("lynsub: {msg}");
            ExitCode::from(f.code())
        }
    }
}
