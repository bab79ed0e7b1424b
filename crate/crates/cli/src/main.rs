use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;
mod output;

use output::Failure;

#[derive(Parser, Debug)]
#[command(name = "subword", version, about = "Subword occurrences, maximal occurrence counts and subword entropy of binary words")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Smallest run-tuple total memoized by the run-length counter.
    #[arg(long, global = true, env = "SUBWORD_CACHE_THRESHOLD", default_value_t = subword_core::occurrence::DEFAULT_CACHE_THRESHOLD)]
    pub cache_threshold: usize,
    /// Cap on M * R * |w| * |v| for occurrence tables.
    #[arg(long, global = true, env = "SUBWORD_SERIES_BUDGET", default_value_t = subword_core::genfunc::DEFAULT_SERIES_BUDGET)]
    pub series_budget: u64,
    /// Longest v accepted by the generating function construction.
    #[arg(long, global = true, env = "SUBWORD_MAX_V_LEN", default_value_t = subword_core::genfunc::DEFAULT_MAX_V_LEN)]
    pub max_v_len: usize,
    /// Indent JSON output.
    #[arg(long, global = true)]
    pub pretty: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Count occurrences of SUBWORD in WORD.
    Occ {
        word: String,
        subword: String,
        #[arg(long, value_enum, default_value_t = Algo::Dp)]
        algo: Algo,
    },
    /// Most frequent subwords of WORD and their count.
    Maxocc {
        word: String,
        #[arg(long, value_enum, default_value_t = Engine::Prefix)]
        engine: Engine,
        /// Only scan subword lengths up to half the word (unproven shortcut).
        #[arg(long)]
        half_length: bool,
        #[arg(long, default_value_t = subword_core::entropy::DEFAULT_MAX_WITNESSES)]
        max_witnesses: usize,
    },
    /// Lower and upper bounds on maxocc over words of length N.
    Bounds {
        n: usize,
        /// Alphabet size used by the lower bound.
        #[arg(long, short, default_value_t = 2)]
        k: u32,
    },
    /// Exhaustive search for the words of length N with the fewest maximal occurrences.
    Minentropy {
        n: usize,
        /// Worker threads, 0 for all cores.
        #[arg(long, default_value_t = 0)]
        threads: usize,
        #[arg(long)]
        checkpoint: Option<PathBuf>,
        /// Continue from the checkpoint file if it exists.
        #[arg(long, requires = "checkpoint")]
        resume: bool,
        /// Stop after this many seconds, writing the checkpoint, and exit with status 3.
        #[arg(long)]
        timeout: Option<f64>,
        /// Disable pruning with witnesses from previous words.
        #[arg(long)]
        no_hints: bool,
        /// Scan every word instead of one per symmetry class.
        #[arg(long)]
        no_symmetry: bool,
        #[arg(long, value_enum, default_value_t = Engine::Prefix)]
        engine: Engine,
        #[arg(long, default_value_t = subword_core::search::DEFAULT_CHUNK_SIZE)]
        chunk_size: u64,
        #[arg(long, default_value_t = subword_core::search::DEFAULT_MAX_N)]
        max_n: usize,
    },
    /// Local search for a low-maxocc word of length N.
    Heuristic {
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Starting word; random if omitted.
        #[arg(long)]
        start: Option<String>,
        #[arg(long, default_value_t = 0.5)]
        max_flip_rate: f64,
        #[arg(long, default_value_t = 20)]
        attempts: usize,
    },
    /// Best single-letter insertion into the given words, all of the same length.
    Extend {
        words: Vec<String>,
        /// Read words from a file, one per line; blank lines and '#' comments are skipped.
        #[arg(long)]
        from_file: Option<PathBuf>,
    },
    /// Generating function of occ(w^m, v^r) as a reduced rational function.
    Gf {
        w: String,
        v: String,
        /// Check the series expansion against direct counts on a SIZE x SIZE grid.
        #[arg(long)]
        verify: bool,
        /// Grid size used by --verify.
        #[arg(long, default_value_t = 12)]
        verify_size: usize,
        /// Also output the coefficients for m <= M, r <= R.
        #[arg(long, num_args = 2, value_names = ["M", "R"])]
        series: Option<Vec<usize>>,
        #[arg(long, value_enum, default_value_t = GfFormat::Json)]
        format: GfFormat,
    },
    /// Minimal maxocc table for a range of lengths.
    Table {
        #[arg(long, default_value_t = 1)]
        from: usize,
        #[arg(long, default_value_t = 12)]
        to: usize,
        #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
        format: TableFormat,
        #[arg(long, default_value_t = 0)]
        threads: usize,
        /// Compare with the published values and exit 1 on any difference.
        #[arg(long)]
        verify: bool,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Algo {
    Dp,
    Runs,
    Both,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Engine {
    Prefix,
    Runs,
}

impl From<Engine> for subword_core::CountEngine {
    fn from(e: Engine) -> Self {
        match e {
            Engine::Prefix => subword_core::CountEngine::Prefix,
            Engine::Runs => subword_core::CountEngine::Runs,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum GfFormat {
    Json,
    Text,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableFormat {
    Csv,
    Json,
}

fn run(cli: Cli) -> Result<(), Failure> {
    let g = &cli.global;
    match cli.command {
        Command::Occ { word, subword, algo } => commands::occ(g, &word, &subword, algo),
        Command::Maxocc { word, engine, half_length, max_witnesses } => {
            commands::maxocc(g, &word, engine, half_length, max_witnesses)
        }
        Command::Bounds { n, k } => commands::bounds(g, n, k),
        Command::Minentropy { n, threads, checkpoint, resume, timeout, no_hints, no_symmetry, engine, chunk_size, max_n } => {
            let opts = commands::SearchOpts {
                threads,
                checkpoint,
                resume,
                timeout,
                hints: !no_hints,
                symmetry: !no_symmetry,
                engine,
                chunk_size,
                max_n,
            };
            commands::minentropy(g, n, &opts)
        }
        Command::Heuristic { n, seed, start, max_flip_rate, attempts } => {
            commands::heuristic(g, n, seed, start.as_deref(), max_flip_rate, attempts)
        }
        Command::Extend { words, from_file } => commands::extend(g, &words, from_file.as_deref()),
        Command::Gf { w, v, verify, verify_size, series, format } => {
            let series = series.map(|s| (s[0], s[1]));
            commands::gf(g, &w, &v, verify.then_some(verify_size), series, format)
        }
        Command::Table { from, to, format, threads, verify } => commands::table(g, from, to, format, threads, verify),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            if !f.message.is_empty() {
                eprintln!("error: {}", f.message);
            }
            ExitCode::from(f.code)
        }
    }
}
