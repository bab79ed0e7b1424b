//! Exhaustive and heuristic search for words of minimal subword entropy.

mod analysis;
mod checkpoint;
mod local;

use std::collections::BTreeSet;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use serde::Serialize;

pub use analysis::{limit_lower_bound, verify_superadditivity, LimitBound, Violation};
pub use checkpoint::{Checkpoint, CHECKPOINT_VERSION};
pub use local::{insertion_extend, local_search_adaptive, LocalSearchParams};

use crate::entropy::{evaluate_runs, evaluate_u64, maxocc, CountEngine};
use crate::error::SearchError;
use crate::occurrence::{occ_u64, OccCache, OccCount, DEFAULT_CACHE_THRESHOLD};
use crate::word::{class_representative_code, Word};
use checkpoint::RangeSet;

pub const DEFAULT_MAX_N: usize = 28;
pub const DEFAULT_CHUNK_SIZE: u64 = 1 << 10;
const DEADLINE_POLL: u64 = 256;

#[derive(Clone, Debug)]
pub struct SearchConfig {
    /// Worker threads; 0 means all available cores.
    pub workers: usize,
    pub chunk_size: u64,
    pub use_hints: bool,
    /// Only evaluate words that are their own symmetry-class representative.
    pub skip_symmetric: bool,
    /// Starting bound; must be at least the true minimum.
    pub initial_bound: Option<u64>,
    pub engine: CountEngine,
    pub cache_threshold: usize,
    pub max_n: usize,
    pub checkpoint: Option<PathBuf>,
    pub resume: bool,
    pub checkpoint_interval: Duration,
    /// Stop after this many chunks have been claimed in this run.
    pub stop_after_chunks: Option<usize>,
    pub deadline: Option<Instant>,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            workers: 0,
            chunk_size: DEFAULT_CHUNK_SIZE,
            use_hints: true,
            skip_symmetric: true,
            initial_bound: None,
            engine: CountEngine::Prefix,
            cache_threshold: DEFAULT_CACHE_THRESHOLD,
            max_n: DEFAULT_MAX_N,
            checkpoint: None,
            resume: false,
            checkpoint_interval: Duration::from_secs(10),
            stop_after_chunks: None,
            deadline: None,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct SearchStats {
    pub words_total: u64,
    /// Words skipped because a symmetric word stands for them.
    pub words_symmetric: u64,
    pub words_scanned: u64,
    pub hint_attempts: u64,
    pub pruned_by_hints: u64,
    pub early_exits: u64,
    pub full_scans: u64,
    /// Words covered by a checkpoint loaded at start.
    pub words_resumed: u64,
    pub wall_time_secs: f64,
}

impl SearchStats {
    fn absorb(&mut self, o: &SearchStats) {
        self.words_symmetric += o.words_symmetric;
        self.words_scanned += o.words_scanned;
        self.hint_attempts += o.hint_attempts;
        self.pruned_by_hints += o.pruned_by_hints;
        self.early_exits += o.early_exits;
        self.full_scans += o.full_scans;
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Achiever {
    pub word: Word,
    pub runs: usize,
    pub witnesses: Vec<Word>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SearchResult {
    pub n: usize,
    pub min_maxocc: OccCount,
    pub min_entropy_bits: f64,
    pub achievers: Vec<Achiever>,
    pub stats: SearchStats,
}

impl SearchResult {
    /// Equality ignoring statistics.
    pub fn same_outcome(&self, other: &SearchResult) -> bool {
        self.n == other.n && self.min_maxocc == other.min_maxocc && self.achievers == other.achievers
    }

    /// `log2(min maxocc) / n`.
    pub fn entropy_per_letter(&self) -> f64 {
        self.min_entropy_bits / self.n as f64
    }
}

#[derive(Clone, Debug)]
pub enum SearchRun {
    Completed(SearchResult),
    /// Stopped early; the state needed to resume.
    Interrupted { checkpoint: Checkpoint, stats: SearchStats },
}

/// Exact minimum of `maxocc` over binary words of length `n`.
pub fn min_entropy_exhaustive(
    n: usize,
    workers: usize,
    checkpoint: Option<&Path>,
) -> Result<SearchResult, SearchError> {
    let config = SearchConfig {
        workers,
        checkpoint: checkpoint.map(Path::to_path_buf),
        resume: checkpoint.is_some_and(Path::exists),
        ..SearchConfig::default()
    };
    match run_search(n, &config)? {
        SearchRun::Completed(r) => Ok(r),
        SearchRun::Interrupted { .. } => unreachable!("no stopping condition configured"),
    }
}

struct Shared {
    bound: u64,
    achievers: BTreeSet<u64>,
    done: RangeSet,
    last_save: Instant,
}

struct Ctx<'a> {
    n: usize,
    config: &'a SearchConfig,
    chunks: Vec<(u64, u64)>,
    next: AtomicUsize,
    bound: AtomicU64,
    stop: AtomicBool,
    interrupted: AtomicBool,
    shared: Mutex<Shared>,
    cache: OccCache,
}

pub fn run_search(n: usize, config: &SearchConfig) -> Result<SearchRun, SearchError> {
    let max = config.max_n.min(63);
    if n == 0 || n > max {
        return Err(SearchError::LengthOutOfRange { n, max });
    }
    let started = Instant::now();
    let limit = 1u64 << (n - 1);

    let mut bound = config.initial_bound.unwrap_or(u64::MAX);
    let mut achievers = BTreeSet::new();
    let mut done = RangeSet::default();
    let mut resumed = 0;
    if let (Some(path), true) = (&config.checkpoint, config.resume) {
        if path.exists() {
            let cp = Checkpoint::load(path)?;
            if cp.n != n {
                return Err(SearchError::CheckpointLength { found: cp.n, expected: n });
            }
            if let Some(b) = &cp.bound {
                let b = b.to_u64().ok_or_else(|| SearchError::CheckpointFormat("bound too large".into()))?;
                if b <= bound {
                    if b < bound {
                        achievers.clear();
                    }
                    bound = b;
                    achievers.extend(cp.achievers.iter().map(|a| a.code().unwrap()));
                }
            }
            done = RangeSet::from_ranges(&cp.ranges);
            resumed = done.covered_within(limit);
        }
    }

    let chunk = config.chunk_size.max(1);
    let chunks: Vec<(u64, u64)> = done
        .gaps(limit)
        .into_iter()
        .flat_map(|(lo, hi)| (lo..hi).step_by(chunk as usize).map(move |s| (s, (s + chunk).min(hi))))
        .collect();

    let ctx = Ctx {
        n,
        config,
        chunks,
        next: AtomicUsize::new(0),
        bound: AtomicU64::new(bound),
        stop: AtomicBool::new(false),
        interrupted: AtomicBool::new(false),
        shared: Mutex::new(Shared { bound, achievers, done, last_save: Instant::now() }),
        cache: OccCache::new(config.cache_threshold),
    };

    let workers = match config.workers {
        0 => std::thread::available_parallelism().map_or(1, |p| p.get()),
        w => w,
    }
    .min(ctx.chunks.len().max(1));

    let mut stats = SearchStats::default();
    let per_worker: Vec<Result<SearchStats, SearchError>> = std::thread::scope(|s| {
        let handles: Vec<_> = (0..workers).map(|_| s.spawn(|| worker(&ctx))).collect();
        handles.into_iter().map(|h| h.join().expect("search worker panicked")).collect()
    });
    for r in per_worker {
        stats.absorb(&r?);
    }
    stats.words_total = limit;
    stats.words_resumed = resumed;

    let shared = ctx.shared.into_inner().unwrap();
    let snapshot = Checkpoint {
        version: CHECKPOINT_VERSION,
        n,
        bound: (shared.bound != u64::MAX).then(|| OccCount::from(shared.bound)),
        ranges: shared.done.to_vec(),
        achievers: shared.achievers.iter().map(|&c| Word::from_code(c, n)).collect(),
    };
    if let Some(path) = &config.checkpoint {
        snapshot.save(path)?;
    }
    stats.wall_time_secs = started.elapsed().as_secs_f64();

    if ctx.interrupted.load(Ordering::Relaxed) || shared.done.covered_within(limit) < limit {
        return Ok(SearchRun::Interrupted { checkpoint: snapshot, stats });
    }

    let best = OccCount::from(shared.bound);
    let achievers = shared
        .achievers
        .iter()
        .map(|&code| {
            let word = Word::from_code(code, n);
            let full = maxocc(&word).expect("non-empty word");
            debug_assert_eq!(full.maxocc, best);
            Achiever { runs: word.num_runs(), witnesses: full.witnesses, word }
        })
        .collect();
    Ok(SearchRun::Completed(SearchResult {
        n,
        min_entropy_bits: best.log2(),
        min_maxocc: best,
        achievers,
        stats,
    }))
}

fn worker(ctx: &Ctx<'_>) -> Result<SearchStats, SearchError> {
    let n = ctx.n;
    let config = ctx.config;
    let mut stats = SearchStats::default();
    let mut hints: Vec<Vec<u8>> = Vec::new();
    let mut letters = vec![0u8; n];

    while !ctx.stop.load(Ordering::Relaxed) {
        let idx = ctx.next.fetch_add(1, Ordering::Relaxed);
        if idx >= ctx.chunks.len() || config.stop_after_chunks.is_some_and(|k| idx >= k) {
            break;
        }
        let (lo, hi) = ctx.chunks[idx];
        let mut finished = true;
        for code in lo..hi {
            if (code - lo) % DEADLINE_POLL == 0 && config.deadline.is_some_and(|d| Instant::now() >= d) {
                ctx.stop.store(true, Ordering::Relaxed);
                ctx.interrupted.store(true, Ordering::Relaxed);
                finished = false;
                break;
            }
            if config.skip_symmetric && class_representative_code(code, n) != code {
                stats.words_symmetric += 1;
                continue;
            }
            stats.words_scanned += 1;
            for (i, l) in letters.iter_mut().enumerate() {
                *l = ((code >> (n - 1 - i)) & 1) as u8;
            }
            let bound = ctx.bound.load(Ordering::Acquire);

            if config.use_hints && bound != u64::MAX && !hints.is_empty() {
                stats.hint_attempts += 1;
                if hints.iter().any(|h| occ_u64(&letters, h) > bound) {
                    stats.pruned_by_hints += 1;
                    continue;
                }
            }

            let center = hints.first().map(|h| h.len() as f64);
            let (exceeded, value, witness) = match config.engine {
                CountEngine::Prefix => evaluate_u64(&letters, bound, center),
                CountEngine::Runs => evaluate_runs(&Word::from_code(code, n), bound, center, &ctx.cache),
            };
            if config.use_hints && !witness.is_empty() {
                let fwd = witness.to_letters();
                let mut rev = fwd.clone();
                rev.reverse();
                hints.clear();
                hints.push(fwd);
                if rev != hints[0] {
                    hints.push(rev);
                }
            }
            if exceeded {
                stats.early_exits += 1;
                continue;
            }
            stats.full_scans += 1;
            record(ctx, code, value);
        }
        if finished {
            complete_chunk(ctx, lo, hi)?;
        }
    }
    Ok(stats)
}

fn record(ctx: &Ctx<'_>, code: u64, value: u64) {
    let rep = class_representative_code(code, ctx.n);
    let mut s = ctx.shared.lock().unwrap();
    if value < s.bound {
        s.bound = value;
        s.achievers.clear();
        s.achievers.insert(rep);
        ctx.bound.store(value, Ordering::Release);
    } else if value == s.bound {
        s.achievers.insert(rep);
    }
}

fn complete_chunk(ctx: &Ctx<'_>, lo: u64, hi: u64) -> Result<(), SearchError> {
    let mut s = ctx.shared.lock().unwrap();
    s.done.insert(lo, hi);
    if let Some(path) = &ctx.config.checkpoint {
        if s.last_save.elapsed() >= ctx.config.checkpoint_interval {
            let cp = Checkpoint {
                version: CHECKPOINT_VERSION,
                n: ctx.n,
                bound: (s.bound != u64::MAX).then(|| OccCount::from(s.bound)),
                ranges: s.done.to_vec(),
                achievers: s.achievers.iter().map(|&c| Word::from_code(c, ctx.n)).collect(),
            };
            cp.save(path)?;
            s.last_save = Instant::now();
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::table1::GOLDEN;

    fn run(n: usize, config: &SearchConfig) -> SearchResult {
        match run_search(n, config).unwrap() {
            SearchRun::Completed(r) => r,
            SearchRun::Interrupted { .. } => panic!("interrupted"),
        }
    }

    fn codes(r: &SearchResult) -> Vec<String> {
        r.achievers.iter().map(|a| a.word.to_string()).collect()
    }

    /// Minimum over every word of length n by full evaluation, no pruning.
    fn oracle(n: usize) -> (u64, BTreeSet<String>) {
        let mut best = u64::MAX;
        let mut set = BTreeSet::new();
        for code in 0..1u64 << n {
            let w = Word::from_code(code, n);
            let m = maxocc(&w).unwrap().maxocc.to_u64().unwrap();
            let rep = w.symmetry_class_representative().to_string();
            if m < best {
                best = m;
                set.clear();
            }
            if m == best {
                set.insert(rep);
            }
        }
        (best, set)
    }

    #[test]
    fn examples() {
        let cfg = SearchConfig { workers: 2, chunk_size: 4, ..Default::default() };
        let r = run(6, &cfg);
        assert_eq!(r.min_maxocc, 5);
        assert_eq!(codes(&r), ["011001"]);
        assert_eq!(r.achievers[0].runs, 4);
        let r = run(3, &cfg);
        assert_eq!(r.min_maxocc, 2);
        assert_eq!(codes(&r), ["001", "010"]);
        let r = run(9, &cfg);
        assert_eq!(r.min_maxocc, 16);
        assert_eq!(codes(&r), ["011000110"]);
        let r = run(1, &cfg);
        assert_eq!(r.min_maxocc, 1);
        assert_eq!(codes(&r), ["0"]);
        assert!(matches!(run_search(0, &cfg), Err(SearchError::LengthOutOfRange { .. })));
        assert!(matches!(run_search(29, &cfg), Err(SearchError::LengthOutOfRange { .. })));
    }

    #[test]
    fn matches_oracle_up_to_10() {
        for n in 1..=10 {
            let (best, reps) = oracle(n);
            let r = run(n, &SearchConfig { workers: 3, chunk_size: 8, ..Default::default() });
            assert_eq!(r.min_maxocc, best, "n = {n}");
            assert_eq!(codes(&r).into_iter().collect::<BTreeSet<_>>(), reps, "n = {n}");
        }
    }

    #[test]
    fn golden_up_to_14() {
        for row in GOLDEN.iter().take(14) {
            let r = run(row.n, &SearchConfig { chunk_size: 64, ..Default::default() });
            assert_eq!(r.min_maxocc, row.maxocc, "n = {}", row.n);
            assert_eq!(codes(&r), row.words, "n = {}", row.n);
        }
    }

    #[test]
    fn independent_of_workers_and_pruning() {
        for n in [8, 11, 12] {
            let base = run(n, &SearchConfig { workers: 1, ..Default::default() });
            for workers in [2, 0] {
                let r = run(n, &SearchConfig { workers, chunk_size: 16, ..Default::default() });
                assert!(r.same_outcome(&base), "n = {n}, workers = {workers}");
            }
            let plain = SearchConfig { use_hints: false, skip_symmetric: false, workers: 4, ..Default::default() };
            assert!(run(n, &plain).same_outcome(&base), "n = {n} without pruning");
        }
    }

    #[test]
    fn runs_engine_with_shared_cache() {
        for n in [5, 7, 9] {
            let base = run(n, &SearchConfig::default());
            let cfg = SearchConfig { engine: CountEngine::Runs, workers: 4, chunk_size: 4, ..Default::default() };
            assert!(run(n, &cfg).same_outcome(&base), "n = {n}");
        }
    }

    #[test]
    fn resume_reproduces_result() {
        let dir = tempfile::tempdir().unwrap();
        for n in [7, 10, 12] {
            let base = run(n, &SearchConfig::default());
            for stop in [1, 3, 7] {
                let path = dir.path().join(format!("cp-{n}-{stop}.json"));
                let cfg = SearchConfig {
                    workers: 2,
                    chunk_size: 8,
                    checkpoint: Some(path.clone()),
                    resume: true,
                    checkpoint_interval: Duration::ZERO,
                    stop_after_chunks: Some(stop),
                    ..Default::default()
                };
                let mut rounds = 0;
                let result = loop {
                    rounds += 1;
                    match run_search(n, &cfg).unwrap() {
                        SearchRun::Completed(r) => break r,
                        SearchRun::Interrupted { checkpoint, .. } => {
                            assert_eq!(Checkpoint::load(&path).unwrap(), checkpoint);
                        }
                    }
                };
                assert!(rounds > 1 || n < 8);
                assert!(result.same_outcome(&base), "n = {n}, stop = {stop}");
                assert!(result.stats.words_resumed > 0 || rounds == 1);
            }
        }
    }

    #[test]
    fn deadline_interrupts() {
        let cfg = SearchConfig { deadline: Some(Instant::now()), ..Default::default() };
        assert!(matches!(run_search(12, &cfg).unwrap(), SearchRun::Interrupted { .. }));
    }

    #[test]
    fn checkpoint_for_other_length_is_rejected() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("cp.json");
        min_entropy_exhaustive(5, 1, Some(&path)).unwrap();
        let cfg = SearchConfig { checkpoint: Some(path), resume: true, ..Default::default() };
        assert!(matches!(run_search(6, &cfg), Err(SearchError::CheckpointLength { found: 5, expected: 6 })));
    }

    #[test]
    fn per_letter_entropy_exceptions() {
        let per: Vec<f64> = (1..=8).map(|n| run(n, &SearchConfig::default()).entropy_per_letter()).collect();
        assert!(per[3] < per[2]);
        assert!(per[6] < per[5]);
    }
}
