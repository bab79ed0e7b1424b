use std::cell::{Cell, RefCell};
use std::collections::HashMap;
use std::sync::atomic::{AtomicU64, Ordering};

use dashmap::DashMap;
use num_bigint::BigUint;

/// Run-count threshold used when none is configured.
pub const DEFAULT_CACHE_THRESHOLD: usize = 8;

/// Memo key for a (text, pattern) pair of run tuples.
///
/// Counts are invariant under exchanging letters in both words, so the text is
/// normalized to start with 0 and only the pattern's relative first letter is kept.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CacheKey {
    pub text_runs: Box<[u32]>,
    pub pattern_flipped: bool,
    pub pattern_runs: Box<[u32]>,
}

/// Storage for memoized sub-results of [`occ_runs`](super::occ_runs).
pub trait OccMemo {
    /// Pairs are stored only when both operands have at most this many runs.
    /// Zero disables memoization.
    fn threshold(&self) -> usize;
    fn lookup(&self, key: &CacheKey) -> Option<BigUint>;
    fn store(&self, key: CacheKey, value: BigUint);
}

/// Thread-safe memo table. Concurrent writers always agree on the value for a
/// key, so the last write simply wins.
#[derive(Debug)]
pub struct OccCache {
    threshold: usize,
    map: DashMap<CacheKey, BigUint>,
    hits: AtomicU64,
    misses: AtomicU64,
}

impl OccCache {
    pub fn new(threshold: usize) -> Self {
        OccCache { threshold, map: DashMap::new(), hits: AtomicU64::new(0), misses: AtomicU64::new(0) }
    }

    pub fn disabled() -> Self {
        OccCache::new(0)
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn hits(&self) -> u64 {
        self.hits.load(Ordering::Relaxed)
    }

    pub fn misses(&self) -> u64 {
        self.misses.load(Ordering::Relaxed)
    }

    pub fn clear(&self) {
        self.map.clear();
    }
}

impl Default for OccCache {
    fn default() -> Self {
        OccCache::new(DEFAULT_CACHE_THRESHOLD)
    }
}

impl OccMemo for OccCache {
    fn threshold(&self) -> usize {
        self.threshold
    }

    fn lookup(&self, key: &CacheKey) -> Option<BigUint> {
        let found = self.map.get(key).map(|v| v.clone());
        if found.is_some() {
            self.hits.fetch_add(1, Ordering::Relaxed);
        } else {
            self.misses.fetch_add(1, Ordering::Relaxed);
        }
        found
    }

    fn store(&self, key: CacheKey, value: BigUint) {
        self.map.insert(key, value);
    }
}

/// Single-threaded memo table without synchronization, for reproducible profiling.
#[derive(Debug, Default)]
pub struct LocalOccCache {
    threshold: usize,
    map: RefCell<HashMap<CacheKey, BigUint>>,
    hits: Cell<u64>,
    misses: Cell<u64>,
}

impl LocalOccCache {
    pub fn new(threshold: usize) -> Self {
        LocalOccCache { threshold, ..Default::default() }
    }

    pub fn len(&self) -> usize {
        self.map.borrow().len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.borrow().is_empty()
    }

    pub fn hits(&self) -> u64 {
        self.hits.get()
    }

    pub fn misses(&self) -> u64 {
        self.misses.get()
    }
}

impl OccMemo for LocalOccCache {
    fn threshold(&self) -> usize {
        self.threshold
    }

    fn lookup(&self, key: &CacheKey) -> Option<BigUint> {
        let found = self.map.borrow().get(key).cloned();
        let counter = if found.is_some() { &self.hits } else { &self.misses };
        counter.set(counter.get() + 1);
        found
    }

    fn store(&self, key: CacheKey, value: BigUint) {
        self.map.borrow_mut().insert(key, value);
    }
}
