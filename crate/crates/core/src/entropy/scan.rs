//! Depth-first enumeration of candidate subwords with shared prefix counts.
//!
//! For a fixed target length `L`, the candidate `u` is grown one letter at a
//! time. Layer `k` holds, for every prefix `w[..i]`, the number of embeddings of
//! `u[..k]` into it, so each extension costs `O(|w|)`. A branch is cut when no
//! embedding can be completed, or when even placing the remaining letters
//! freely after each partial embedding cannot reach the score to beat.

use std::collections::BTreeSet;
use std::sync::LazyLock;

use num_bigint::BigUint;

use crate::occurrence::{BinomialTable, Counter};
use crate::word::Word;

static U64_BINOMIALS: LazyLock<BinomialTable<u64>> = LazyLock::new(|| BinomialTable::new(64));

pub(crate) trait ScanCounter: Counter {
    fn with_binomials<R>(n: usize, f: impl FnOnce(&BinomialTable<Self>) -> R) -> R;
}

impl ScanCounter for u64 {
    fn with_binomials<R>(n: usize, f: impl FnOnce(&BinomialTable<u64>) -> R) -> R {
        assert!(n <= 64);
        f(&U64_BINOMIALS)
    }
}

impl ScanCounter for BigUint {
    fn with_binomials<R>(n: usize, f: impl FnOnce(&BinomialTable<BigUint>) -> R) -> R {
        f(&BinomialTable::new(n))
    }
}

#[derive(Clone, Debug)]
pub(crate) enum Goal<T> {
    /// Exact maximum with up to `cap` maximizers.
    Collect { cap: usize },
    /// Stop at the first candidate strictly above `bound`; otherwise the exact maximum.
    Exceed { bound: T },
}

#[derive(Clone, Debug)]
pub(crate) struct ScanOutcome<T> {
    pub best: T,
    /// Sorted by (length, code). For `Exceed` this holds the single best candidate seen.
    pub witnesses: Vec<Word>,
    pub exceeded: bool,
    pub truncated: bool,
}

/// Lengths `1..=max_len` ordered by distance from `center`, shorter first on ties.
pub(crate) fn length_order(max_len: usize, center: f64) -> Vec<usize> {
    let mut lengths: Vec<usize> = (1..=max_len).collect();
    lengths.sort_by(|&a, &b| {
        let da = (a as f64 - center).abs();
        let db = (b as f64 - center).abs();
        da.total_cmp(&db).then(a.cmp(&b))
    });
    lengths
}

pub(crate) fn scan<T: ScanCounter>(w: &[u8], lengths: &[usize], goal: Goal<T>) -> ScanOutcome<T> {
    let n = w.len();
    assert!(n >= 1);
    T::with_binomials(n, |binom| {
        let mut s = Scanner {
            w,
            n,
            binom,
            goal,
            layers: Vec::new(),
            u: Vec::new(),
            best: T::zero(),
            found: BTreeSet::new(),
            exceeded: false,
            truncated: false,
        };
        for &len in lengths {
            if s.exceeded {
                break;
            }
            // first and last letters of the candidate are pinned to those of w
            if len == 0 || len > n || (len == 1 && w[0] != w[n - 1]) {
                continue;
            }
            s.run_length(len);
        }
        ScanOutcome {
            best: s.best,
            witnesses: s.found.into_iter().collect(),
            exceeded: s.exceeded,
            truncated: s.truncated,
        }
    })
}

struct Scanner<'a, T> {
    w: &'a [u8],
    n: usize,
    binom: &'a BinomialTable<T>,
    goal: Goal<T>,
    layers: Vec<Vec<T>>,
    u: Vec<u8>,
    best: T,
    found: BTreeSet<Word>,
    exceeded: bool,
    truncated: bool,
}

impl<T: ScanCounter> Scanner<'_, T> {
    fn run_length(&mut self, len: usize) {
        let n = self.n;
        self.layers = vec![vec![T::zero(); n + 1]; len + 1];
        self.layers[0] = vec![T::one(); n + 1];
        self.u = vec![0; len];
        self.dfs(0, len);
    }

    fn cut(&self, upper: &T) -> bool {
        match self.goal {
            Goal::Collect { .. } => *upper < self.best,
            Goal::Exceed { .. } => *upper <= self.best,
        }
    }

    fn dfs(&mut self, k: usize, len: usize) {
        if self.exceeded {
            return;
        }
        if k == len {
            let occ = self.layers[len][self.n].clone();
            self.report(occ);
            return;
        }
        let (n, w) = (self.n, self.w);
        let rem = len - k - 1;
        let hi = n - rem;
        let choices: [Option<u8>; 2] = if k == 0 {
            [Some(w[0]), None]
        } else if k == len - 1 {
            [Some(w[n - 1]), None]
        } else {
            let prev = self.u[k - 1];
            [Some(1 - prev), Some(prev)]
        };
        for a in choices.into_iter().flatten() {
            let (done, rest) = self.layers.split_at_mut(k + 1);
            let cur = &done[k];
            let next = &mut rest[0];
            let mut upper = T::zero();
            let mut acc = T::zero();
            next[k] = T::zero();
            for i in k + 1..=hi {
                if w[i - 1] == a {
                    acc += &cur[i - 1];
                    // partial embeddings ending exactly at position i - 1
                    upper += &(cur[i - 1].clone() * self.binom.get(n - i, rem));
                }
                next[i] = acc.clone();
            }
            if next[hi].is_zero() || self.cut(&upper) {
                continue;
            }
            self.u[k] = a;
            self.dfs(k + 1, len);
            if self.exceeded {
                return;
            }
        }
    }

    fn report(&mut self, occ: T) {
        match &self.goal {
            Goal::Collect { cap } => {
                let cap = *cap;
                if occ > self.best {
                    self.best = occ;
                    self.found.clear();
                    self.truncated = false;
                } else if occ < self.best {
                    return;
                }
                self.found.insert(Word::from_letters(&self.u));
                if self.found.len() > cap {
                    self.found.pop_last();
                    self.truncated = true;
                }
            }
            Goal::Exceed { bound } => {
                if occ > self.best {
                    self.exceeded = occ > *bound;
                    self.best = occ;
                    self.found.clear();
                    self.found.insert(Word::from_letters(&self.u));
                }
            }
        }
    }
}
