//! Exact subword occurrence counting.
//!
//! Two independent algorithms are provided: [`occ_dp`], the classical
//! subsequence-counting recurrence, and [`occ_runs`], a divide-and-conquer
//! counter over run-length tuples with memoization of small sub-problems.

mod binomial;
mod cache;
mod count;
mod runs;

use num_bigint::BigUint;

pub use binomial::{binomial, binomial_u64};
pub use cache::{CacheKey, LocalOccCache, OccCache, OccMemo, DEFAULT_CACHE_THRESHOLD};
pub use count::OccCount;
pub use runs::{occ_runs, occ_runs_with};

pub(crate) use binomial::BinomialTable;
pub(crate) use count::Counter;

use crate::word::Word;

/// Longest text for which every count of its subwords fits in `u64`.
pub(crate) const U64_TEXT_MAX: usize = 64;

/// Counts the index sets realizing `u` as a subword of `w`.
pub fn occ_dp(w: &Word, u: &Word) -> OccCount {
    let (w, u) = (w.to_letters(), u.to_letters());
    if w.len() <= U64_TEXT_MAX {
        OccCount::from(occ_letters::<u64>(&w, &u))
    } else {
        OccCount::from(occ_letters::<BigUint>(&w, &u))
    }
}

/// Subsequence-counting recurrence on raw letters.
pub(crate) fn occ_letters<T: Counter>(w: &[u8], u: &[u8]) -> T {
    let k = u.len();
    if k > w.len() {
        return T::zero();
    }
    // ways[j]: embeddings of u[..j] in the prefix of w read so far
    let mut ways = vec![T::zero(); k + 1];
    ways[0] = T::one();
    for (i, &b) in w.iter().enumerate() {
        // u[..j] needs at least j letters and must leave room for the rest of u
        let hi = k.min(i + 1);
        let lo = (k + i + 1).saturating_sub(w.len()).max(1);
        for j in (lo..=hi).rev() {
            if u[j - 1] == b {
                let (left, right) = ways.split_at_mut(j);
                right[0] += &left[j - 1];
            }
        }
    }
    ways.pop().unwrap()
}

/// Counts in `u64`; the caller guarantees `w.len() <= 64`.
#[inline]
pub(crate) fn occ_u64(w: &[u8], u: &[u8]) -> u64 {
    occ_letters::<u64>(w, u)
}

/// Positions available to the pivot run: either one run of `w`, or the
/// same-letter runs `k, k+2, ..., k'` with `k < k'`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RunSpan {
    Single { len: u64 },
    Multi { total: u64, first: u64, last: u64 },
}

/// Ways to place a run of `take` equal letters into `span`, touching both end runs.
///
/// For a multi-run span this is
/// `C(L,take) - C(L-first,take) - C(L-last,take) + C(L-first-last,take)`.
pub fn pinned_run_placements(span: RunSpan, take: u64) -> OccCount {
    match span {
        RunSpan::Single { len } => binomial(len, take),
        RunSpan::Multi { total, first, last } => {
            assert!(first + last <= total, "end runs must lie inside the span");
            let plus = binomial(total, take) + binomial(total - first - last, take);
            let minus = binomial(total - first, take) + binomial(total - last, take);
            OccCount::from(plus.into_biguint() - minus.into_biguint())
        }
    }
}
