use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::binomial::binomial;
use super::cache::{CacheKey, OccMemo};
use super::count::OccCount;
use super::{pinned_run_placements, RunSpan};
use crate::word::{RunTuple, Word};

/// Counts occurrences of `u` in `w` by divide and conquer over run-length tuples.
///
/// The middle run of `u` is pinned to a first and a last run of `w` carrying
/// the same letter; the parts of `u` before and after it are then counted
/// independently in the parts of `w` before and after those runs.
pub fn occ_runs<M: OccMemo + ?Sized>(w: &Word, u: &Word, cache: &M) -> OccCount {
    occ_runs_with(w.runs(), u.runs(), cache)
}

pub fn occ_runs_with<M: OccMemo + ?Sized>(text: &RunTuple, pattern: &RunTuple, cache: &M) -> OccCount {
    let solver = Solver { memo: cache };
    OccCount::from(solver.count(
        Side { first: text.first_letter(), runs: text.runs() },
        Side { first: pattern.first_letter(), runs: pattern.runs() },
    ))
}

#[derive(Clone, Copy)]
struct Side<'a> {
    first: u8,
    runs: &'a [u32],
}

impl<'a> Side<'a> {
    fn letter(&self, i: usize) -> u8 {
        self.first ^ (i as u8 & 1)
    }

    fn slice(&self, from: usize, to: usize) -> Side<'a> {
        Side { first: self.letter(from), runs: &self.runs[from..to] }
    }

    fn total(&self) -> u64 {
        self.runs.iter().map(|&r| r as u64).sum()
    }
}

struct Solver<'m, M: ?Sized> {
    memo: &'m M,
}

impl<M: OccMemo + ?Sized> Solver<'_, M> {
    fn count(&self, text: Side<'_>, pat: Side<'_>) -> BigUint {
        if pat.runs.is_empty() {
            return BigUint::one();
        }
        // deleting letters never creates runs
        if pat.runs.len() > text.runs.len() || pat.total() > text.total() {
            return BigUint::zero();
        }

        let tau = self.memo.threshold();
        let key = (text.runs.len() <= tau && pat.runs.len() <= tau).then(|| CacheKey {
            text_runs: text.runs.into(),
            pattern_flipped: text.first != pat.first,
            pattern_runs: pat.runs.into(),
        });
        if let Some(key) = &key {
            if let Some(v) = self.memo.lookup(key) {
                return v;
            }
        }

        let value = self.split(text, pat);
        if let Some(key) = key {
            self.memo.store(key, value.clone());
        }
        value
    }

    fn split(&self, text: Side<'_>, pat: Side<'_>) -> BigUint {
        let r = pat.runs.len();
        let m = text.runs.len();
        let pivot = r.div_ceil(2) - 1;
        let letter = pat.letter(pivot);
        let take = pat.runs[pivot] as u64;
        let left_pat = pat.slice(0, pivot);
        let right_pat = pat.slice(pivot + 1, r);

        let start = usize::from(text.letter(0) != letter);
        let candidates: Vec<usize> = (start..m).step_by(2).collect();

        let lefts: Vec<BigUint> = candidates
            .iter()
            .map(|&k| self.count(text.slice(0, k), left_pat))
            .collect();
        let rights: Vec<BigUint> = candidates
            .iter()
            .map(|&k| self.count(text.slice(k + 1, m), right_pat))
            .collect();

        let mut total = BigUint::zero();
        for (i, &k) in candidates.iter().enumerate() {
            if lefts[i].is_zero() {
                continue;
            }
            let first = text.runs[k] as u64;
            let mut span = first;
            for (j, &k2) in candidates.iter().enumerate().skip(i) {
                let placements = if k2 == k {
                    binomial(first, take)
                } else {
                    let last = text.runs[k2] as u64;
                    span += last;
                    pinned_run_placements(RunSpan::Multi { total: span, first, last }, take)
                };
                if rights[j].is_zero() || placements.is_zero() {
                    continue;
                }
                total += &lefts[i] * &rights[j] * placements.as_biguint();
            }
        }
        total
    }
}
