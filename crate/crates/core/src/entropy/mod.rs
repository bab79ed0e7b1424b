//! Maximal subword occurrences, most frequent subwords and subword entropy.

mod bounds;
pub(crate) mod scan;

use std::ops::RangeInclusive;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

pub use bounds::{maxocc_lower_bound, maxocc_upper_bound, LowerBound};

use crate::error::EntropyError;
use crate::occurrence::{occ_letters, occ_runs, OccCache, OccCount, OccMemo, U64_TEXT_MAX};
use crate::word::Word;
use scan::{length_order, scan, Goal, ScanCounter, ScanOutcome};

/// Default cap on reported most frequent subwords.
pub const DEFAULT_MAX_WITNESSES: usize = 16;

/// Fraction of `|w|` at which the candidate length scan starts.
pub const LENGTH_CENTER_RATIO: f64 = 0.4;

/// How candidate subwords are counted.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CountEngine {
    /// Depth-first candidate growth sharing prefix counts, with bound pruning.
    #[default]
    Prefix,
    /// Plain candidate enumeration, each counted by the run-length counter.
    Runs,
}

#[derive(Clone, Debug)]
pub struct MaxoccOptions {
    /// Only scan lengths up to `ceil(|w|/2)`. Unproven, so results are flagged heuristic.
    pub assume_half_length: bool,
    pub max_witnesses: usize,
    pub engine: CountEngine,
    /// Length at which the scan starts; defaults to `0.4 |w|`.
    pub length_center: Option<f64>,
}

impl Default for MaxoccOptions {
    fn default() -> Self {
        MaxoccOptions {
            assume_half_length: false,
            max_witnesses: DEFAULT_MAX_WITNESSES,
            engine: CountEngine::Prefix,
            length_center: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MaxoccResult {
    pub maxocc: OccCount,
    /// Most frequent subwords sharing the first and last letter of the word,
    /// sorted by length then code.
    pub witnesses: Vec<Word>,
    /// More maximizers exist than the witness cap allowed.
    pub truncated: bool,
    pub entropy_bits: f64,
    pub searched_lengths: RangeInclusive<usize>,
    pub heuristic: bool,
}

impl MaxoccResult {
    /// First listed witness.
    pub fn canonical_witness(&self) -> &Word {
        &self.witnesses[0]
    }
}

pub fn maxocc(w: &Word) -> Result<MaxoccResult, EntropyError> {
    maxocc_with(w, &MaxoccOptions::default())
}

pub fn maxocc_with(w: &Word, opts: &MaxoccOptions) -> Result<MaxoccResult, EntropyError> {
    if w.is_empty() {
        return Err(EntropyError::EmptyWord);
    }
    let n = w.len();
    let max_len = if opts.assume_half_length { n.div_ceil(2) } else { n };
    let center = opts.length_center.unwrap_or(LENGTH_CENTER_RATIO * n as f64);
    let lengths = length_order(max_len, center);
    let goal_cap = opts.max_witnesses.max(1);

    let (best, witnesses, truncated) = match opts.engine {
        CountEngine::Prefix => {
            let letters = w.to_letters();
            if n <= U64_TEXT_MAX {
                let out = scan::<u64>(&letters, &lengths, Goal::Collect { cap: goal_cap });
                (OccCount::from(out.best), out.witnesses, out.truncated)
            } else {
                let out = scan::<BigUint>(&letters, &lengths, Goal::Collect { cap: goal_cap });
                (OccCount::from(out.best), out.witnesses, out.truncated)
            }
        }
        CountEngine::Runs => enumerate_with_runs(w, &lengths, goal_cap),
    };
    let entropy_bits = best.log2();
    Ok(MaxoccResult {
        maxocc: best,
        witnesses,
        truncated,
        entropy_bits,
        searched_lengths: 1..=max_len,
        heuristic: opts.assume_half_length,
    })
}

/// Candidates of a given length whose first and last letters match `w`.
fn candidates(w: &Word, len: usize) -> impl Iterator<Item = Word> + '_ {
    let (first, last) = (w.letter(0) as u64, w.letter(w.len() - 1) as u64);
    let inner = len.saturating_sub(2);
    let count: u64 = match len {
        0 => 0,
        1 => u64::from(first == last),
        _ => 1 << inner,
    };
    (0..count).map(move |mid| {
        let code = if len == 1 { first } else { (first << (len - 1)) | (mid << 1) | last };
        Word::from_code(code, len)
    })
}

fn enumerate_with_runs(w: &Word, lengths: &[usize], cap: usize) -> (OccCount, Vec<Word>, bool) {
    let cache = OccCache::default();
    let mut best = OccCount::zero();
    let mut found = std::collections::BTreeSet::new();
    let mut truncated = false;
    for &len in lengths {
        for u in candidates(w, len) {
            let occ = occ_runs(w, &u, &cache);
            if occ > best {
                best = occ;
                found.clear();
                truncated = false;
            } else if occ < best {
                continue;
            }
            found.insert(u);
            if found.len() > cap {
                found.pop_last();
                truncated = true;
            }
        }
    }
    (best, found.into_iter().collect(), truncated)
}

/// Looks for a subword occurring strictly more than `bound` times.
///
/// The hints are tried first; then candidates are scanned, starting near the
/// length of the first hint, with an exit as soon as the bound is beaten.
/// `None` means `maxocc(w) <= bound`.
pub fn maxocc_exceeds(w: &Word, bound: &OccCount, hints: &[Word]) -> Option<(Word, OccCount)> {
    if w.is_empty() {
        return None;
    }
    let letters = w.to_letters();
    for h in hints {
        let occ = if letters.len() <= U64_TEXT_MAX {
            OccCount::from(occ_letters::<u64>(&letters, &h.to_letters()))
        } else {
            OccCount::from(occ_letters::<BigUint>(&letters, &h.to_letters()))
        };
        if occ > *bound {
            return Some((h.clone(), occ));
        }
    }
    let center = hints.first().map(|h| h.len() as f64);
    let probe = evaluate(&letters, bound.as_biguint(), center);
    probe.exceeded.then_some((probe.witness, probe.value))
}

/// Result of an early-exit evaluation.
#[derive(Clone, Debug)]
pub(crate) struct Probe {
    /// True when `value > bound`; otherwise `value` is the exact maximum.
    pub exceeded: bool,
    pub value: OccCount,
    pub witness: Word,
}

fn probe_from<T: ScanCounter>(out: ScanOutcome<T>) -> Probe {
    Probe {
        exceeded: out.exceeded,
        value: out.best.into_count(),
        witness: out.witnesses.into_iter().next().unwrap_or_else(Word::empty),
    }
}

pub(crate) fn evaluate(letters: &[u8], bound: &BigUint, center: Option<f64>) -> Probe {
    let n = letters.len();
    let lengths = length_order(n, center.unwrap_or(LENGTH_CENTER_RATIO * n as f64));
    if n <= U64_TEXT_MAX {
        // counts never exceed C(64, 32) < u64::MAX, so a larger bound is never beaten
        let bound = u64::try_from(bound).unwrap_or(u64::MAX);
        probe_from(scan::<u64>(letters, &lengths, Goal::Exceed { bound }))
    } else {
        probe_from(scan::<BigUint>(letters, &lengths, Goal::Exceed { bound: bound.clone() }))
    }
}

/// Early-exit evaluation with a `u64` bound on words of at most 64 letters.
pub(crate) fn evaluate_u64(letters: &[u8], bound: u64, center: Option<f64>) -> (bool, u64, Word) {
    let n = letters.len();
    let lengths = length_order(n, center.unwrap_or(LENGTH_CENTER_RATIO * n as f64));
    let out = scan::<u64>(letters, &lengths, Goal::Exceed { bound });
    let witness = out.witnesses.into_iter().next().unwrap_or_else(Word::empty);
    (out.exceeded, out.best, witness)
}

/// Early-exit evaluation counting each candidate with the run-length counter.
pub(crate) fn evaluate_runs<M: OccMemo + ?Sized>(
    w: &Word,
    bound: u64,
    center: Option<f64>,
    cache: &M,
) -> (bool, u64, Word) {
    let n = w.len();
    let lengths = length_order(n, center.unwrap_or(LENGTH_CENTER_RATIO * n as f64));
    let mut best = 0u64;
    let mut witness = Word::empty();
    for &len in &lengths {
        for u in candidates(w, len) {
            let occ = occ_runs(w, &u, cache).to_u64().unwrap_or(u64::MAX);
            if occ > best {
                best = occ;
                witness = u;
                if best > bound {
                    return (true, best, witness);
                }
            }
        }
    }
    (false, best, witness)
}

/// `log2 maxocc(w)`.
pub fn subword_entropy(w: &Word) -> Result<f64, EntropyError> {
    Ok(maxocc(w)?.entropy_bits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::occurrence::occ_dp;
    use crate::word::words_of_length;
    use std::collections::HashMap;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    /// Maximum over all 2^n position subsets, tallied by the subword they spell.
    fn brute_maxocc(word: &Word) -> (u64, Vec<Word>) {
        let n = word.len();
        let letters = word.to_letters();
        let mut tally: HashMap<(usize, u64), u64> = HashMap::new();
        for mask in 1u32..1 << n {
            let mut code = 0u64;
            for (i, &a) in letters.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    code = code << 1 | a as u64;
                }
            }
            *tally.entry((mask.count_ones() as usize, code)).or_default() += 1;
        }
        let best = *tally.values().max().unwrap();
        let mut maximizers: Vec<Word> = tally
            .iter()
            .filter(|(_, &v)| v == best)
            .map(|(&(len, code), _)| Word::from_code(code, len))
            .collect();
        maximizers.sort();
        (best, maximizers)
    }

    #[test]
    fn examples() {
        let r = maxocc(&w("011001")).unwrap();
        assert_eq!(r.maxocc, 5);
        assert_eq!(r.witnesses, vec![w("01")]);

        let r = maxocc(&w("01110")).unwrap();
        assert_eq!(r.maxocc, 3);
        assert_eq!(r.witnesses, vec![w("010"), w("0110")]);

        let r = maxocc(&w("0000")).unwrap();
        assert_eq!(r.maxocc, 6);
        assert_eq!(r.witnesses, vec![w("00")]);

        let r = maxocc(&w("0")).unwrap();
        assert_eq!(r.maxocc, 1);
        assert_eq!(r.entropy_bits, 0.0);

        assert_eq!(maxocc(&Word::empty()), Err(EntropyError::EmptyWord));
    }

    #[test]
    fn entropy_examples() {
        assert_eq!(subword_entropy(&w("011000110")).unwrap(), 4.0);
        assert_eq!(subword_entropy(&w("0")).unwrap(), 0.0);
        let e = subword_entropy(&w("0110001110")).unwrap();
        assert_eq!(e, 22f64.log2());
        assert!((e - 4.459).abs() < 5e-4);
    }

    #[test]
    fn exceeds_examples() {
        let (u, occ) = maxocc_exceeds(&w("000000"), &OccCount::from(5), &[]).unwrap();
        assert!(occ > 5);
        assert_eq!(occ_dp(&w("000000"), &u), occ);

        assert_eq!(maxocc_exceeds(&w("011001"), &OccCount::from(5), &[w("01")]), None);

        let (u, occ) = maxocc_exceeds(&w("011001"), &OccCount::from(4), &[w("01")]).unwrap();
        assert_eq!(u, w("01"));
        assert_eq!(occ, 5);
    }

    #[test]
    fn exceeds_finds_binomial_witness() {
        // the scan starts near length 2.4, where 000 occurs C(6,3) = 20 times
        let (u, occ) = maxocc_exceeds(&w("000000"), &OccCount::from(19), &[]).unwrap();
        assert_eq!(u, w("000"));
        assert_eq!(occ, 20);
    }

    #[test]
    fn matches_brute_force_up_to_12() {
        for n in 1..=12 {
            for word in words_of_length(n, 0) {
                let (best, all) = brute_maxocc(&word);
                let r = maxocc(&word).unwrap();
                assert_eq!(r.maxocc, best, "{word}");
                let filtered: Vec<Word> = all
                    .into_iter()
                    .filter(|u| u.first() == word.first() && u.last() == word.last())
                    .take(DEFAULT_MAX_WITNESSES)
                    .collect();
                assert_eq!(r.witnesses, filtered, "{word}");
            }
        }
    }

    #[test]
    fn matches_brute_force_14_sampled() {
        for code in (0..1u64 << 13).step_by(37) {
            let word = Word::from_code(code, 14);
            assert_eq!(maxocc(&word).unwrap().maxocc, brute_maxocc(&word).0, "{word}");
        }
    }

    #[test]
    fn runs_engine_agrees() {
        let opts = MaxoccOptions { engine: CountEngine::Runs, ..Default::default() };
        for n in 1..=9 {
            for word in words_of_length(n, 0) {
                assert_eq!(maxocc_with(&word, &opts).unwrap(), maxocc(&word).unwrap(), "{word}");
            }
        }
    }

    #[test]
    fn symmetric_words_share_maxocc() {
        for n in 1..=12 {
            for word in words_of_length(n, 0) {
                let m = maxocc(&word).unwrap().maxocc;
                assert_eq!(maxocc(&word.complement()).unwrap().maxocc, m);
                assert_eq!(maxocc(&word.reverse()).unwrap().maxocc, m);
            }
        }
    }

    #[test]
    fn witnesses_reproduce_maxocc() {
        for word in ["0110001110", "0111001001110", "01100010111001", "0001100111"] {
            let word = w(word);
            let r = maxocc(&word).unwrap();
            for u in &r.witnesses {
                assert_eq!(occ_dp(&word, u), r.maxocc);
                assert_eq!(u.first(), word.first());
                assert_eq!(u.last(), word.last());
            }
        }
    }

    #[test]
    fn witness_cap_truncates() {
        let opts = MaxoccOptions { max_witnesses: 2, ..Default::default() };
        let r = maxocc_with(&w("0111001001110"), &opts).unwrap();
        assert_eq!(r.witnesses.len(), 2);
        assert!(r.truncated);
    }

    #[test]
    fn half_length_flag() {
        let opts = MaxoccOptions { assume_half_length: true, ..Default::default() };
        let r = maxocc_with(&w("0110001110"), &opts).unwrap();
        assert!(r.heuristic);
        assert_eq!(r.searched_lengths, 1..=5);
        assert_eq!(r.maxocc, 22);
    }

    #[test]
    fn long_words_use_big_counts() {
        let zeros = Word::from_letters(&[0; 100]);
        let r = maxocc(&zeros).unwrap();
        assert_eq!(r.maxocc, crate::occurrence::binomial(100, 50));
        assert_eq!(r.witnesses, vec![Word::from_letters(&[0; 50])]);
    }
}
