use std::collections::BTreeSet;

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::entropy::{evaluate, maxocc};
use crate::error::SearchError;
use crate::occurrence::OccCount;
use crate::word::Word;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LocalSearchParams {
    /// Largest per-bit flip probability tried before giving up.
    pub max_flip_rate: f64,
    /// Failed jumps allowed at one rate before it is raised.
    pub attempts_per_rate: usize,
    pub rng_seed: u64,
}

impl Default for LocalSearchParams {
    fn default() -> Self {
        LocalSearchParams { max_flip_rate: 0.5, attempts_per_rate: 20, rng_seed: 0 }
    }
}

/// Exact `maxocc` if it is below `best`, otherwise `None`.
fn below(letters: &[u8], best: &BigUint) -> Option<BigUint> {
    if best == &BigUint::ZERO {
        return None;
    }
    let probe = evaluate(letters, &(best - 1u32), None);
    (!probe.exceeded).then(|| probe.value.into_biguint())
}

/// First-improvement descent over single bit flips.
fn descend(letters: &mut [u8], best: &mut BigUint) {
    'outer: loop {
        for i in 0..letters.len() {
            letters[i] ^= 1;
            if let Some(v) = below(letters, best) {
                *best = v;
                continue 'outer;
            }
            letters[i] ^= 1;
        }
        return;
    }
}

/// Bit-flip local search with random restarts of growing strength.
///
/// The returned word never has larger `maxocc` than `seed`.
pub fn local_search_adaptive(seed: &Word, params: &LocalSearchParams) -> Result<(Word, OccCount), SearchError> {
    if seed.is_empty() {
        return Err(SearchError::EmptyInput);
    }
    let n = seed.len();
    let mut rng = ChaCha8Rng::seed_from_u64(params.rng_seed);
    let mut best_letters = seed.to_letters();
    let mut best = maxocc(seed).expect("non-empty").maxocc.into_biguint();
    descend(&mut best_letters, &mut best);

    let base = 1.0 / n as f64;
    let mut step = 1usize;
    let mut failures = 0;
    while step as f64 * base <= params.max_flip_rate {
        let rate = step as f64 * base;
        let mut cand = best_letters.clone();
        let mut flipped = false;
        for l in cand.iter_mut() {
            if rng.random_bool(rate.min(1.0)) {
                *l ^= 1;
                flipped = true;
            }
        }
        if !flipped {
            cand[rng.random_range(0..n)] ^= 1;
        }
        let mut value = maxocc(&Word::from_letters(&cand)).expect("non-empty").maxocc.into_biguint();
        descend(&mut cand, &mut value);
        if value < best {
            best = value;
            best_letters = cand;
            step = 1;
            failures = 0;
        } else {
            failures += 1;
            if failures >= params.attempts_per_rate.max(1) {
                failures = 0;
                step += 1;
            }
        }
    }
    Ok((Word::from_letters(&best_letters), OccCount::from(best)))
}

/// Best single-letter insertion over all given words, positions and letters.
///
/// Ties go to the smallest resulting word.
pub fn insertion_extend(words: &[Word]) -> Result<(Word, OccCount), SearchError> {
    let first = words.first().ok_or(SearchError::EmptyInput)?;
    if words.iter().any(|w| w.len() != first.len()) {
        return Err(SearchError::MixedLengths);
    }
    let mut candidates = BTreeSet::new();
    for w in words {
        let letters = w.to_letters();
        for pos in 0..=letters.len() {
            for a in [0u8, 1] {
                let mut c = letters.clone();
                c.insert(pos, a);
                candidates.insert(Word::from_letters(&c));
            }
        }
    }
    let mut best: Option<(Word, BigUint)> = None;
    for cand in candidates {
        let letters = cand.to_letters();
        let value = match &best {
            None => maxocc(&cand).expect("non-empty").maxocc.into_biguint(),
            Some((_, b)) => match below(&letters, b) {
                Some(v) => v,
                None => continue,
            },
        };
        best = Some((cand, value));
    }
    let (w, v) = best.expect("at least one candidate");
    Ok((w, OccCount::from(v)))
}
