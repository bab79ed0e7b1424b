use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use serde::Serialize;

use super::series::{occ_row_periodic, occ_table_periodic};
use super::GfLimits;
use crate::entropy::maxocc;
use crate::error::GfError;
use crate::occurrence::{binomial, OccCount};
use crate::word::Word;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Mismatch {
    pub check: &'static str,
    pub m: usize,
    pub r: usize,
    pub expected: String,
    pub actual: String,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct ClosedFormReport {
    pub checked: usize,
    pub mismatches: Vec<Mismatch>,
}

impl ClosedFormReport {
    pub fn ok(&self) -> bool {
        self.mismatches.is_empty()
    }

    fn compare(&mut self, check: &'static str, m: usize, r: usize, expected: &BigInt, actual: &BigInt) {
        self.checked += 1;
        if expected != actual {
            self.mismatches.push(Mismatch { check, m, r, expected: expected.to_string(), actual: actual.to_string() });
        }
    }
}

fn word(s: &str) -> Word {
    s.parse().expect("valid word")
}

fn int(c: &OccCount) -> BigInt {
    BigInt::from(c.as_biguint().clone())
}

/// `C(m + r, m - r)`, zero when `r > m`.
fn shifted_binomial(m: usize, r: usize) -> BigInt {
    if r > m {
        return BigInt::zero();
    }
    int(&binomial((m + r) as u64, (m - r) as u64))
}

/// Right-hand side of
/// `c(m,r) = 4c(m-1,r) - 6c(m-2,r) + 4c(m-3,r) - c(m-4,r) + k c(m-3,r-1) + 36c(m-2,r-1) + 9c(m-1,r-1)`.
///
/// The coefficient matching the denominator `(1-x)^4 - 9x(1+2x)^2 y` is `k = +36`.
pub fn c_recurrence(c: &impl Fn(isize, usize) -> BigInt, m: isize, r: usize, k: i64) -> BigInt {
    4 * c(m - 1, r) - 6 * c(m - 2, r) + 4 * c(m - 3, r) - c(m - 4, r)
        + k * c(m - 3, r - 1)
        + 36 * c(m - 2, r - 1)
        + 9 * c(m - 1, r - 1)
}

/// Checks the three periodic families against direct counts for all `m, r <= max`:
/// `occ((0011)^m, (01)^r) = 4^r C(m+r, m-r)`, `occ((01)^m, (01)^r) = C(m+r, m-r)`,
/// the first being `4^r` times the second, and the seven-term recurrence for
/// `occ((000111)^m, (0011)^r)` when `m, r >= 1`, with `c(m, 0) = 1` and `c`
/// vanishing at negative `m`.
pub fn verify_closed_forms(max: usize) -> Result<ClosedFormReport, GfError> {
    let mut report = ClosedFormReport::default();
    let a = occ_table_periodic(&word("0011"), &word("01"), max, max)?;
    let b = occ_table_periodic(&word("01"), &word("01"), max, max)?;
    let c = occ_table_periodic(&word("000111"), &word("0011"), max, max)?;
    let four = BigInt::from(4);
    for m in 0..=max {
        for r in 0..=max {
            let bin = shifted_binomial(m, r);
            let pow = four.pow(r as u32);
            report.compare("a = 4^r C(m+r, m-r)", m, r, &(&pow * &bin), &int(a.get(m, r)));
            report.compare("b = C(m+r, m-r)", m, r, &bin, &int(b.get(m, r)));
            report.compare("a = 4^r b", m, r, &(&pow * int(b.get(m, r))), &int(a.get(m, r)));
        }
    }
    let cv = |m: isize, r: usize| -> BigInt { if m < 0 { BigInt::zero() } else { int(c.get(m as usize, r)) } };
    for m in 0..=max {
        report.compare("c(m, 0) = 1", m, 0, &BigInt::from(1), &cv(m as isize, 0));
    }
    for m in 1..=max as isize {
        for r in 1..=max {
            let rec = c_recurrence(&cv, m, r, 36);
            report.compare("c recurrence", m as usize, r, &rec, &cv(m, r));
        }
    }
    Ok(report)
}

/// Best power of `v` inside `w^m`.
#[derive(Clone, Debug, Serialize)]
pub struct PeriodicEstimate {
    pub w: Word,
    pub v: Word,
    pub m: usize,
    /// Smallest `r` maximizing `occ(w^m, v^r)`.
    pub r_star: usize,
    pub max_occ: OccCount,
    /// `log2(max_occ) / (m |w|)`.
    pub per_letter_bits: f64,
    /// `r_star / m`.
    pub ratio: f64,
    /// True when the family is known to have a most frequent subword that is a
    /// power of `v`, so that `max_occ = maxocc(w^m)`.
    pub certified: bool,
}

const PROVEN_FAMILIES: [(&str, &str); 3] = [("0011", "01"), ("01", "01"), ("000111", "0011")];

pub fn periodic_entropy_estimate(w: &Word, v: &Word, m: usize) -> Result<PeriodicEstimate, GfError> {
    periodic_entropy_estimate_with(w, v, m, &GfLimits::default())
}

pub fn periodic_entropy_estimate_with(w: &Word, v: &Word, m: usize, limits: &GfLimits) -> Result<PeriodicEstimate, GfError> {
    if w.is_empty() || v.is_empty() || m == 0 {
        return Err(GfError::EmptyWord);
    }
    let max_r = m * w.len() / v.len();
    let row = occ_row_periodic(w, v, m, max_r, limits)?;
    let (mut r_star, mut best) = (0, BigUint::zero());
    for (r, c) in row.iter().enumerate() {
        if c.as_biguint() > &best {
            best = c.as_biguint().clone();
            r_star = r;
        }
    }
    let max_occ = OccCount::from(best);
    let (ws, vs) = (w.to_string(), v.to_string());
    Ok(PeriodicEstimate {
        per_letter_bits: max_occ.log2() / (m * w.len()) as f64,
        ratio: r_star as f64 / m as f64,
        certified: PROVEN_FAMILIES.iter().any(|&(a, b)| a == ws && b == vs),
        r_star,
        max_occ,
        w: w.clone(),
        v: v.clone(),
        m,
    })
}

/// Whether some power of `v` is a most frequent subword of `w^m`, by
/// comparing the best power against the full maximum.
pub fn power_is_most_frequent(w: &Word, v: &Word, m: usize) -> Result<bool, GfError> {
    let text = w.pow(m);
    if text.is_empty() {
        return Err(GfError::EmptyWord);
    }
    let best = maxocc(&text).expect("non-empty").maxocc;
    let est = periodic_entropy_estimate(w, v, m)?;
    Ok(est.max_occ == best)
}
