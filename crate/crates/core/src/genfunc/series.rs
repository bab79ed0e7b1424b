use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::Serialize;

use super::rational::RationalGF;
use super::GfLimits;
use crate::error::GfError;
use crate::occurrence::OccCount;
use crate::word::Word;

/// `table[m][r] = occ(w^m, v^r)` for `0 <= m <= M`, `0 <= r <= R`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct OccMatrix {
    pub w: Option<Word>,
    pub v: Option<Word>,
    pub table: Vec<Vec<OccCount>>,
}

impl OccMatrix {
    pub fn get(&self, m: usize, r: usize) -> &OccCount {
        &self.table[m][r]
    }

    pub fn max_m(&self) -> usize {
        self.table.len() - 1
    }

    pub fn max_r(&self) -> usize {
        self.table[0].len() - 1
    }

    /// Same counts, ignoring labels.
    pub fn same_values(&self, other: &OccMatrix) -> bool {
        self.table == other.table
    }
}

fn check_budget(w: &Word, v: &Word, m: usize, r: usize, limits: &GfLimits) -> Result<(), GfError> {
    let cost = (m as u128) * (r as u128) * (w.len() as u128) * (v.len() as u128);
    if cost > limits.series_budget as u128 {
        return Err(GfError::BudgetExceeded {
            rows: m + 1,
            cols: r + 1,
            w_len: w.len(),
            v_len: v.len(),
            budget: limits.series_budget,
        });
    }
    Ok(())
}

/// One prefix-count sweep of `w^m` against `v^r`; `snapshot` sees the counts
/// after each full copy of `w`.
fn sweep(w: &[u8], v: &[u8], m: usize, r: usize, mut snapshot: impl FnMut(usize, &[BigUint])) {
    let plen = r * v.len();
    let mut ways = vec![BigUint::zero(); plen + 1];
    ways[0] = BigUint::from(1u32);
    snapshot(0, &ways);
    for copy in 1..=m {
        for (i, &a) in w.iter().enumerate() {
            // prefix j can only be complete once enough letters are read
            let read = (copy - 1) * w.len() + i + 1;
            for j in (1..=plen.min(read)).rev() {
                if v[(j - 1) % v.len()] == a && !ways[j - 1].is_zero() {
                    let (lo, hi) = ways.split_at_mut(j);
                    hi[0] += &lo[j - 1];
                }
            }
        }
        snapshot(copy, &ways);
    }
}

/// `occ(w^m, v^r)` for all `m <= max_m`, `r <= max_r`.
pub fn occ_table_periodic(w: &Word, v: &Word, max_m: usize, max_r: usize) -> Result<OccMatrix, GfError> {
    occ_table_periodic_with(w, v, max_m, max_r, &GfLimits::default())
}

pub fn occ_table_periodic_with(
    w: &Word,
    v: &Word,
    max_m: usize,
    max_r: usize,
    limits: &GfLimits,
) -> Result<OccMatrix, GfError> {
    if w.is_empty() || v.is_empty() {
        return Err(GfError::EmptyWord);
    }
    check_budget(w, v, max_m, max_r, limits)?;
    let step = v.len();
    let mut table = Vec::with_capacity(max_m + 1);
    sweep(&w.to_letters(), &v.to_letters(), max_m, max_r, |_, ways| {
        table.push((0..=max_r).map(|r| OccCount::from(ways[r * step].clone())).collect());
    });
    Ok(OccMatrix { w: Some(w.clone()), v: Some(v.clone()), table })
}

/// `occ(w^m, v^r)` for `r <= max_r` at a single `m`.
pub fn occ_row_periodic(w: &Word, v: &Word, m: usize, max_r: usize, limits: &GfLimits) -> Result<Vec<OccCount>, GfError> {
    if w.is_empty() || v.is_empty() {
        return Err(GfError::EmptyWord);
    }
    check_budget(w, v, m, max_r, limits)?;
    let step = v.len();
    let mut row = Vec::new();
    sweep(&w.to_letters(), &v.to_letters(), m, max_r, |copy, ways| {
        if copy == m {
            row = (0..=max_r).map(|r| OccCount::from(ways[r * step].clone())).collect();
        }
    });
    Ok(row)
}

/// Taylor coefficients of `gf` at the origin, for `m <= max_m`, `r <= max_r`.
///
/// Solves `Q * F = P` term by term. Fails if a coefficient is not a
/// non-negative integer, which never happens for a counting series.
pub fn gf_series(gf: &RationalGF, max_m: usize, max_r: usize) -> Result<OccMatrix, GfError> {
    let q0 = gf.denominator().coeff(0, 0);
    if q0.is_zero() {
        return Err(GfError::SingularAtOrigin);
    }
    let den: Vec<(usize, usize, BigInt)> = gf
        .denominator()
        .to_triples()
        .into_iter()
        .filter(|(a, b, _)| (*a, *b) != (0, 0))
        .map(|(a, b, c)| (a as usize, b as usize, c))
        .collect();
    let mut f = vec![vec![BigInt::zero(); max_r + 1]; max_m + 1];
    for m in 0..=max_m {
        for r in 0..=max_r {
            let mut acc = gf.numerator().coeff(m as u32, r as u32);
            for (a, b, c) in &den {
                if *a <= m && *b <= r {
                    acc -= c * &f[m - a][r - b];
                }
            }
            let (q, rem) = acc.div_rem(&q0);
            if !rem.is_zero() || q.is_negative() {
                return Err(GfError::NotACountingSeries { m, r });
            }
            f[m][r] = q;
        }
    }
    let table = f
        .into_iter()
        .map(|row| row.into_iter().map(|c| OccCount::from(c.to_biguint().unwrap())).collect())
        .collect();
    Ok(OccMatrix { w: None, v: None, table })
}
