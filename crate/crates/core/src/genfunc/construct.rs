//! Builds `f_{w,v}(x, y) = sum occ(w^m, v^r) x^m y^r` as a reduced rational function.
//!
//! Occurrences of `v` spread over several copies of `w` are split into
//! clusters (maximal runs of letters landing in the same copy). Pinned
//! counts on a single copy of `w`, summed over compositions of `|v|`, give
//! the per-position series; the positions are then tied together by a
//! linear system in the unknowns "occurrences of `v^r` ending at position t
//! of the last copy", solved by fraction-free elimination.

use num_bigint::BigInt;

use super::bivariate::BivariatePoly;
use super::poly::{bareiss_det, Ring, ZPoly, ZxyPoly};
use super::rational::RationalGF;
use super::GfLimits;
use crate::error::GfError;
use crate::word::Word;

/// `ends[s][t]`: occurrences of `u` in `w` with the first letter at `s` and the last at `t`.
fn pinned(w: &[u8], u: &[u8]) -> Vec<Vec<BigInt>> {
    let n = w.len();
    let mut ends = vec![vec![BigInt::zero(); n]; n];
    for s in 0..n {
        if w[s] != u[0] {
            continue;
        }
        if u.len() == 1 {
            ends[s][s] = BigInt::one();
            continue;
        }
        // acc[k]: ways to place u[..k] in w[s..p] with u[0] at s
        let mut acc = vec![BigInt::zero(); u.len() + 1];
        acc[1] = BigInt::one();
        for p in s + 1..n {
            for k in (1..u.len()).rev() {
                if w[p] == u[k] && !acc[k].is_zero() {
                    let add = acc[k].clone();
                    if k == u.len() - 1 {
                        ends[s][p] += &add;
                    }
                    acc[k + 1] += add;
                }
            }
        }
    }
    ends
}

/// Row and column sums of a pinned table, plus the total.
struct Marginals {
    by_first: Vec<BigInt>,
    by_last: Vec<BigInt>,
    total: BigInt,
}

fn marginals(ends: &[Vec<BigInt>]) -> Marginals {
    let n = ends.len();
    let by_first: Vec<BigInt> = ends.iter().map(|row| row.iter().sum()).collect();
    let by_last: Vec<BigInt> = (0..n).map(|t| ends.iter().map(|row| &row[t]).sum()).collect();
    let total = by_first.iter().sum();
    Marginals { by_first, by_last, total }
}

fn one_minus_x() -> ZPoly {
    ZPoly::new(vec![BigInt::one(), -BigInt::one()])
}

/// `G[s][t](x) = (1 - x)^(|v| - 1) * sum_{m >= 1} a_{s,t}(m) x^(m-1)`, where
/// `a_{s,t}(m)` counts occurrences of `v` in `w^m` starting at position `s`
/// of the first copy and ending at `t` of the last.
fn pinned_series(w: &[u8], v: &[u8]) -> Vec<Vec<ZPoly>> {
    let n = w.len();
    let len = v.len();
    // marginals for every factor v[i..j]
    let mut factor: Vec<Vec<Option<Marginals>>> = (0..len).map(|_| (0..=len).map(|_| None).collect()).collect();
    for i in 0..len {
        for j in i + 1..=len {
            factor[i][j] = Some(marginals(&pinned(w, &v[i..j])));
        }
    }
    let whole = pinned(w, v);

    // by_parts[l][s][t]: sum over compositions with l parts (l >= 2)
    let mut by_parts = vec![vec![vec![BigInt::zero(); n]; n]; len + 1];
    for mask in 0u64..1 << (len - 1) {
        let parts = mask.count_ones() as usize + 1;
        if parts < 2 {
            continue;
        }
        let mut cuts = vec![0];
        cuts.extend((1..len).filter(|&c| mask >> (c - 1) & 1 == 1));
        cuts.push(len);
        let mut mid = BigInt::one();
        for k in 1..parts - 1 {
            mid *= &factor[cuts[k]][cuts[k + 1]].as_ref().unwrap().total;
            if mid.is_zero() {
                break;
            }
        }
        if mid.is_zero() {
            continue;
        }
        let head = factor[0][cuts[1]].as_ref().unwrap();
        let tail = factor[cuts[parts - 1]][len].as_ref().unwrap();
        for (row, first) in by_parts[parts].iter_mut().zip(&head.by_first) {
            if first.is_zero() {
                continue;
            }
            let hs = first * &mid;
            for (cell, last) in row.iter_mut().zip(&tail.by_last) {
                if !last.is_zero() {
                    *cell += &hs * last;
                }
            }
        }
    }

    let omx = one_minus_x();
    let basis: Vec<ZPoly> = (1..=len)
        .map(|l| &ZPoly::monomial(BigInt::one(), l - 1) * &omx.pow((len - l) as u32))
        .collect();
    let mut g = vec![vec![ZPoly::zero(); n]; n];
    for s in 0..n {
        for t in 0..n {
            let mut acc = basis[0].scale(&whole[s][t]);
            for (l, b) in basis.iter().enumerate().skip(1) {
                let k = &by_parts[l + 1][s][t];
                if !k.is_zero() {
                    acc = &acc + &b.scale(k);
                }
            }
            g[s][t] = acc;
        }
    }
    g
}

/// Generating function of `occ(w^m, v^r)` in canonical form.
pub fn gf_construct(w: &Word, v: &Word) -> Result<RationalGF, GfError> {
    gf_construct_with(w, v, &GfLimits::default())
}

pub fn gf_construct_with(w: &Word, v: &Word, limits: &GfLimits) -> Result<RationalGF, GfError> {
    if w.is_empty() || v.is_empty() {
        return Err(GfError::EmptyWord);
    }
    if v.len() > limits.max_v_len {
        return Err(GfError::CompositionCap { len: v.len(), cap: limits.max_v_len });
    }
    let (wl, vl) = (w.to_letters(), v.to_letters());
    let n = wl.len();
    let g = pinned_series(&wl, &vl);

    // only end positions carrying the last letter of v can be nonzero
    let ends: Vec<usize> = (0..n).filter(|&t| wl[t] == *vl.last().unwrap()).collect();
    let col_sum = |t: usize, from: usize| -> ZPoly { (from..n).fold(ZPoly::zero(), |acc, s| &acc + &g[s][t]) };

    let x = ZPoly::var();
    let omx = one_minus_x();
    let omx_v = omx.pow(vl.len() as u32);
    let mut a = vec![vec![ZxyPoly::zero(); ends.len()]; ends.len()];
    let mut b = vec![ZxyPoly::zero(); ends.len()];
    for (i, &t) in ends.iter().enumerate() {
        let gt = col_sum(t, 0);
        let xg = &x * &gt;
        for (j, &tp) in ends.iter().enumerate() {
            // the previous copy of v ends at tp; the next may start later in the same copy of w
            let coupling = &xg + &(&omx * &col_sum(t, tp + 1));
            let diag = if i == j { omx_v.clone() } else { ZPoly::zero() };
            a[i][j] = ZxyPoly::new(vec![diag, coupling.negate()]);
        }
        b[i] = ZxyPoly::new(vec![ZPoly::zero(), gt]);
    }

    let det_a = bareiss_det(a.clone());
    if det_a.is_zero() {
        return Err(GfError::SingularSystem);
    }
    let mut bordered: Vec<Vec<ZxyPoly>> = a
        .into_iter()
        .zip(b)
        .map(|(mut row, bi)| {
            row.push(bi);
            row
        })
        .collect();
    let mut last = vec![ZxyPoly::one(); ends.len()];
    last.push(ZxyPoly::zero());
    bordered.push(last);
    let det_m = bareiss_det(bordered);

    // f = (det A - x det M) / ((1 - x) det A)
    let x_y = ZxyPoly::constant(x);
    let num = &det_a - &(&x_y * &det_m);
    let den = &ZxyPoly::constant(omx) * &det_a;
    RationalGF::new(BivariatePoly::from_zxy(&num), BivariatePoly::from_zxy(&den))
}
