use std::collections::BTreeMap;

use serde::Serialize;

use crate::occurrence::OccCount;

/// A pair of lengths where `min(n + m) < min(n) * min(m)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub n: usize,
    pub m: usize,
    pub combined: OccCount,
    pub product: OccCount,
}

/// Checks `min(n + m) >= min(n) * min(m)` for every pair `n <= m` covered by `mins`.
pub fn verify_superadditivity(mins: &BTreeMap<usize, OccCount>) -> Vec<Violation> {
    let mut out = Vec::new();
    for (&n, a) in mins {
        for (&m, b) in mins.range(n..) {
            let Some(combined) = mins.get(&(n + m)) else { continue };
            let product = a * b;
            if *combined < product {
                out.push(Violation { n, m, combined: combined.clone(), product });
            }
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct LimitBound {
    /// `log2(min maxocc(n)) / n` at the best length.
    pub bits_per_letter: f64,
    pub n: usize,
}

/// Largest per-letter minimal entropy among the given exact minima; a lower
/// bound on the limit of the per-letter minimal entropy.
pub fn limit_lower_bound(mins: &BTreeMap<usize, OccCount>) -> Option<LimitBound> {
    mins.iter()
        .filter(|(&n, _)| n > 0)
        .map(|(&n, v)| LimitBound { bits_per_letter: v.log2() / n as f64, n })
        .fold(None, |best: Option<LimitBound>, b| match best {
            Some(x) if x.bits_per_letter >= b.bits_per_letter => Some(x),
            _ => Some(b),
        })
}
