use std::sync::LazyLock;

use num_bigint::BigUint;
use num_traits::One;

use super::count::{Counter, OccCount};

/// Rows of Pascal's triangle that fit in `u64` (row 67 is the last one).
pub const U64_ROWS: usize = 68;

static PASCAL: LazyLock<Vec<Vec<u64>>> = LazyLock::new(|| {
    let mut rows: Vec<Vec<u64>> = Vec::with_capacity(U64_ROWS);
    for n in 0..U64_ROWS {
        let mut row = vec![1u64; n + 1];
        for k in 1..n {
            row[k] = rows[n - 1][k - 1] + rows[n - 1][k];
        }
        rows.push(row);
    }
    rows
});

/// `C(n, k)` in `u64`, or `None` if the row is beyond the cached table.
pub fn binomial_u64(n: u64, k: u64) -> Option<u64> {
    if k > n {
        return Some(0);
    }
    PASCAL.get(n as usize).map(|row| row[k as usize])
}

/// Binomial coefficient, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> OccCount {
    if let Some(v) = binomial_u64(n, k) {
        return OccCount::from(v);
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    OccCount::from(acc)
}

/// Dense Pascal triangle over a counter type, for kernels that need many lookups.
pub(crate) struct BinomialTable<T> {
    rows: Vec<Vec<T>>,
}

impl<T: Counter> BinomialTable<T> {
    pub(crate) fn new(max_n: usize) -> Self {
        let mut rows: Vec<Vec<T>> = Vec::with_capacity(max_n + 1);
        for n in 0..=max_n {
            let mut row = vec![T::one(); n + 1];
            for k in 1..n {
                let mut v = rows[n - 1][k - 1].clone();
                v += &rows[n - 1][k];
                row[k] = v;
            }
            rows.push(row);
        }
        BinomialTable { rows }
    }

    #[inline]
    pub(crate) fn get(&self, n: usize, k: usize) -> &T {
        &self.rows[n][k]
    }

    #[inline]
    #[cfg(test)]
    pub(crate) fn get_or_zero(&self, n: usize, k: usize) -> T {
        if k > n {
            T::zero()
        } else {
            self.rows[n][k].clone()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(binomial(8, 4), 70);
        assert_eq!(binomial(4, 2), 6);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(binomial(0, 0), 1);
    }

    #[test]
    fn big_values_agree_with_pascal_rule() {
        // C(100, 50) = C(99, 49) + C(99, 50)
        let lhs = binomial(100, 50);
        let rhs = binomial(99, 49) + binomial(99, 50);
        assert_eq!(lhs, rhs);
        assert_eq!(binomial(100, 50).to_string(), "100891344545564193334812497256");
        assert_eq!(binomial(67, 33).to_u64(), Some(14226520737620288370));
        assert_eq!(binomial(68, 34).to_string(), "28453041475240576740");
    }

    #[test]
    fn table_matches_function() {
        let t: BinomialTable<BigUint> = BinomialTable::new(80);
        for n in 0..=80u64 {
            for k in 0..=n + 2 {
                assert_eq!(
                    OccCount::from(t.get_or_zero(n as usize, k as usize)),
                    binomial(n, k)
                );
            }
        }
    }
}
