use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use serde::Serialize;

use crate::error::EntropyError;
use crate::occurrence::{binomial, OccCount};

/// `C(n, ceil(n/2))`, attained only by words made of a single letter.
pub fn maxocc_upper_bound(n: usize) -> Result<OccCount, EntropyError> {
    if n == 0 {
        return Err(EntropyError::ZeroLength);
    }
    Ok(binomial(n as u64, n.div_ceil(2) as u64))
}

/// Expected occurrence count of a uniformly random subword, maximized over its length.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LowerBound {
    #[serde(serialize_with = "ser_ratio")]
    pub value: BigRational,
    /// Smallest maximizing length.
    pub length: usize,
}

fn ser_ratio<S: serde::Serializer>(v: &BigRational, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(v)
}

impl LowerBound {
    pub fn to_f64(&self) -> f64 {
        self.value.to_f64().unwrap_or(f64::INFINITY)
    }

    /// Smallest integer not below the bound; every `maxocc` is at least this.
    pub fn ceil(&self) -> OccCount {
        let c = self.value.ceil().to_integer();
        OccCount::from(c.to_biguint().expect("bound is positive"))
    }
}

/// `max_{0 <= l <= n} C(n, l) k^{-l}` as an exact rational.
pub fn maxocc_lower_bound(n: usize, k: u32) -> Result<LowerBound, EntropyError> {
    if n == 0 {
        return Err(EntropyError::ZeroLength);
    }
    if k < 2 {
        return Err(EntropyError::AlphabetTooSmall(k));
    }
    let mut best: Option<LowerBound> = None;
    let mut power = BigUint::one();
    for l in 0..=n {
        let c = binomial(n as u64, l as u64).into_biguint();
        let value = BigRational::new(BigInt::from(c), BigInt::from(power.clone()));
        if best.as_ref().is_none_or(|b| value > b.value) {
            best = Some(LowerBound { value, length: l });
        }
        power *= k;
    }
    Ok(best.unwrap())
}
