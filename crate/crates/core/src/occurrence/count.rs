use std::fmt;
use std::ops::{Add, AddAssign, Mul};
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// An exact, non-negative occurrence count.
///
/// Serialized as a decimal string so that values beyond 64 bits survive JSON.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OccCount(BigUint);

impl OccCount {
    pub fn zero() -> Self {
        OccCount(BigUint::zero())
    }

    pub fn one() -> Self {
        OccCount(BigUint::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn as_biguint(&self) -> &BigUint {
        &self.0
    }

    pub fn into_biguint(self) -> BigUint {
        self.0
    }

    pub fn to_u64(&self) -> Option<u64> {
        self.0.to_u64()
    }

    /// Base-2 logarithm; zero maps to negative infinity.
    pub fn log2(&self) -> f64 {
        log2_biguint(&self.0)
    }
}

fn log2_biguint(x: &BigUint) -> f64 {
    if x.is_zero() {
        return f64::NEG_INFINITY;
    }
    let bits = x.bits();
    if bits <= 64 {
        return (x.to_u64().unwrap() as f64).log2();
    }
    let shift = bits - 64;
    let top = (x >> shift).to_u64().unwrap();
    (top as f64).log2() + shift as f64
}

impl From<u64> for OccCount {
    fn from(v: u64) -> Self {
        OccCount(BigUint::from(v))
    }
}

impl From<BigUint> for OccCount {
    fn from(v: BigUint) -> Self {
        OccCount(v)
    }
}

impl Add for OccCount {
    type Output = OccCount;
    fn add(self, rhs: OccCount) -> OccCount {
        OccCount(self.0 + rhs.0)
    }
}

impl AddAssign<&OccCount> for OccCount {
    fn add_assign(&mut self, rhs: &OccCount) {
        self.0 += &rhs.0;
    }
}

impl Mul for OccCount {
    type Output = OccCount;
    fn mul(self, rhs: OccCount) -> OccCount {
        OccCount(self.0 * rhs.0)
    }
}

impl<'a> Mul<&'a OccCount> for &'a OccCount {
    type Output = OccCount;
    fn mul(self, rhs: &OccCount) -> OccCount {
        OccCount(&self.0 * &rhs.0)
    }
}

impl PartialEq<u64> for OccCount {
    fn eq(&self, other: &u64) -> bool {
        self.0 == BigUint::from(*other)
    }
}

impl PartialOrd<u64> for OccCount {
    fn partial_cmp(&self, other: &u64) -> Option<std::cmp::Ordering> {
        Some(self.0.cmp(&BigUint::from(*other)))
    }
}

impl fmt::Display for OccCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl FromStr for OccCount {
    type Err = num_bigint::ParseBigIntError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.parse().map(OccCount)
    }
}

impl Serialize for OccCount {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(&self.0)
    }
}

impl<'de> Deserialize<'de> for OccCount {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Counter types used by the counting kernels: `u64` for short words, `BigUint` otherwise.
pub(crate) trait Counter:
    Clone + Ord + Zero + One + for<'a> AddAssign<&'a Self> + for<'a> Mul<&'a Self, Output = Self>
{
    fn into_count(self) -> OccCount;
}

impl Counter for u64 {
    fn into_count(self) -> OccCount {
        OccCount::from(self)
    }
}

impl Counter for BigUint {
    fn into_count(self) -> OccCount {
        OccCount(self)
    }
}
