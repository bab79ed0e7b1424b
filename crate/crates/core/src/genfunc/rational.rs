use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::bivariate::{BivariatePoly, Parser};
use super::poly::Ring;
use crate::error::GfError;

/// A reduced fraction of bivariate integer polynomials.
///
/// Numerator and denominator share no polynomial factor, their coefficients
/// have joint content 1, and the denominator has a positive constant term.
#[derive(Clone, Debug)]
pub struct RationalGF {
    num: BivariatePoly,
    den: BivariatePoly,
}

impl RationalGF {
    /// Reduces `num / den` to canonical form.
    pub fn new(num: BivariatePoly, den: BivariatePoly) -> Result<Self, GfError> {
        if den.is_zero() {
            return Err(GfError::ZeroDenominator);
        }
        if Zero::is_zero(&den.coeff(0, 0)) {
            // a common factor might still cancel the zero constant term
            let r = reduce(num, den);
            if Zero::is_zero(&r.den.coeff(0, 0)) {
                return Err(GfError::SingularAtOrigin);
            }
            return Ok(r);
        }
        Ok(reduce(num, den))
    }

    pub fn numerator(&self) -> &BivariatePoly {
        &self.num
    }

    pub fn denominator(&self) -> &BivariatePoly {
        &self.den
    }

    /// Equality as rational functions, by cross-multiplication.
    pub fn same_function(&self, other: &RationalGF) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("serializable")
    }
}

fn reduce(num: BivariatePoly, den: BivariatePoly) -> RationalGF {
    let (n, d) = (num.to_zxy(), den.to_zxy());
    let g = Ring::gcd(&n, &d);
    let n = n.exact_div(&g).expect("gcd divides numerator");
    let d = d.exact_div(&g).expect("gcd divides denominator");
    let (mut num, mut den) = (BivariatePoly::from_zxy(&n), BivariatePoly::from_zxy(&d));

    let mut content: BigInt = Zero::zero();
    for (_, c) in num.terms().chain(den.terms()) {
        content = Integer::gcd(&content, c);
    }
    let lead = den.terms().next().map(|(_, c)| c.clone()).unwrap_or_default();
    if lead.is_negative() {
        content = -content;
    }
    if !Zero::is_zero(&content) && content != BigInt::from(1) {
        num = BivariatePoly::from_triples(num.to_triples().into_iter().map(|(a, b, c)| (a, b, c / &content)));
        den = BivariatePoly::from_triples(den.to_triples().into_iter().map(|(a, b, c)| (a, b, c / &content)));
    }
    RationalGF { num, den }
}

impl PartialEq for RationalGF {
    fn eq(&self, other: &Self) -> bool {
        self.same_function(other)
    }
}

impl Eq for RationalGF {}

impl fmt::Display for RationalGF {
    /// `(N) / (D)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

impl std::str::FromStr for RationalGF {
    type Err = GfError;

    fn from_str(s: &str) -> Result<Self, GfError> {
        let mut p = Parser::new(s);
        let num = p.expr()?;
        let den = if p.eat_slash() { p.expr()? } else { BivariatePoly::constant(1) };
        p.expect_end()?;
        RationalGF::new(num, den)
    }
}

#[derive(Serialize, Deserialize)]
struct Wire {
    num: Vec<(u32, u32, String)>,
    den: Vec<(u32, u32, String)>,
}

fn to_wire(p: &BivariatePoly) -> Vec<(u32, u32, String)> {
    p.to_triples().into_iter().map(|(a, b, c)| (a, b, c.to_string())).collect()
}

fn from_wire(v: Vec<(u32, u32, String)>) -> Result<BivariatePoly, String> {
    let triples = v
        .into_iter()
        .map(|(a, b, c)| c.parse::<BigInt>().map(|c| (a, b, c)).map_err(|e| e.to_string()))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(BivariatePoly::from_triples(triples))
}

impl Serialize for RationalGF {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        Wire { num: to_wire(&self.num), den: to_wire(&self.den) }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for RationalGF {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let w = Wire::deserialize(d)?;
        let num = from_wire(w.num).map_err(D::Error::custom)?;
        let den = from_wire(w.den).map_err(D::Error::custom)?;
        RationalGF::new(num, den).map_err(D::Error::custom)
    }
}
