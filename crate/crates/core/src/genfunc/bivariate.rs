//! Sparse integer polynomials in `x` and `y`, with text parsing and printing.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::poly::{ZPoly, ZxyPoly};
use crate::error::GfError;

/// Exponents of `x^dx * y^dy`, ordered by total degree, then by `dy`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub dx: u32,
    pub dy: u32,
}

impl Ord for Monomial {
    fn cmp(&self, o: &Self) -> Ordering {
        (self.dx + self.dy, self.dy).cmp(&(o.dx + o.dy, o.dy))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BivariatePoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl BivariatePoly {
    pub fn zero() -> Self {
        BivariatePoly::default()
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        BivariatePoly::term(c, 0, 0)
    }

    pub fn x() -> Self {
        BivariatePoly::term(1, 1, 0)
    }

    pub fn y() -> Self {
        BivariatePoly::term(1, 0, 1)
    }

    pub fn term(c: impl Into<BigInt>, dx: u32, dy: u32) -> Self {
        let mut p = BivariatePoly::zero();
        p.add_term(Monomial { dx, dy }, c.into());
        p
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(m).or_default();
        *e += c;
        if e.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, dx: u32, dy: u32) -> BigInt {
        self.terms.get(&Monomial { dx, dy }).cloned().unwrap_or_default()
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (Monomial, &BigInt)> {
        self.terms.iter().map(|(m, c)| (*m, c))
    }

    pub fn degree_x(&self) -> u32 {
        self.terms.keys().map(|m| m.dx).max().unwrap_or(0)
    }

    pub fn degree_y(&self) -> u32 {
        self.terms.keys().map(|m| m.dy).max().unwrap_or(0)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(BivariatePoly::constant(1), |acc, _| &acc * self)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let mut p = BivariatePoly::zero();
        for (m, v) in &self.terms {
            p.add_term(*m, v * c);
        }
        p
    }

    pub(crate) fn from_zxy(p: &ZxyPoly) -> Self {
        let mut out = BivariatePoly::zero();
        for (dy, cx) in p.coeffs().iter().enumerate() {
            for (dx, c) in cx.coeffs().iter().enumerate() {
                out.add_term(Monomial { dx: dx as u32, dy: dy as u32 }, c.clone());
            }
        }
        out
    }

    pub(crate) fn to_zxy(&self) -> ZxyPoly {
        let mut rows = vec![vec![BigInt::zero(); self.degree_x() as usize + 1]; self.degree_y() as usize + 1];
        for (m, c) in &self.terms {
            rows[m.dy as usize][m.dx as usize] = c.clone();
        }
        ZxyPoly::new(rows.into_iter().map(ZPoly::new).collect())
    }

    /// Rebuilds from `(dx, dy, coefficient)` triples; repeated monomials add up.
    pub fn from_triples(triples: impl IntoIterator<Item = (u32, u32, BigInt)>) -> Self {
        let mut p = BivariatePoly::zero();
        for (dx, dy, c) in triples {
            p.add_term(Monomial { dx, dy }, c);
        }
        p
    }

    pub fn to_triples(&self) -> Vec<(u32, u32, BigInt)> {
        self.terms.iter().map(|(m, c)| (m.dx, m.dy, c.clone())).collect()
    }
}

impl<'a> Add<&'a BivariatePoly> for &'a BivariatePoly {
    type Output = BivariatePoly;
    fn add(self, rhs: &BivariatePoly) -> BivariatePoly {
        let mut p = self.clone();
        for (m, c) in &rhs.terms {
            p.add_term(*m, c.clone());
        }
        p
    }
}

impl<'a> Sub<&'a BivariatePoly> for &'a BivariatePoly {
    type Output = BivariatePoly;
    fn sub(self, rhs: &BivariatePoly) -> BivariatePoly {
        let mut p = self.clone();
        for (m, c) in &rhs.terms {
            p.add_term(*m, -c);
        }
        p
    }
}

impl<'a> Mul<&'a BivariatePoly> for &'a BivariatePoly {
    type Output = BivariatePoly;
    fn mul(self, rhs: &BivariatePoly) -> BivariatePoly {
        let mut p = BivariatePoly::zero();
        for (a, c) in &self.terms {
            for (b, d) in &rhs.terms {
                p.add_term(Monomial { dx: a.dx + b.dx, dy: a.dy + b.dy }, c * d);
            }
        }
        p
    }
}

impl Neg for &BivariatePoly {
    type Output = BivariatePoly;
    fn neg(self) -> BivariatePoly {
        self.scale(&-BigInt::one())
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, m: Monomial) -> fmt::Result {
    let mut first = true;
    for (name, e) in [("x", m.dx), ("y", m.dy)] {
        if e == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        f.write_str(name)?;
        if e > 1 {
            write!(f, "^{e}")?;
        }
    }
    Ok(())
}

impl fmt::Display for BivariatePoly {
    /// For example `1 - 2*x + x^2 - 4*x*y`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            let constant = m.dx == 0 && m.dy == 0;
            if constant {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                write_monomial(f, *m)?;
            }
        }
        Ok(())
    }
}

/// Recursive-descent parser for integer polynomial expressions in `x`, `y`.
///
/// Grammar: sums and differences of products, `^` with a non-negative
/// integer exponent, parentheses, unary minus. A top-level `/` splits a
/// numerator from a denominator.
pub(crate) struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    pub fn new(src: &'a str) -> Self {
        Parser { src: src.as_bytes(), pos: 0 }
    }

    fn err(&self, msg: impl Into<String>) -> GfError {
        GfError::Parse { pos: self.pos, msg: msg.into() }
    }

    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    pub fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    pub fn expect_end(&mut self) -> Result<(), GfError> {
        if self.at_end() {
            Ok(())
        } else {
            Err(self.err("unexpected trailing input"))
        }
    }

    pub fn eat_slash(&mut self) -> bool {
        self.eat(b'/')
    }

    pub fn expr(&mut self) -> Result<BivariatePoly, GfError> {
        let mut acc = self.product()?;
        loop {
            if self.eat(b'+') {
                acc = &acc + &self.product()?;
            } else if self.eat(b'-') {
                acc = &acc - &self.product()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn product(&mut self) -> Result<BivariatePoly, GfError> {
        let mut acc = self.unary()?;
        loop {
            if self.eat(b'*') {
                acc = &acc * &self.unary()?;
            } else if matches!(self.peek(), Some(b'(' | b'x' | b'y')) {
                // implicit multiplication such as 9x or x(1 - x)
                acc = &acc * &self.unary()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<BivariatePoly, GfError> {
        if self.eat(b'-') {
            return Ok(-&self.unary()?);
        }
        if self.eat(b'+') {
            return self.unary();
        }
        let base = self.atom()?;
        if self.eat(b'^') {
            let e = self.integer()?;
            let e = u32::try_from(&e).map_err(|_| self.err("exponent out of range"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<BigInt, GfError> {
        self.skip_ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected an integer"));
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(text.parse().unwrap())
    }

    fn atom(&mut self) -> Result<BivariatePoly, GfError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.err("expected ')'"));
                }
                Ok(e)
            }
            Some(b'x') => {
                self.pos += 1;
                Ok(BivariatePoly::x())
            }
            Some(b'y') => {
                self.pos += 1;
                Ok(BivariatePoly::y())
            }
            Some(c) if c.is_ascii_digit() => Ok(BivariatePoly::constant(self.integer()?)),
            Some(c) => Err(self.err(format!("unexpected character {:?}", c as char))),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

impl std::str::FromStr for BivariatePoly {
    type Err = GfError;

    fn from_str(s: &str) -> Result<Self, GfError> {
        let mut p = Parser::new(s);
        let e = p.expr()?;
        p.expect_end()?;
        Ok(e)
    }
}
