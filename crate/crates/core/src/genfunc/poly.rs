//! Dense univariate polynomials over an exact integral domain.

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Exact arithmetic needed by elimination and gcd.
pub trait Ring: Clone + PartialEq + Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn negate(&self) -> Self;
    /// `self / d` when the division is exact.
    fn exact_div(&self, d: &Self) -> Option<Self>;
    /// Greatest common divisor with positive leading sign.
    fn gcd(&self, other: &Self) -> Self;
    /// Sign of the leading integer coefficient.
    fn lead_sign(&self) -> i8;
}

impl Ring for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn negate(&self) -> Self {
        -self
    }
    fn exact_div(&self, d: &Self) -> Option<Self> {
        if Zero::is_zero(d) {
            return None;
        }
        let (q, r) = self.div_rem(d);
        Zero::is_zero(&r).then_some(q)
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn lead_sign(&self) -> i8 {
        if self.is_negative() {
            -1
        } else if Zero::is_zero(self) {
            0
        } else {
            1
        }
    }
}

/// Coefficients from the constant term up; never has a zero leading coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UPoly<R> {
    coeffs: Vec<R>,
}

impl<R: Ring> UPoly<R> {
    pub fn new(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn constant(c: R) -> Self {
        Self::new(vec![c])
    }

    pub fn monomial(c: R, k: usize) -> Self {
        let mut v = vec![R::zero(); k];
        v.push(c);
        Self::new(v)
    }

    /// The variable itself.
    pub fn var() -> Self {
        Self::monomial(R::one(), 1)
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> R {
        self.coeffs.get(k).cloned().unwrap_or_else(R::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lc(&self) -> R {
        self.coeffs.last().cloned().unwrap_or_else(R::zero)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::constant(R::one());
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    pub fn scale(&self, c: &R) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    fn shift(&self, k: usize) -> Self {
        if self.coeffs.is_empty() {
            return self.clone();
        }
        let mut v = vec![R::zero(); k];
        v.extend(self.coeffs.iter().cloned());
        UPoly { coeffs: v }
    }

    /// Divides every coefficient exactly by `c`.
    pub fn div_scalar(&self, c: &R) -> Option<Self> {
        let coeffs = self.coeffs.iter().map(|a| a.exact_div(c)).collect::<Option<Vec<_>>>()?;
        Some(Self::new(coeffs))
    }

    /// Gcd of the coefficients.
    pub fn content(&self) -> R {
        let mut g = R::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
        }
        g
    }

    pub fn primitive_part(&self) -> Self {
        if self.coeffs.is_empty() {
            return self.clone();
        }
        self.div_scalar(&self.content()).expect("content divides")
    }

    /// `lc(d)^(deg self - deg d + 1) * self mod d`.
    pub fn pseudo_rem(&self, d: &Self) -> Self {
        let dd = d.degree().expect("division by zero polynomial");
        let lc = d.lc();
        let mut r = self.clone();
        let Some(dr) = r.degree() else { return r };
        if dr < dd {
            return r;
        }
        let mut e = dr - dd + 1;
        while let Some(deg) = r.degree().filter(|&k| k >= dd) {
            let t = d.shift(deg - dd).scale(&r.lc());
            r = &r.scale(&lc) - &t;
            e -= 1;
        }
        let mut f = R::one();
        for _ in 0..e {
            f = f.mul(&lc);
        }
        r.scale(&f)
    }

    fn normalize_sign(self) -> Self {
        if self.lead_sign() < 0 {
            self.negate()
        } else {
            self
        }
    }
}

impl<R: Ring> Ring for UPoly<R> {
    fn zero() -> Self {
        UPoly { coeffs: Vec::new() }
    }

    fn one() -> Self {
        Self::constant(R::one())
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn add(&self, o: &Self) -> Self {
        self + o
    }

    fn sub(&self, o: &Self) -> Self {
        self - o
    }

    fn mul(&self, o: &Self) -> Self {
        self * o
    }

    fn negate(&self) -> Self {
        UPoly { coeffs: self.coeffs.iter().map(R::negate).collect() }
    }

    fn exact_div(&self, d: &Self) -> Option<Self> {
        let dd = d.degree()?;
        let lc = d.lc();
        let mut r = self.clone();
        let mut q = vec![R::zero(); self.coeffs.len().saturating_sub(dd)];
        while let Some(dr) = r.degree() {
            if dr < dd {
                return None;
            }
            let c = r.lc().exact_div(&lc)?;
            r = &r - &d.shift(dr - dd).scale(&c);
            if r.degree().is_some_and(|k| k >= dr) {
                return None;
            }
            q[dr - dd] = c;
        }
        Some(Self::new(q))
    }

    /// Subresultant polynomial remainder sequence.
    fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = match (self.degree(), other.degree()) {
            (None, _) => return other.clone().normalize_sign(),
            (_, None) => return self.clone().normalize_sign(),
            (Some(x), Some(y)) if x >= y => (self.clone(), other.clone()),
            _ => (other.clone(), self.clone()),
        };
        let d = a.content().gcd(&b.content());
        a = a.primitive_part();
        b = b.primitive_part();
        let mut g = R::one();
        let mut h = R::one();
        loop {
            let delta = (a.degree().unwrap() - b.degree().unwrap()) as u32;
            let r = a.pseudo_rem(&b);
            match r.degree() {
                None => break,
                Some(0) => {
                    b = Self::one();
                    break;
                }
                Some(_) => {}
            }
            a = b;
            let mut hd = R::one();
            for _ in 0..delta {
                hd = hd.mul(&h);
            }
            b = r.div_scalar(&g.mul(&hd)).expect("subresultant division is exact");
            g = a.lc();
            // h <- g^delta / h^(delta - 1)
            h = if delta == 0 {
                h
            } else {
                let mut num = R::one();
                for _ in 0..delta {
                    num = num.mul(&g);
                }
                let mut den = R::one();
                for _ in 1..delta {
                    den = den.mul(&h);
                }
                num.exact_div(&den).expect("subresultant division is exact")
            };
        }
        b.primitive_part().scale(&d).normalize_sign()
    }

    fn lead_sign(&self) -> i8 {
        self.coeffs.last().map_or(0, R::lead_sign)
    }
}

impl<'a, R: Ring> Add<&'a UPoly<R>> for &'a UPoly<R> {
    type Output = UPoly<R>;
    fn add(self, rhs: &UPoly<R>) -> UPoly<R> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UPoly::new((0..n).map(|k| self.coeff(k).add(&rhs.coeff(k))).collect())
    }
}

impl<'a, R: Ring> Sub<&'a UPoly<R>> for &'a UPoly<R> {
    type Output = UPoly<R>;
    fn sub(self, rhs: &UPoly<R>) -> UPoly<R> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UPoly::new((0..n).map(|k| self.coeff(k).sub(&rhs.coeff(k))).collect())
    }
}

impl<'a, R: Ring> Mul<&'a UPoly<R>> for &'a UPoly<R> {
    type Output = UPoly<R>;
    fn mul(self, rhs: &UPoly<R>) -> UPoly<R> {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return UPoly::zero();
        }
        let mut out = vec![R::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        UPoly::new(out)
    }
}

impl<R: Ring> Neg for &UPoly<R> {
    type Output = UPoly<R>;
    fn neg(self) -> UPoly<R> {
        self.negate()
    }
}

/// Polynomials in x with integer coefficients.
pub type ZPoly = UPoly<BigInt>;
/// Polynomials in y with coefficients in Z[x].
pub type ZxyPoly = UPoly<ZPoly>;

/// Determinant by fraction-free elimination; every division is exact.
pub fn bareiss_det<R: Ring>(mut m: Vec<Vec<R>>) -> R
{
    let n = m.len();
    if n == 0 {
        return R::one();
    }
    let mut negate = false;
    let mut prev = R::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    negate = !negate;
                }
                None => return R::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = m[i][j].mul(&m[k][k]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = t.exact_div(&prev).expect("fraction-free step divides exactly");
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if negate {
        d.negate()
    } else {
        d
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zp(c: &[i64]) -> ZPoly {
        ZPoly::new(c.iter().map(|&v| BigInt::from(v)).collect())
    }

    #[test]
    fn integer_poly_gcd() {
        // (x - 1)(x + 2) and (x - 1)(3x + 5), scaled by 4 and 6
        let a = zp(&[-2, 1, 1]).scale(&BigInt::from(4));
        let b = zp(&[-5, 2, 3]).scale(&BigInt::from(6));
        assert_eq!(a.gcd(&b), zp(&[-2, 2]));
        assert_eq!(zp(&[3, 6]).gcd(&zp(&[])), zp(&[1, 2]).scale(&BigInt::from(3)));
        assert_eq!(zp(&[1, 1]).gcd(&zp(&[2, 1])), zp(&[1]));
    }

    #[test]
    fn exact_division() {
        let a = zp(&[1, -1]);
        let b = zp(&[1, 2, 1]);
        let p = &a * &b;
        assert_eq!(p.exact_div(&b), Some(a.clone()));
        assert_eq!(p.exact_div(&zp(&[1, 3])), None);
        assert_eq!(zp(&[1, 2]).exact_div(&zp(&[2])), None);
    }

    #[test]
    fn pseudo_remainder_identity() {
        let a = zp(&[3, 0, 5, 2]);
        let b = zp(&[1, 3]);
        let r = a.pseudo_rem(&b);
        assert!(r.degree().is_none_or(|d| d == 0));
        // 3^3 * a(-1/3) = 27 * (3 + 5/9 - 2/27)
        assert_eq!(r, zp(&[81 + 15 - 2]));
    }

    #[test]
    fn bivariate_gcd_and_det() {
        let x = ZxyPoly::constant(ZPoly::var());
        let y = ZxyPoly::var();
        let one = ZxyPoly::one();
        let f = &(&x + &y) * &(&one - &x);
        let g = &(&x + &y) * &(&y + &one);
        assert_eq!(f.gcd(&g), &x + &y);
        let m = vec![vec![x.clone(), y.clone()], vec![one.clone(), x.clone()]];
        assert_eq!(bareiss_det(m), &(&x * &x) - &y);
        let z = ZxyPoly::zero();
        let m = vec![vec![z.clone(), one.clone(), x.clone()], vec![one.clone(), z.clone(), y.clone()], vec![x.clone(), y.clone(), z]];
        assert_eq!(bareiss_det(m), (&x * &y).scale(&ZPoly::constant(BigInt::from(2))));
    }
}
