//! Reduced rational functions num/den over a coefficient field.
//!
//! Canonical form: gcd(num, den) = 1 and den monic, so equality is
//! structural. Zero is 0/1.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::rational::Rational;
use crate::scalar::Scalar;
use crate::zeta8::{Galois, Zeta8};

#[derive(Clone, PartialEq, Eq)]
pub struct RatFun<K: Scalar> {
    num: Poly<K>,
    den: Poly<K>,
}

impl<K: Scalar> RatFun<K> {
    pub fn new(num: Poly<K>, den: Poly<K>) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: Poly<K>, den: Poly<K>) -> Self {
        if num.is_zero() {
            return RatFun { num: Poly::zero(), den: Poly::one() };
        }
        let g = num.gcd(&den).expect("den nonzero");
        let mut num = num.div_exact(&g).expect("gcd divides");
        let mut den = den.div_exact(&g).expect("gcd divides");
        let lc_inv = den.leading_coeff().inverse().expect("den nonzero");
        num = num.scale(&lc_inv);
        den = den.scale(&lc_inv);
        RatFun { num, den }
    }

    pub fn from_poly(p: Poly<K>) -> Self {
        RatFun { num: p, den: Poly::one() }
    }

    pub fn constant(c: K) -> Self {
        RatFun::from_poly(Poly::constant(c))
    }

    pub fn from_int(n: i64) -> Self {
        RatFun::constant(K::from_int(n))
    }

    pub fn zero() -> Self {
        RatFun { num: Poly::zero(), den: Poly::one() }
    }

    pub fn one() -> Self {
        RatFun::from_poly(Poly::one())
    }

    pub fn var() -> Self {
        RatFun::from_poly(Poly::var())
    }

    pub fn num(&self) -> &Poly<K> {
        &self.num
    }

    pub fn den(&self) -> &Poly<K> {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// `Some(&num)` when the denominator is 1.
    pub fn as_poly(&self) -> Option<&Poly<K>> {
        if self.den.is_one() {
            Some(&self.num)
        } else {
            None
        }
    }

    pub fn as_constant(&self) -> Option<K> {
        if self.den.is_one() && self.num.is_constant() {
            Some(self.num.coeff(0))
        } else {
            None
        }
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(self.den.clone(), self.num.clone()))
    }

    pub fn powi(&self, e: i32) -> Result<Self> {
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut acc = RatFun::one();
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    /// Evaluation; `None` at poles.
    pub fn eval(&self, x: &K) -> Option<K> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(x).mul_ref(&d.inverse().ok()?))
    }

    /// Order of vanishing at infinity: `deg den - deg num`.
    pub fn infinity_valuation(&self) -> Option<i64> {
        if self.is_zero() {
            return None; // +infinity
        }
        Some(self.den.deg_or0() as i64 - self.num.deg_or0() as i64)
    }

    /// `self(1/s) * s^w` as a rational function of s.
    pub fn reciprocal_weighted(&self, w: i64) -> Self {
        if self.is_zero() {
            return RatFun::zero();
        }
        let dn = self.num.deg_or0();
        let dd = self.den.deg_or0();
        let rn = self.num.reversed(dn).expect("exact degree");
        let rd = self.den.reversed(dd).expect("exact degree");
        // self(1/s) s^w = rn(s) / rd(s) * s^{w + dd - dn}
        let shift = w + dd as i64 - dn as i64;
        let (mut num, mut den) = (rn, rd);
        if shift >= 0 {
            num = &num * &Poly::monomial(K::one(), shift as usize);
        } else {
            den = &den * &Poly::monomial(K::one(), (-shift) as usize);
        }
        Self::reduce(num, den)
    }

    /// Substitute `t -> c * t`.
    pub fn substitute_scaled_var(&self, c: &K) -> Self {
        let sub = Poly::monomial(c.clone(), 1);
        Self::reduce(self.num.compose(&sub), self.den.compose(&sub))
    }

    pub fn conjugate(&self, g: Galois) -> Self {
        // conjugation preserves reducedness and monic denominators
        RatFun { num: self.num.conjugate(g), den: self.den.conjugate(g) }
    }

    pub fn sqrt(&self) -> Option<Self> {
        Some(RatFun { num: self.num.sqrt()?, den: self.den.sqrt()? })
    }

    pub fn scale(&self, c: &K) -> Self {
        if c.is_zero() {
            return RatFun::zero();
        }
        RatFun { num: self.num.scale(c), den: self.den.clone() }
    }
}

impl RatFun<Rational> {
    pub fn promote(&self) -> RatFun<Zeta8> {
        RatFun { num: self.num.promote(), den: self.den.promote() }
    }
}

impl RatFun<Zeta8> {
    pub fn demote(&self) -> Option<RatFun<Rational>> {
        Some(RatFun { num: self.num.demote()?, den: self.den.demote()? })
    }

    /// True when both numerator and denominator lie in Q[t].
    pub fn is_q_rational(&self) -> bool {
        self.demote().is_some()
    }
}

impl<K: Scalar> Add for &RatFun<K> {
    type Output = RatFun<K>;
    fn add(self, rhs: &RatFun<K>) -> RatFun<K> {
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        let den = &self.den * &rhs.den;
        RatFun::reduce(num, den)
    }
}

impl<K: Scalar> Sub for &RatFun<K> {
    type Output = RatFun<K>;
    fn sub(self, rhs: &RatFun<K>) -> RatFun<K> {
        let num = &(&self.num * &rhs.den) - &(&rhs.num * &self.den);
        let den = &self.den * &rhs.den;
        RatFun::reduce(num, den)
    }
}

impl<K: Scalar> Mul for &RatFun<K> {
    type Output = RatFun<K>;
    fn mul(self, rhs: &RatFun<K>) -> RatFun<K> {
        RatFun::reduce(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl<K: Scalar> Div for &RatFun<K> {
    type Output = RatFun<K>;
    fn div(self, rhs: &RatFun<K>) -> RatFun<K> {
        assert!(!rhs.is_zero(), "division by zero rational function");
        RatFun::reduce(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

impl<K: Scalar> Neg for &RatFun<K> {
    type Output = RatFun<K>;
    fn neg(self) -> RatFun<K> {
        RatFun { num: -&self.num, den: self.den.clone() }
    }
}

impl<K: Scalar> fmt::Display for RatFun<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl<K: Scalar> fmt::Debug for RatFun<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    type QR = RatFun<Rational>;

    fn pq(num: &[i64], den: &[i64]) -> QR {
        RatFun::new(Poly::from_ints(num), Poly::from_ints(den)).unwrap()
    }

    #[test]
    fn canonical_form() {
        // (2t^2 - 2) / (4t - 4) = (t + 1) / 2, a polynomial
        let r = pq(&[-2, 0, 2], &[-4, 4]);
        assert_eq!(r, pq(&[1, 1], &[2]));
        assert!(r.den().is_one());
        // a genuine denominator comes out monic
        let r = pq(&[1], &[2, 4]);
        assert_eq!(r.den().leading_coeff(), Rational::one());
        assert_eq!(r.num(), &Poly::from_ints(&[1]).scale(&Rational::from_frac(1, 4)));
    }

    #[test]
    fn arithmetic_and_inverse() {
        let a = pq(&[1, 1], &[0, 1]); // (t+1)/t
        let b = pq(&[0, 1], &[1, 1]); // t/(t+1)
        assert!((&a * &b).is_one());
        let s = &a + &b;
        let back = &s - &b;
        assert_eq!(back, a);
        assert_eq!(a.inverse().unwrap(), b);
        assert!(QR::zero().inverse().is_err());
    }

    #[test]
    fn reciprocal_weighting() {
        // x = (t^2 - 1)/t, w = 0: x(1/s) = (1 - s^2)/s^2 * s = (1-s^2)/s
        let x = pq(&[-1, 0, 1], &[0, 1]);
        let y = x.reciprocal_weighted(0);
        assert_eq!(y, pq(&[1, 0, -1], &[0, 1]));
        // with weight 2: s^2 * x(1/s) = s(1 - s^2)
        let y = x.reciprocal_weighted(2);
        assert_eq!(y, pq(&[0, 1, 0, -1], &[1]));
        assert_eq!(x.infinity_valuation(), Some(-1));
    }

    #[test]
    fn scaled_substitution() {
        // r(t) = t^2 + 1 at t -> 2t gives 4t^2 + 1
        let r = pq(&[1, 0, 1], &[1]);
        assert_eq!(
            r.substitute_scaled_var(&Rational::from_int(2)),
            pq(&[1, 0, 4], &[1])
        );
    }
}
