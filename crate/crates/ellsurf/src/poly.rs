//! Dense univariate polynomials over an exact coefficient field.
//!
//! Coefficients are stored in ascending degree with no trailing zeros; the
//! zero polynomial has an empty coefficient vector and degree `None` (the
//! usual "-infinity" marker). Everything here is exact: gcds, Yun squarefree
//! decomposition, resultants and discriminants, composition, square roots.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::scalar::Scalar;
use crate::zeta8::{Galois, Zeta8};

#[derive(Clone, PartialEq, Eq)]
pub struct Poly<K: Scalar> {
    coeffs: Vec<K>,
}

impl<K: Scalar> Poly<K> {
    pub fn from_coeffs(mut coeffs: Vec<K>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(K::one())
    }

    pub fn constant(c: K) -> Self {
        if c.is_zero() {
            Poly::zero()
        } else {
            Poly { coeffs: vec![c] }
        }
    }

    /// The variable t.
    pub fn var() -> Self {
        Poly { coeffs: vec![K::zero(), K::one()] }
    }

    pub fn monomial(c: K, k: usize) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![K::zero(); k + 1];
        coeffs[k] = c;
        Poly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::from_coeffs(coeffs.iter().map(|&n| K::from_int(n)).collect())
    }

    pub fn coeffs(&self) -> &[K] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> K {
        self.coeffs.get(k).cloned().unwrap_or_else(K::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree as an integer with deg 0 for constants including zero; callers
    /// that must distinguish zero check `is_zero` first.
    pub fn deg_or0(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn leading_coeff(&self) -> K {
        self.coeffs.last().cloned().unwrap_or_else(K::zero)
    }

    pub fn eval(&self, x: &K) -> K {
        let mut acc = K::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul_ref(x).add_ref(c);
        }
        acc
    }

    pub fn scale(&self, c: &K) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly::from_coeffs(self.coeffs.iter().map(|a| a.mul_ref(c)).collect())
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        let inv = self.leading_coeff().inverse().expect("nonzero leading coefficient");
        self.scale(&inv)
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        let mut out = Vec::with_capacity(self.coeffs.len() - 1);
        for (k, c) in self.coeffs.iter().enumerate().skip(1) {
            out.push(c.mul_ref(&K::from_int(k as i64)));
        }
        Poly::from_coeffs(out)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Quotient and remainder; `rhs` must be nonzero.
    pub fn divrem(&self, rhs: &Self) -> Result<(Self, Self)> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let d = rhs.degree().unwrap();
        let lc_inv = rhs.leading_coeff().inverse()?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![K::zero(); self.coeffs.len().saturating_sub(d)];
        while rem.len() > d {
            let k = rem.len() - 1;
            let factor = rem[k].mul_ref(&lc_inv);
            if !factor.is_zero() {
                quot[k - d] = factor.clone();
                for (j, rc) in rhs.coeffs.iter().enumerate() {
                    let t = factor.mul_ref(rc);
                    rem[k - d + j] = rem[k - d + j].sub_ref(&t);
                }
            }
            rem.pop();
        }
        Ok((Poly::from_coeffs(quot), Poly::from_coeffs(rem)))
    }

    pub fn rem(&self, rhs: &Self) -> Result<Self> {
        Ok(self.divrem(rhs)?.1)
    }

    /// Exact division; errors if the remainder is nonzero.
    pub fn div_exact(&self, rhs: &Self) -> Result<Self> {
        let (q, r) = self.divrem(rhs)?;
        if !r.is_zero() {
            return Err(Error::Json("inexact polynomial division".into()));
        }
        Ok(q)
    }

    pub fn divides(&self, other: &Self) -> bool {
        match other.divrem(self) {
            Ok((_, r)) => r.is_zero(),
            Err(_) => false,
        }
    }

    /// Monic greatest common divisor. Errors only when both inputs are zero.
    pub fn gcd(&self, rhs: &Self) -> Result<Self> {
        if self.is_zero() && rhs.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut a = self.clone();
        let mut b = rhs.clone();
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    /// Extended gcd: returns monic `g` and `(u, v)` with `u*self + v*rhs = g`.
    pub fn ext_gcd(&self, rhs: &Self) -> Result<(Self, Self, Self)> {
        if self.is_zero() && rhs.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let (mut r0, mut r1) = (self.clone(), rhs.clone());
        let (mut u0, mut u1) = (Poly::one(), Poly::zero());
        let (mut v0, mut v1) = (Poly::zero(), Poly::one());
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1)?;
            let nu = &u0 - &(&q * &u1);
            let nv = &v0 - &(&q * &v1);
            r0 = std::mem::replace(&mut r1, r);
            u0 = std::mem::replace(&mut u1, nu);
            v0 = std::mem::replace(&mut v1, nv);
        }
        let lc_inv = r0.leading_coeff().inverse()?;
        Ok((r0.scale(&lc_inv), u0.scale(&lc_inv), v0.scale(&lc_inv)))
    }

    pub fn coprime(&self, rhs: &Self) -> bool {
        matches!(self.gcd(rhs), Ok(g) if g.is_one())
    }

    /// Yun squarefree decomposition, valid in characteristic zero:
    /// `self = lc * prod factor_i ^ mult_i` with the factors monic, separable
    /// and pairwise coprime, listed in ascending multiplicity.
    pub fn squarefree_decompose(&self) -> Result<(K, Vec<(Poly<K>, u32)>)> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let lc = self.leading_coeff();
        if self.is_constant() {
            return Ok((lc, Vec::new()));
        }
        let p = self.monic();
        let dp = p.derivative();
        let g = p.gcd(&dp)?;
        let mut factors = Vec::new();
        if g.is_one() {
            factors.push((p, 1));
            return Ok((lc, factors));
        }
        let mut c = p.div_exact(&g)?;
        let mut d = &dp.div_exact(&g)? - &c.derivative();
        let mut i = 1u32;
        while !c.is_constant() {
            let a = c.gcd(&d)?;
            if !a.is_constant() {
                factors.push((a.clone(), i));
            }
            c = c.div_exact(&a)?;
            d = &d.div_exact(&a)? - &c.derivative();
            i += 1;
        }
        Ok((lc, factors))
    }

    /// Product of the distinct monic irreducible factors (the radical).
    pub fn squarefree_part(&self) -> Result<Poly<K>> {
        let (_, factors) = self.squarefree_decompose()?;
        let mut out = Poly::one();
        for (f, _) in factors {
            out = &out * &f;
        }
        Ok(out)
    }

    /// Resultant of `self` and `rhs` via the Euclidean remainder sequence.
    pub fn resultant(&self, rhs: &Self) -> K {
        fn go<K: Scalar>(p: &Poly<K>, q: &Poly<K>) -> K {
            // invariant: p, q nonzero
            let m = p.degree().unwrap();
            let n = q.degree().unwrap();
            if n == 0 {
                return power(&q.leading_coeff(), m as u32);
            }
            if m == 0 {
                return power(&p.leading_coeff(), n as u32);
            }
            if m < n {
                let s = go(q, p);
                return if (m * n) % 2 == 1 { -s } else { s };
            }
            let r = p.rem(q).expect("nonzero divisor");
            if r.is_zero() {
                return K::zero();
            }
            let d = r.degree().unwrap();
            let mut s = go(q, &r);
            s = s.mul_ref(&power(&q.leading_coeff(), (m - d) as u32));
            if (m * n) % 2 == 1 {
                s = -s;
            }
            s
        }
        fn power<K: Scalar>(base: &K, e: u32) -> K {
            let mut acc = K::one();
            for _ in 0..e {
                acc = acc.mul_ref(base);
            }
            acc
        }
        if self.is_zero() || rhs.is_zero() {
            return K::zero();
        }
        go(self, rhs)
    }

    /// Discriminant; zero exactly when the polynomial is inseparable.
    pub fn discriminant(&self) -> Result<K> {
        let m = match self.degree() {
            Some(m) if m >= 1 => m,
            _ => return Err(Error::ConstantPolynomial),
        };
        let res = self.resultant(&self.derivative());
        let sign = if (m * (m - 1) / 2) % 2 == 1 { -K::one() } else { K::one() };
        Ok(sign.mul_ref(&res).mul_ref(&self.leading_coeff().inverse()?))
    }

    /// Composition self(other(t)).
    pub fn compose(&self, other: &Self) -> Self {
        let mut acc = Poly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * other) + &Poly::constant(c.clone());
        }
        acc
    }

    /// `s^n * self(1/s)`; requires `n >= deg self`. Zero maps to zero.
    pub fn reversed(&self, n: usize) -> Result<Self> {
        if self.is_zero() {
            return Ok(Poly::zero());
        }
        let d = self.degree().unwrap();
        if d > n {
            return Err(Error::DegreeOverflow);
        }
        let mut out = vec![K::zero(); n + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            out[n - k] = c.clone();
        }
        Ok(Poly::from_coeffs(out))
    }

    /// Exact square root in k[t], if the polynomial is a square.
    pub fn sqrt(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(Poly::zero());
        }
        let (lc, factors) = self.squarefree_decompose().ok()?;
        let lc_root = lc.sqrt()?;
        let mut out = Poly::constant(lc_root);
        for (f, m) in factors {
            if m % 2 != 0 {
                return None;
            }
            out = &out * &f.pow(m / 2);
        }
        Some(out)
    }

    /// Coefficientwise Galois action.
    pub fn conjugate(&self, g: Galois) -> Self {
        Poly::from_coeffs(self.coeffs.iter().map(|c| c.conjugate(g)).collect())
    }

    /// Largest power of `d` dividing `self`; `self` nonzero, `d` nonconstant.
    pub fn valuation_of_factor(&self, d: &Self) -> Result<u32> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if d.is_constant() {
            return Err(Error::ConstantPolynomial);
        }
        let mut v = 0;
        let mut cur = self.clone();
        loop {
            let (q, r) = cur.divrem(d)?;
            if !r.is_zero() {
                return Ok(v);
            }
            v += 1;
            cur = q;
        }
    }
}

impl Poly<Rational> {
    pub fn promote(&self) -> Poly<Zeta8> {
        Poly::from_coeffs(self.coeffs.iter().map(|c| Zeta8::from_rational(c.clone())).collect())
    }
}

impl Poly<Zeta8> {
    /// Exact demotion to Q[t] when every coefficient is rational.
    pub fn demote(&self) -> Option<Poly<Rational>> {
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            out.push(c.as_rational()?);
        }
        Some(Poly::from_coeffs(out))
    }
}

impl<K: Scalar> Add for &Poly<K> {
    type Output = Poly<K>;
    fn add(self, rhs: &Poly<K>) -> Poly<K> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k).add_ref(&rhs.coeff(k)));
        }
        Poly::from_coeffs(out)
    }
}

impl<K: Scalar> Sub for &Poly<K> {
    type Output = Poly<K>;
    fn sub(self, rhs: &Poly<K>) -> Poly<K> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k).sub_ref(&rhs.coeff(k)));
        }
        Poly::from_coeffs(out)
    }
}

impl<K: Scalar> Mul for &Poly<K> {
    type Output = Poly<K>;
    fn mul(self, rhs: &Poly<K>) -> Poly<K> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![K::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (j, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (k, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[j + k] = out[j + k].add_ref(&a.mul_ref(b));
            }
        }
        Poly::from_coeffs(out)
    }
}

impl<K: Scalar> Neg for &Poly<K> {
    type Output = Poly<K>;
    fn neg(self) -> Poly<K> {
        Poly::from_coeffs(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

impl<K: Scalar> fmt::Display for Poly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => {
                    if c.is_one() {
                        write!(f, "t")?
                    } else {
                        write!(f, "({c})*t")?
                    }
                }
                _ => {
                    if c.is_one() {
                        write!(f, "t^{k}")?
                    } else {
                        write!(f, "({c})*t^{k}")?
                    }
                }
            }
        }
        Ok(())
    }
}

impl<K: Scalar> fmt::Debug for Poly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
