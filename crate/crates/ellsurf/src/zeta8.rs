//! Exact arithmetic in the degree-4 cyclotomic field Q(z) with z = e^{2*pi*i/8}.
//!
//! Elements are stored on the power basis `c0 + c1*z + c2*z^2 + c3*z^3`,
//! reduced with `z^4 = -1`. This field contains every algebraic constant the
//! curve families need: `i = z^2`, `sqrt(2) = z - z^3`, `sqrt(-2) = z + z^3`,
//! and units such as `1 + sqrt(2)`.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Element of Q(z), z a primitive 8th root of unity.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Zeta8 {
    /// Coordinates on the basis 1, z, z^2, z^3.
    pub c: [Rational; 4],
}

/// The nontrivial Galois automorphisms of Q(z)/Q, written by their action
/// z -> z^k. `S7` is complex conjugation (fixes sqrt(2), negates i and
/// sqrt(-2)); `S5` fixes i and negates sqrt(2); `S3` fixes sqrt(-2).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Galois {
    S3,
    S5,
    S7,
}

impl Galois {
    pub const ALL: [Galois; 3] = [Galois::S3, Galois::S5, Galois::S7];

    fn exponent(self) -> usize {
        match self {
            Galois::S3 => 3,
            Galois::S5 => 5,
            Galois::S7 => 7,
        }
    }
}

impl Zeta8 {
    pub fn from_coords(c: [Rational; 4]) -> Self {
        Zeta8 { c }
    }

    pub fn from_rational(r: Rational) -> Self {
        Zeta8 {
            c: [r, Rational::zero(), Rational::zero(), Rational::zero()],
        }
    }

    pub fn from_int(n: i64) -> Self {
        Zeta8::from_rational(Rational::from_int(n))
    }

    /// The generator z itself.
    pub fn zeta() -> Self {
        let mut c = [Rational::zero(), Rational::zero(), Rational::zero(), Rational::zero()];
        c[1] = Rational::one();
        Zeta8 { c }
    }

    /// i = z^2.
    pub fn i() -> Self {
        let mut c = [Rational::zero(), Rational::zero(), Rational::zero(), Rational::zero()];
        c[2] = Rational::one();
        Zeta8 { c }
    }

    /// sqrt(2) = z - z^3.
    pub fn sqrt2() -> Self {
        let mut c = [Rational::zero(), Rational::zero(), Rational::zero(), Rational::zero()];
        c[1] = Rational::one();
        c[3] = -Rational::one();
        Zeta8 { c }
    }

    /// sqrt(-2) = z + z^3.
    pub fn sqrt_minus2() -> Self {
        let mut c = [Rational::zero(), Rational::zero(), Rational::zero(), Rational::zero()];
        c[1] = Rational::one();
        c[3] = Rational::one();
        Zeta8 { c }
    }

    /// Constants by name, as accepted on the wire.
    pub fn named(name: &str) -> Result<Self> {
        match name {
            "i" => Ok(Zeta8::i()),
            "sqrt2" => Ok(Zeta8::sqrt2()),
            "sqrt_minus2" => Ok(Zeta8::sqrt_minus2()),
            "zeta" => Ok(Zeta8::zeta()),
            other => Err(Error::UnknownConstant(other.to_string())),
        }
    }

    /// Exact demotion to Q when the element is rational.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.c[1].is_zero() && self.c[2].is_zero() && self.c[3].is_zero() {
            Some(self.c[0].clone())
        } else {
            None
        }
    }

    /// Image under the Galois automorphism z -> z^k.
    pub fn conjugate(&self, g: Galois) -> Self {
        let k = g.exponent();
        let mut c = [Rational::zero(), Rational::zero(), Rational::zero(), Rational::zero()];
        for (j, coeff) in self.c.iter().enumerate() {
            if coeff.is_zero() {
                continue;
            }
            let e = (j * k) % 8;
            if e < 4 {
                c[e] += coeff.clone();
            } else {
                c[e - 4] -= coeff.clone();
            }
        }
        Zeta8 { c }
    }

    /// Field norm down to Q: the product of all four Galois images.
    pub fn norm(&self) -> Rational {
        let p = self.clone()
            * self.conjugate(Galois::S3)
            * self.conjugate(Galois::S5)
            * self.conjugate(Galois::S7);
        p.as_rational().expect("norm is rational")
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let cofactor = self.conjugate(Galois::S3)
            * self.conjugate(Galois::S5)
            * self.conjugate(Galois::S7);
        let n = self.norm();
        Ok(cofactor.scale(&n.inverse()?))
    }

    fn scale(&self, r: &Rational) -> Self {
        let mut c = self.c.clone();
        for x in &mut c {
            *x = &*x * r;
        }
        Zeta8 { c }
    }

    /// Coordinates of `self = A + B*i` with `A, B` in Q(sqrt(2)), each given
    /// as `(rational part, sqrt(2) part)`.
    fn to_quadratic_tower(&self) -> (Sqrt2Elem, Sqrt2Elem) {
        let half = Rational::from_frac(1, 2);
        let a = Sqrt2Elem {
            a: self.c[0].clone(),
            b: &(&self.c[1] - &self.c[3]) * &half,
        };
        let b = Sqrt2Elem {
            a: self.c[2].clone(),
            b: &(&self.c[1] + &self.c[3]) * &half,
        };
        (a, b)
    }

    fn from_quadratic_tower(x: Sqrt2Elem, y: Sqrt2Elem) -> Self {
        Zeta8 {
            c: [
                x.a,
                &x.b + &y.b,
                y.a,
                &y.b - &x.b,
            ],
        }
    }

    /// Exact square root in Q(z), if one exists.
    ///
    /// Decides by descending the tower Q(z) = Q(sqrt(2))(i): writing the
    /// element as `A + B*i`, any root `X + Y*i` satisfies
    /// `X^2 = (A +- sqrt(A^2 + B^2))/2` and `Y = B/(2X)`, which reduces the
    /// problem to square roots in Q(sqrt(2)) and finally in Q.
    pub fn sqrt(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(Zeta8::zero());
        }
        let (a, b) = self.to_quadratic_tower();
        if b.is_zero() {
            if let Some(x) = a.sqrt() {
                return Some(Zeta8::from_quadratic_tower(x, Sqrt2Elem::zero()));
            }
            if let Some(y) = (-a).sqrt() {
                return Some(Zeta8::from_quadratic_tower(Sqrt2Elem::zero(), y));
            }
            return None;
        }
        let norm = &(&a * &a) + &(&b * &b);
        let n0 = norm.sqrt()?;
        for n in [n0.clone(), -n0] {
            let x2 = (&a + &n).halve();
            if let Some(x) = x2.sqrt() {
                if !x.is_zero() {
                    let y = b.clone() / (x.double());
                    let root = Zeta8::from_quadratic_tower(x, y);
                    debug_assert_eq!(&root * &root, *self);
                    return Some(root);
                }
            }
        }
        None
    }
}

/// Element `a + b*sqrt(2)` of the real quadratic subfield.
#[derive(Clone, PartialEq, Eq)]
struct Sqrt2Elem {
    a: Rational,
    b: Rational,
}

impl Sqrt2Elem {
    fn zero() -> Self {
        Sqrt2Elem { a: Rational::zero(), b: Rational::zero() }
    }

    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    fn halve(&self) -> Self {
        let half = Rational::from_frac(1, 2);
        Sqrt2Elem { a: &self.a * &half, b: &self.b * &half }
    }

    fn double(&self) -> Self {
        let two = Rational::from_int(2);
        Sqrt2Elem { a: &self.a * &two, b: &self.b * &two }
    }

    fn sqrt(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(Sqrt2Elem::zero());
        }
        if self.b.is_zero() {
            if let Some(x) = self.a.sqrt() {
                return Some(Sqrt2Elem { a: x, b: Rational::zero() });
            }
            let half_a = &self.a * &Rational::from_frac(1, 2);
            if let Some(y) = half_a.sqrt() {
                return Some(Sqrt2Elem { a: Rational::zero(), b: y });
            }
            return None;
        }
        // x^2 = (a +- sqrt(a^2 - 2 b^2)) / 2, y = b / (2x)
        let disc = &(&self.a * &self.a) - &(&(&self.b * &self.b) * &Rational::from_int(2));
        let n0 = disc.sqrt()?;
        for n in [n0.clone(), -n0] {
            let x2 = &(&self.a + &n) * &Rational::from_frac(1, 2);
            if let Some(x) = x2.sqrt() {
                if !x.is_zero() {
                    let y = &self.b / &(&x * &Rational::from_int(2));
                    return Some(Sqrt2Elem { a: x, b: y });
                }
            }
        }
        None
    }
}

impl Add for &Sqrt2Elem {
    type Output = Sqrt2Elem;
    fn add(self, rhs: &Sqrt2Elem) -> Sqrt2Elem {
        Sqrt2Elem { a: &self.a + &rhs.a, b: &self.b + &rhs.b }
    }
}

impl Mul for &Sqrt2Elem {
    type Output = Sqrt2Elem;
    fn mul(self, rhs: &Sqrt2Elem) -> Sqrt2Elem {
        Sqrt2Elem {
            a: &(&self.a * &rhs.a) + &(&(&self.b * &rhs.b) * &Rational::from_int(2)),
            b: &(&self.a * &rhs.b) + &(&self.b * &rhs.a),
        }
    }
}

impl Neg for Sqrt2Elem {
    type Output = Sqrt2Elem;
    fn neg(self) -> Sqrt2Elem {
        Sqrt2Elem { a: -self.a, b: -self.b }
    }
}

impl Div for Sqrt2Elem {
    type Output = Sqrt2Elem;
    fn div(self, rhs: Sqrt2Elem) -> Sqrt2Elem {
        // (a + b sqrt2)^-1 = (a - b sqrt2) / (a^2 - 2 b^2)
        let n = &(&rhs.a * &rhs.a) - &(&(&rhs.b * &rhs.b) * &Rational::from_int(2));
        let inv = Sqrt2Elem {
            a: &rhs.a / &n,
            b: -(&rhs.b / &n),
        };
        &self * &inv
    }
}

impl Zero for Zeta8 {
    fn zero() -> Self {
        Zeta8::from_rational(Rational::zero())
    }
    fn is_zero(&self) -> bool {
        self.c.iter().all(|x| x.is_zero())
    }
}

impl One for Zeta8 {
    fn one() -> Self {
        Zeta8::from_rational(Rational::one())
    }
    fn is_one(&self) -> bool {
        self.c[0].is_one() && self.c[1].is_zero() && self.c[2].is_zero() && self.c[3].is_zero()
    }
}

impl Add for Zeta8 {
    type Output = Zeta8;
    fn add(self, rhs: Zeta8) -> Zeta8 {
        &self + &rhs
    }
}

impl Add for &Zeta8 {
    type Output = Zeta8;
    fn add(self, rhs: &Zeta8) -> Zeta8 {
        let mut c = self.c.clone();
        for (x, y) in c.iter_mut().zip(rhs.c.iter()) {
            *x = &*x + y;
        }
        Zeta8 { c }
    }
}

impl Sub for Zeta8 {
    type Output = Zeta8;
    fn sub(self, rhs: Zeta8) -> Zeta8 {
        &self - &rhs
    }
}

impl Sub for &Zeta8 {
    type Output = Zeta8;
    fn sub(self, rhs: &Zeta8) -> Zeta8 {
        let mut c = self.c.clone();
        for (x, y) in c.iter_mut().zip(rhs.c.iter()) {
            *x = &*x - y;
        }
        Zeta8 { c }
    }
}

impl Mul for Zeta8 {
    type Output = Zeta8;
    fn mul(self, rhs: Zeta8) -> Zeta8 {
        &self * &rhs
    }
}

impl Mul for &Zeta8 {
    type Output = Zeta8;
    fn mul(self, rhs: &Zeta8) -> Zeta8 {
        let mut c = [Rational::zero(), Rational::zero(), Rational::zero(), Rational::zero()];
        for (j, x) in self.c.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (k, y) in rhs.c.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let term = x * y;
                let e = j + k;
                if e < 4 {
                    c[e] += term;
                } else {
                    c[e - 4] -= term; // z^4 = -1
                }
            }
        }
        Zeta8 { c }
    }
}

impl Neg for Zeta8 {
    type Output = Zeta8;
    fn neg(self) -> Zeta8 {
        let mut c = self.c;
        for x in &mut c {
            *x = -std::mem::replace(x, Rational::zero());
        }
        Zeta8 { c }
    }
}

impl Div for Zeta8 {
    type Output = Zeta8;
    fn div(self, rhs: Zeta8) -> Zeta8 {
        &self * &rhs.inverse().expect("division by zero")
    }
}

impl fmt::Display for Zeta8 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.as_rational() {
            return write!(f, "{r}");
        }
        write!(f, "[{},{},{},{}]", self.c[0], self.c[1], self.c[2], self.c[3])
    }
}

impl fmt::Debug for Zeta8 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
