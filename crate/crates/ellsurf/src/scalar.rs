//! The coefficient-field abstraction.
//!
//! All polynomial, curve and lattice machinery in this crate is generic over
//! a [`Scalar`]: an exact field that embeds Q. Two instantiations exist,
//! [`Rational`] for k = Q and [`Zeta8`] for k = Q(zeta_8); concrete aliases
//! for both live at the crate root. There is deliberately no floating-point
//! instantiation — every contract here is exact.

use std::fmt::{Debug, Display};
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::zeta8::{Galois, Zeta8};

/// An exact field containing Q, with enough extra structure (Galois action,
/// square-root decision) to drive descent and torsion computations.
pub trait Scalar:
    Clone
    + PartialEq
    + Eq
    + Debug
    + Display
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
{
    /// Wire-format name of the field.
    const FIELD_NAME: &'static str;

    fn from_rational(r: Rational) -> Self;

    fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_int(n))
    }

    /// Exact demotion to Q when the element happens to be rational.
    fn as_rational(&self) -> Option<Rational>;

    /// Multiplicative inverse; `Err` on zero.
    fn inverse(&self) -> Result<Self>;

    /// Image under a Galois automorphism of Q(zeta_8)/Q; the identity on Q.
    fn conjugate(&self, g: Galois) -> Self;

    /// Exact square root in the field, if one exists.
    fn sqrt(&self) -> Option<Self>;

    fn mul_ref(&self, rhs: &Self) -> Self {
        self.clone() * rhs.clone()
    }

    fn add_ref(&self, rhs: &Self) -> Self {
        self.clone() + rhs.clone()
    }

    fn sub_ref(&self, rhs: &Self) -> Self {
        self.clone() - rhs.clone()
    }
}

impl Scalar for Rational {
    const FIELD_NAME: &'static str = "Q";

    fn from_rational(r: Rational) -> Self {
        r
    }

    fn as_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }

    fn inverse(&self) -> Result<Self> {
        Rational::inverse(self)
    }

    fn conjugate(&self, _g: Galois) -> Self {
        self.clone()
    }

    fn sqrt(&self) -> Option<Self> {
        Rational::sqrt(self)
    }
}

impl Scalar for Zeta8 {
    const FIELD_NAME: &'static str = "Qzeta8";

    fn from_rational(r: Rational) -> Self {
        Zeta8::from_rational(r)
    }

    fn as_rational(&self) -> Option<Rational> {
        Zeta8::as_rational(self)
    }

    fn inverse(&self) -> Result<Self> {
        Zeta8::inverse(self)
    }

    fn conjugate(&self, g: Galois) -> Self {
        Zeta8::conjugate(self, g)
    }

    fn sqrt(&self) -> Option<Self> {
        Zeta8::sqrt(self)
    }
}

/// A field element as it arrives on the wire, before a computation has fixed
/// its domain. Mixed-domain arithmetic promotes `Q` into `Qzeta8`; promotion
/// preserves the value, a rational r becoming (r, 0, 0, 0).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FieldElem {
    Q(Rational),
    Zeta8(Zeta8),
}

impl FieldElem {
    pub fn promote(self) -> Zeta8 {
        match self {
            FieldElem::Q(r) => Zeta8::from_rational(r),
            FieldElem::Zeta8(z) => z,
        }
    }

    pub fn is_rational(&self) -> bool {
        match self {
            FieldElem::Q(_) => true,
            FieldElem::Zeta8(z) => z.as_rational().is_some(),
        }
    }
}

impl Display for FieldElem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FieldElem::Q(r) => write!(f, "{r}"),
            FieldElem::Zeta8(z) => write!(f, "{z}"),
        }
    }
}

/// Dispatch tag for the two supported coefficient fields.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldTag {
    Q,
    Zeta8,
}

impl FieldTag {
    pub fn name(self) -> &'static str {
        match self {
            FieldTag::Q => "Q",
            FieldTag::Zeta8 => "Qzeta8",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "Q" => Ok(FieldTag::Q),
            "Qzeta8" => Ok(FieldTag::Zeta8),
            other => Err(Error::Json(format!("unknown field tag {other:?}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn promotion_preserves_value() {
        let r = Rational::from_frac(-7, 3);
        let promoted = FieldElem::Q(r.clone()).promote();
        assert_eq!(promoted.as_rational(), Some(r));
    }
}
