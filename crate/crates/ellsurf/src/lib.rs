//! Exact arithmetic for elliptic curves over the rational function field.
//!
//! The crate computes, with no floating point anywhere:
//!
//! - globally minimal Weierstrass models over k[t] and their Kodaira fiber
//!   types (`weierstrass`, `kodaira`);
//! - the Mordell-Weil height pairing from intersection numbers and local
//!   fiber corrections (`height`);
//! - torsion over k(t) and over Q (`torsion`);
//! - the Pythagorean families y^2 = x(x - f^2)(x - g^2) with f^2 + g^2 = h^2,
//!   their canonical points, 2-descent images and full Mordell-Weil
//!   certificates (`family`, `descent`);
//! - conic parametrization by the pencil-of-lines method and specialization
//!   to curves over Q with rank certificates (`quadric`).
//!
//! All core types are generic over an exact coefficient field via the
//! [`Scalar`] trait; the two instantiations are k = Q and k = Q(zeta_8),
//! with concrete aliases below.

pub mod error;
pub mod rational;
pub mod zeta8;
pub mod scalar;
pub mod poly;
pub mod ratfun;
pub mod places;
pub mod weierstrass;

pub use error::{Error, Result};
pub use rational::Rational;
pub use scalar::{FieldElem, FieldTag, Scalar};
pub use zeta8::{Galois, Zeta8};

/// Polynomial over Q.
pub type QPoly = poly::Poly<Rational>;
/// Polynomial over Q(zeta_8).
pub type ZPoly = poly::Poly<Zeta8>;
/// Rational function over Q.
pub type QRatFun = ratfun::RatFun<Rational>;
/// Rational function over Q(zeta_8).
pub type ZRatFun = ratfun::RatFun<Zeta8>;
