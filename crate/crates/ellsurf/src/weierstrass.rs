//! Long Weierstrass models over k(t), coordinate changes, standard
//! invariants, global minimality and the chart at infinity.
//!
//! A model is minimal at a finite place v exactly when v(Delta) < 12 or
//! v(c4) < 4 (residue characteristic zero); minimality at infinity is the
//! same criterion applied to the s-chart model with the least admissible n.

use std::fmt;

use crate::error::{Error, Result};
use crate::places::{Place, PlaceBasis};
use crate::poly::Poly;
use crate::rational::Rational;
use crate::ratfun::RatFun;
use crate::scalar::Scalar;
use crate::zeta8::{Galois, Zeta8};

/// Which affine chart of the base P^1 the model lives on: the t-chart, or
/// the s = 1/t chart obtained with a given weight n.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Chart {
    T,
    S(usize),
}

/// `y^2 + a1 x y + a3 y = x^3 + a2 x^2 + a4 x + a6` with coefficients in k(t).
#[derive(Clone, PartialEq, Eq)]
pub struct Model<K: Scalar> {
    pub a1: RatFun<K>,
    pub a2: RatFun<K>,
    pub a3: RatFun<K>,
    pub a4: RatFun<K>,
    pub a6: RatFun<K>,
    pub chart: Chart,
}

/// The b-, c- and discriminant invariants of a model.
#[derive(Clone, Debug)]
pub struct StandardInvariants<K: Scalar> {
    pub b2: RatFun<K>,
    pub b4: RatFun<K>,
    pub b6: RatFun<K>,
    pub b8: RatFun<K>,
    pub c4: RatFun<K>,
    pub c6: RatFun<K>,
    pub delta: RatFun<K>,
}

impl<K: Scalar> StandardInvariants<K> {
    /// j = c4^3 / Delta; errors on singular models.
    pub fn j(&self) -> Result<RatFun<K>> {
        if self.delta.is_zero() {
            return Err(Error::SingularModel);
        }
        Ok(&(&(&self.c4 * &self.c4) * &self.c4) / &self.delta)
    }
}

/// Verdict of the global minimality test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Minimality<K: Scalar> {
    Minimal,
    NonMinimalAt(Place<K>),
}

impl<K: Scalar> Minimality<K> {
    pub fn is_minimal(&self) -> bool {
        matches!(self, Minimality::Minimal)
    }
}

/// `x = u^2 x' + r`, `y = u^3 y' + u^2 s x' + w` between Weierstrass forms.
///
/// Entries are rational functions so that every change is invertible;
/// integral changes have polynomial entries, and a change is admissible
/// exactly when u is a nonzero constant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoordinateChange<K: Scalar> {
    pub u: RatFun<K>,
    pub r: RatFun<K>,
    pub s: RatFun<K>,
    pub w: RatFun<K>,
}

impl<K: Scalar> CoordinateChange<K> {
    pub fn new(u: RatFun<K>, r: RatFun<K>, s: RatFun<K>, w: RatFun<K>) -> Result<Self> {
        if u.is_zero() {
            return Err(Error::InvalidCoordinateChange);
        }
        Ok(CoordinateChange { u, r, s, w })
    }

    pub fn identity() -> Self {
        CoordinateChange {
            u: RatFun::one(),
            r: RatFun::zero(),
            s: RatFun::zero(),
            w: RatFun::zero(),
        }
    }

    pub fn scaling(u: RatFun<K>) -> Result<Self> {
        Self::new(u, RatFun::zero(), RatFun::zero(), RatFun::zero())
    }

    /// Admissible means u is a nonzero constant of k.
    pub fn is_admissible(&self) -> bool {
        self.u.as_constant().is_some()
    }

    /// The change undoing this one.
    pub fn invert(&self) -> Self {
        let u_inv = self.u.inverse().expect("u nonzero");
        let u_inv2 = &u_inv * &u_inv;
        let u_inv3 = &u_inv2 * &u_inv;
        CoordinateChange {
            u: u_inv.clone(),
            r: -&(&self.r * &u_inv2),
            s: -&(&self.s * &u_inv),
            w: &(&(&self.s * &self.r) - &self.w) * &u_inv3,
        }
    }

    /// Composite change: applying `self` then `next`.
    pub fn compose(&self, next: &Self) -> Self {
        let u1 = &self.u;
        let u1sq = u1 * u1;
        let u1cu = &u1sq * u1;
        let w_mid = &(&u1sq * &self.s) * &next.r;
        CoordinateChange {
            u: u1 * &next.u,
            r: &(&u1sq * &next.r) + &self.r,
            s: &(u1 * &next.s) + &self.s,
            w: &(&(&u1cu * &next.w) + &w_mid) + &self.w,
        }
    }

    /// Map a point of the original model to the transformed model:
    /// `x' = (x - r)/u^2`, `y' = (y - s(x - r) - w)/u^3`.
    pub fn forward_xy(&self, x: &RatFun<K>, y: &RatFun<K>) -> (RatFun<K>, RatFun<K>) {
        let u2 = &self.u * &self.u;
        let u3 = &u2 * &self.u;
        let xr = x - &self.r;
        let xp = &xr / &u2;
        let yp = &(&(y - &(&self.s * &xr)) - &self.w) / &u3;
        (xp, yp)
    }
}

impl<K: Scalar> Model<K> {
    pub fn new(
        a1: RatFun<K>,
        a2: RatFun<K>,
        a3: RatFun<K>,
        a4: RatFun<K>,
        a6: RatFun<K>,
    ) -> Self {
        Model { a1, a2, a3, a4, a6, chart: Chart::T }
    }

    /// `y^2 = x^3 + a2 x^2 + a4 x + a6`.
    pub fn short(a2: RatFun<K>, a4: RatFun<K>, a6: RatFun<K>) -> Self {
        Model::new(RatFun::zero(), a2, RatFun::zero(), a4, a6)
    }

    /// The family model `y^2 = x(x - f^2)(x - g^2)`.
    pub fn family(f: &Poly<K>, g: &Poly<K>) -> Self {
        let f2 = f * f;
        let g2 = g * g;
        let a2 = -&RatFun::from_poly(&f2 + &g2);
        let a4 = RatFun::from_poly(&f2 * &g2);
        Model::short(a2, a4, RatFun::zero())
    }

    pub fn coefficients(&self) -> [&RatFun<K>; 5] {
        [&self.a1, &self.a2, &self.a3, &self.a4, &self.a6]
    }

    fn coefficient_weights() -> [usize; 5] {
        [1, 2, 3, 4, 6]
    }

    pub fn is_integral(&self) -> bool {
        self.coefficients().iter().all(|a| a.as_poly().is_some())
    }

    pub fn is_short(&self) -> bool {
        self.a1.is_zero() && self.a3.is_zero()
    }

    pub fn invariants(&self) -> StandardInvariants<K> {
        let two = RatFun::from_int(2);
        let four = RatFun::from_int(4);
        let b2 = &(&self.a1 * &self.a1) + &(&four * &self.a2);
        let b4 = &(&two * &self.a4) + &(&self.a1 * &self.a3);
        let b6 = &(&self.a3 * &self.a3) + &(&four * &self.a6);
        let b8 = &(&(&(&(&self.a1 * &self.a1) * &self.a6) + &(&(&four * &self.a2) * &self.a6))
            - &(&(&self.a1 * &self.a3) * &self.a4))
            + &(&(&(&self.a2 * &self.a3) * &self.a3) - &(&self.a4 * &self.a4));
        let c4 = &(&b2 * &b2) - &(&RatFun::from_int(24) * &b4);
        let c6 = &(&(&RatFun::from_int(36) * &(&b2 * &b4)) - &(&(&b2 * &b2) * &b2))
            - &(&RatFun::from_int(216) * &b6);
        let delta = &(&(&(&RatFun::from_int(9) * &b2) * &(&b4 * &b6))
            - &(&(&b2 * &b2) * &b8))
            - &(&(&RatFun::from_int(8) * &(&(&b4 * &b4) * &b4))
                + &(&RatFun::from_int(27) * &(&b6 * &b6)));
        StandardInvariants { b2, b4, b6, b8, c4, c6, delta }
    }

    pub fn delta(&self) -> RatFun<K> {
        self.invariants().delta
    }

    /// Right-hand side `x^3 + a2 x^2 + a4 x + a6 - (a1 x + a3) y`-free part:
    /// the cubic in x, as polynomial coefficients `[a6, a4, a2, 1]`.
    pub fn rhs_cubic(&self) -> [RatFun<K>; 4] {
        [self.a6.clone(), self.a4.clone(), self.a2.clone(), RatFun::one()]
    }

    /// Apply a coordinate change, yielding the model in the new coordinates.
    pub fn transform(&self, ch: &CoordinateChange<K>) -> Result<Model<K>> {
        if ch.u.is_zero() {
            return Err(Error::InvalidCoordinateChange);
        }
        let (u, r, s, w) = (&ch.u, &ch.r, &ch.s, &ch.w);
        let u2 = u * u;
        let u3 = &u2 * u;
        let u4 = &u2 * &u2;
        let u6 = &u3 * &u3;
        let two = RatFun::from_int(2);
        let three = RatFun::from_int(3);
        let a1 = &(&self.a1 + &(&two * s)) / u;
        let a2 = &(&(&(&self.a2 - &(s * &self.a1)) + &(&three * r)) - &(s * s)) / &u2;
        let a3 = &(&(&self.a3 + &(r * &self.a1)) + &(&two * w)) / &u3;
        let a4 = &(&(&(&(&self.a4 - &(s * &self.a3)) + &(&two * &(r * &self.a2)))
            - &(&(w + &(r * s)) * &self.a1))
            + &(&(&three * &(r * r)) - &(&two * &(s * w))))
            / &u4;
        let a6 = &(&(&(&(&self.a6 + &(r * &self.a4)) + &(&(r * r) * &self.a2))
            + &(&(r * r) * r))
            - &(&(&(w * &self.a3) + &(w * w)) + &(&(r * w) * &self.a1)))
            / &u6;
        Ok(Model { a1, a2, a3, a4, a6, chart: self.chart })
    }

    /// Least n with `deg a_i <= n*i` for all i; requires an integral model.
    pub fn least_chart_weight(&self) -> Result<usize> {
        if !self.is_integral() {
            return Err(Error::NonIntegralModel);
        }
        let mut n = 0;
        for (a, wt) in self.coefficients().iter().zip(Self::coefficient_weights()) {
            if let Some(p) = a.as_poly() {
                if let Some(d) = p.degree() {
                    n = n.max(d.div_ceil(wt));
                }
            }
        }
        Ok(n)
    }

    /// Model in the chart s = 1/t with `a_i'(s) = s^{n i} a_i(1/s)`.
    pub fn infinity_chart(&self, n: usize) -> Result<Model<K>> {
        if !self.is_integral() {
            return Err(Error::NonIntegralModel);
        }
        for (a, wt) in self.coefficients().iter().zip(Self::coefficient_weights()) {
            if a.as_poly().unwrap().deg_or0() > n * wt {
                return Err(Error::DegreeOverflow);
            }
        }
        let tx = |a: &RatFun<K>, wt: usize| a.reciprocal_weighted((n * wt) as i64);
        Ok(Model {
            a1: tx(&self.a1, 1),
            a2: tx(&self.a2, 2),
            a3: tx(&self.a3, 3),
            a4: tx(&self.a4, 4),
            a6: tx(&self.a6, 6),
            chart: match self.chart {
                Chart::T => Chart::S(n),
                Chart::S(_) => Chart::T,
            },
        })
    }

    /// Minimality data at the infinite place: `(v_s(Delta'), v_s(c4'))` for
    /// the s-chart model with the least weight; `None` encodes +infinity.
    fn infinity_valuations(&self) -> Result<(i64, Option<i64>)> {
        let n = self.least_chart_weight()? as i64;
        let inv = self.invariants();
        if inv.delta.is_zero() {
            return Err(Error::SingularModel);
        }
        let d_delta = inv.delta.as_poly().expect("integral").deg_or0() as i64;
        let v_delta = 12 * n - d_delta;
        let v_c4 = if inv.c4.is_zero() {
            None
        } else {
            Some(4 * n - inv.c4.as_poly().expect("integral").deg_or0() as i64)
        };
        Ok((v_delta, v_c4))
    }

    /// Global minimality for integral nonsingular models.
    pub fn minimality(&self) -> Result<Minimality<K>> {
        if !self.is_integral() {
            return Err(Error::NonIntegralModel);
        }
        let inv = self.invariants();
        let delta = inv.delta.as_poly().expect("integral");
        if delta.is_zero() {
            return Err(Error::SingularModel);
        }
        // finite places: only clusters with v(Delta) >= 12 can fail
        let mut basis = PlaceBasis::new(&[delta.clone()])?;
        if let Some(c4) = inv.c4.as_poly() {
            if !c4.is_zero() {
                basis.refine_with(c4)?;
            }
        }
        let (_, delta_exps) = basis.factor(delta)?;
        for (idx, v_delta) in delta_exps {
            if v_delta < 12 {
                continue;
            }
            let cluster = &basis.clusters()[idx];
            let v_c4 = match inv.c4.as_poly() {
                Some(c4) if !c4.is_zero() => c4.valuation_of_factor(cluster)?,
                _ => u32::MAX,
            };
            if v_c4 >= 4 {
                return Ok(Minimality::NonMinimalAt(Place::finite(cluster.clone())));
            }
        }
        let (v_delta_inf, v_c4_inf) = self.infinity_valuations()?;
        if v_delta_inf >= 12 && v_c4_inf.is_none_or(|v| v >= 4) {
            return Ok(Minimality::NonMinimalAt(Place::Infinity));
        }
        Ok(Minimality::Minimal)
    }

    pub fn is_globally_minimal(&self) -> Result<bool> {
        Ok(self.minimality()?.is_minimal())
    }

    /// Euler characteristic of the associated elliptic surface: the least
    /// chart weight of a globally minimal model. Zero signals everywhere
    /// good reduction (a constant j product surface).
    pub fn euler_characteristic(&self) -> Result<usize> {
        match self.minimality()? {
            Minimality::Minimal => self.least_chart_weight(),
            Minimality::NonMinimalAt(p) => Err(Error::NotMinimal(p.to_string())),
        }
    }

    /// Equivalent model with a1 = a3 = 0 obtained by completing the square,
    /// together with the coordinate change that got there.
    pub fn complete_square(&self) -> (Model<K>, CoordinateChange<K>) {
        if self.is_short() {
            return (self.clone(), CoordinateChange::identity());
        }
        let half = RatFun::constant(K::from_int(2).inverse().expect("char 0"));
        let ch = CoordinateChange {
            u: RatFun::one(),
            r: RatFun::zero(),
            s: -&(&self.a1 * &half),
            w: -&(&self.a3 * &half),
        };
        let m = self.transform(&ch).expect("u = 1");
        (m, ch)
    }

    /// A globally minimal short model with the same j-invariant, reached by
    /// `y^2 = x^3 - 27 c4 x - 54 c6` and then dividing (x, y) by
    /// (cluster^2, cluster^3) while the minimality criterion fails.
    pub fn minimalize(&self) -> Result<Model<K>> {
        let inv = self.invariants();
        if inv.delta.is_zero() {
            return Err(Error::SingularModel);
        }
        let m27 = RatFun::from_int(-27);
        let m54 = RatFun::from_int(-54);
        let mut a4 = &m27 * &inv.c4;
        let mut a6 = &m54 * &inv.c6;
        // clear denominators: scale by u = 1/d with d in k[t]
        loop {
            let d4 = a4.den().clone();
            let d6 = a6.den().clone();
            if d4.is_one() && d6.is_one() {
                break;
            }
            let d = if d4.is_one() { d6 } else { d4 };
            let dr = RatFun::from_poly(d);
            a4 = &a4 * &(&(&dr * &dr) * &(&dr * &dr));
            a6 = &a6 * &(&(&(&dr * &dr) * &(&dr * &dr)) * &(&dr * &dr));
        }
        loop {
            let m = Model::short(RatFun::zero(), a4.clone(), a6.clone());
            match m.minimality()? {
                Minimality::Minimal => return Ok(m),
                Minimality::NonMinimalAt(Place::Finite(c)) => {
                    let cr = RatFun::from_poly(c);
                    let c4i = cr.powi(4)?;
                    let c6i = cr.powi(6)?;
                    a4 = &a4 / &c4i;
                    a6 = &a6 / &c6i;
                    if a4.as_poly().is_none() || a6.as_poly().is_none() {
                        return Err(Error::UnclassifiableFiber(
                            "minimalization produced a non-integral model".into(),
                        ));
                    }
                }
                Minimality::NonMinimalAt(Place::Infinity) => {
                    // short models with the least chart weight are already
                    // minimal at infinity; reaching this is a logic error
                    return Err(Error::NotMinimal("infinity".into()));
                }
            }
        }
    }

    /// Coefficientwise Galois action; the curve is stable exactly when all
    /// coefficients are fixed.
    pub fn conjugate(&self, g: Galois) -> Model<K> {
        Model {
            a1: self.a1.conjugate(g),
            a2: self.a2.conjugate(g),
            a3: self.a3.conjugate(g),
            a4: self.a4.conjugate(g),
            a6: self.a6.conjugate(g),
            chart: self.chart,
        }
    }
}

impl Model<Rational> {
    pub fn promote(&self) -> Model<Zeta8> {
        Model {
            a1: self.a1.promote(),
            a2: self.a2.promote(),
            a3: self.a3.promote(),
            a4: self.a4.promote(),
            a6: self.a6.promote(),
            chart: self.chart,
        }
    }
}

impl Model<Zeta8> {
    pub fn demote(&self) -> Option<Model<Rational>> {
        Some(Model {
            a1: self.a1.demote()?,
            a2: self.a2.demote()?,
            a3: self.a3.demote()?,
            a4: self.a4.demote()?,
            a6: self.a6.demote()?,
            chart: self.chart,
        })
    }
}

impl<K: Scalar> fmt::Display for Model<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "y^2 + ({})xy + ({})y = x^3 + ({})x^2 + ({})x + ({})",
            self.a1, self.a3, self.a2, self.a4, self.a6
        )
    }
}

impl<K: Scalar> fmt::Debug for Model<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    type QM = Model<Rational>;
    type QP = Poly<Rational>;

    fn p(c: &[i64]) -> QP {
        QP::from_ints(c)
    }

    fn classic() -> QM {
        Model::family(&p(&[-1, 0, 1]), &p(&[0, 2]))
    }

    #[test]
    fn family_discriminant_identity() {
        let f = p(&[-1, 0, 1]);
        let g = p(&[0, 2]);
        let m = Model::family(&f, &g);
        let f2 = &f * &f;
        let g2 = &g * &g;
        let expected = &(&(&f2 * &f2) * &(&g2 * &g2)).scale(&Rational::from_int(16))
            * &(&(&f2 - &g2) * &(&f2 - &g2));
        assert_eq!(m.delta().as_poly().unwrap(), &expected);
    }

    #[test]
    fn invariant_relations() {
        let m = classic();
        let inv = m.invariants();
        // c4^3 - c6^2 = 1728 Delta and 4 b8 = b2 b6 - b4^2
        let lhs = &(&(&inv.c4 * &inv.c4) * &inv.c4) - &(&inv.c6 * &inv.c6);
        let rhs = &RatFun::from_int(1728) * &inv.delta;
        assert_eq!(lhs, rhs);
        let lhs = &RatFun::from_int(4) * &inv.b8;
        let rhs = &(&inv.b2 * &inv.b6) - &(&inv.b4 * &inv.b4);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn short_curve_discriminant() {
        // y^2 = x^3 + x has Delta = -64
        let m = QM::short(RatFun::zero(), RatFun::one(), RatFun::zero());
        assert_eq!(m.delta(), RatFun::from_int(-64));
        // closed form -16(4 a4^3 + 27 a6^2) for y^2 = x^3 + a4 x + a6
        let m = QM::short(RatFun::zero(), RatFun::from_int(2), RatFun::from_int(3));
        assert_eq!(m.delta(), RatFun::from_int(-16 * (4 * 8 + 27 * 9)));
    }

    #[test]
    fn degenerate_family_is_singular() {
        let m = Model::family(&p(&[0, 1]), &p(&[0, 1]));
        assert!(m.delta().is_zero());
        assert!(m.invariants().j().is_err());
        assert_eq!(m.minimality(), Err(Error::SingularModel));
    }

    #[test]
    fn transform_identity_and_round_trip() {
        let m = classic();
        let id = CoordinateChange::identity();
        assert_eq!(m.transform(&id).unwrap(), m);

        let ch = CoordinateChange::scaling(RatFun::var()).unwrap();
        let m2 = m.transform(&ch).unwrap();
        // a2' = -(f^2+g^2)/t^2, a4' = f^2 g^2 / t^4
        let t2 = RatFun::from_poly(p(&[0, 0, 1]));
        assert_eq!(m2.a2, &m.a2 / &t2);
        assert_eq!(m2.a4, &m.a4 / &(&t2 * &t2));
        let back = m2.transform(&ch.invert()).unwrap();
        assert_eq!(back, m);
    }

    #[test]
    fn transform_scales_invariants() {
        let m = classic();
        let ch = CoordinateChange::new(
            RatFun::from_poly(p(&[1, 2])),
            RatFun::from_poly(p(&[0, 3])),
            RatFun::from_poly(p(&[5])),
            RatFun::from_poly(p(&[1, 0, 1])),
        )
        .unwrap();
        let m2 = m.transform(&ch).unwrap();
        let (i1, i2) = (m.invariants(), m2.invariants());
        let u12 = ch.u.powi(12).unwrap();
        let u4 = ch.u.powi(4).unwrap();
        assert_eq!(&i2.delta * &u12, i1.delta);
        assert_eq!(&i2.c4 * &u4, i1.c4);
        assert_eq!(i1.j().unwrap(), i2.j().unwrap());
    }

    #[test]
    fn transform_composition_matches() {
        let m = classic();
        let c1 = CoordinateChange::new(
            RatFun::from_int(2),
            RatFun::from_poly(p(&[1, 1])),
            RatFun::from_poly(p(&[0, 1])),
            RatFun::from_poly(p(&[3])),
        )
        .unwrap();
        let c2 = CoordinateChange::new(
            RatFun::from_poly(p(&[0, 1])),
            RatFun::from_poly(p(&[2])),
            RatFun::from_poly(p(&[1])),
            RatFun::from_poly(p(&[0, 5])),
        )
        .unwrap();
        let twice = m.transform(&c1).unwrap().transform(&c2).unwrap();
        let once = m.transform(&c1.compose(&c2)).unwrap();
        assert_eq!(twice, once);
    }

    #[test]
    fn family_is_globally_minimal() {
        assert!(classic().is_globally_minimal().unwrap());
        let m = Model::family(&p(&[-1, 0, 1]), &p(&[1, 0, 1]));
        assert!(m.is_globally_minimal().unwrap());
    }

    #[test]
    fn scaled_model_detected_and_reduced() {
        // push the family model up by u = 1/t: coefficients gain t^i factors
        let m = classic();
        let ch = CoordinateChange::scaling(RatFun::var()).unwrap().invert();
        let m2 = m.transform(&ch).unwrap();
        assert!(m2.is_integral());
        match m2.minimality().unwrap() {
            Minimality::NonMinimalAt(Place::Finite(c)) => assert_eq!(c, p(&[0, 1])),
            v => panic!("expected non-minimal at t, got {v:?}"),
        }
        let red = m2.minimalize().unwrap();
        assert!(red.is_globally_minimal().unwrap());
        assert_eq!(red.invariants().j().unwrap(), m.invariants().j().unwrap());
    }

    #[test]
    fn twelfth_power_discriminant_example() {
        // y^2 = x^3 + t^12: v_0(Delta) = 24, c4 = 0 -> non-minimal at t
        let m = QM::short(
            RatFun::zero(),
            RatFun::zero(),
            RatFun::from_poly(Poly::monomial(Rational::one(), 12)),
        );
        match m.minimality().unwrap() {
            Minimality::NonMinimalAt(Place::Finite(c)) => assert_eq!(c, p(&[0, 1])),
            v => panic!("unexpected verdict {v:?}"),
        }
        let red = m.minimalize().unwrap();
        assert!(red.is_globally_minimal().unwrap());
        assert_eq!(red.invariants().j().unwrap(), m.invariants().j().unwrap());
    }

    #[test]
    fn euler_characteristic_examples() {
        assert_eq!(classic().euler_characteristic().unwrap(), 2);
        let m = Model::family(&p(&[-1, 0, 1]), &p(&[1, 0, 1]));
        assert_eq!(m.euler_characteristic().unwrap(), 2);
        // y^2 = x^3 + x + t: a rational elliptic surface
        let m = QM::short(
            RatFun::zero(),
            RatFun::one(),
            RatFun::from_poly(p(&[0, 1])),
        );
        assert_eq!(m.euler_characteristic().unwrap(), 1);
        // deg f in {1, 3}
        assert_eq!(Model::family(&p(&[0, 1]), &p(&[1])).euler_characteristic().unwrap(), 1);
        assert_eq!(
            Model::family(&p(&[0, 0, 0, 1]), &p(&[1, 1])).euler_characteristic().unwrap(),
            3
        );
    }

    #[test]
    fn infinity_chart_family() {
        // a2'(s) = -s^{2n}(f(1/s)^2 + g(1/s)^2), a4'(s) = s^{4n} f(1/s)^2 g(1/s)^2
        let m = classic();
        let n = m.least_chart_weight().unwrap();
        assert_eq!(n, 2);
        let mi = m.infinity_chart(n).unwrap();
        assert_eq!(mi.chart, Chart::S(2));
        // f(1/s) s^n = 1 - s^2 (reversal of t^2 - 1), g(1/s) s^n = 2s
        let fr = p(&[1, 0, -1]);
        let gr = p(&[0, 2]);
        let exp_a2 = -&RatFun::from_poly(&(&fr * &fr) + &(&gr * &gr));
        let exp_a4 = RatFun::from_poly(&(&fr * &fr) * &(&gr * &gr));
        assert_eq!(mi.a2, exp_a2);
        assert_eq!(mi.a4, exp_a4);
        // round trip
        assert_eq!(mi.infinity_chart(n).unwrap(), m);
        // constant-coefficient model: a_i' = s^{in} a_i
        let cm = QM::short(RatFun::from_int(1), RatFun::from_int(2), RatFun::from_int(3));
        let ci = cm.infinity_chart(1).unwrap();
        assert_eq!(ci.a2, RatFun::from_poly(p(&[0, 0, 1])));
        assert_eq!(ci.a4, RatFun::from_poly(p(&[0, 0, 0, 0, 2])));
        assert_eq!(ci.a6, RatFun::from_poly(p(&[0, 0, 0, 0, 0, 0, 3])));
    }

    #[test]
    fn minimality_invariant_under_admissible_changes() {
        let m = classic();
        let ch = CoordinateChange::new(
            RatFun::from_int(3),
            RatFun::from_poly(p(&[1, 2, 1])),
            RatFun::from_poly(p(&[0, 7])),
            RatFun::from_poly(p(&[2, 0, 0, 1])),
        )
        .unwrap();
        assert!(ch.is_admissible());
        let m2 = m.transform(&ch).unwrap();
        assert!(m2.is_integral());
        assert!(m2.is_globally_minimal().unwrap());
    }

    #[test]
    fn complete_square_kills_a1_a3() {
        let m = QM::new(
            RatFun::from_poly(p(&[0, 1])),
            RatFun::from_poly(p(&[1, 1])),
            RatFun::from_int(4),
            RatFun::zero(),
            RatFun::from_poly(p(&[0, 0, 3])),
        );
        let (sq, ch) = m.complete_square();
        assert!(sq.is_short());
        assert_eq!(sq.delta(), m.delta());
        assert!(ch.is_admissible());
    }
}
