//! Kodaira types of the bad fibers of a globally minimal model.
//!
//! Classification is the residue-characteristic-zero table keyed on the
//! valuations of c4 and Delta at each place. One report row covers a whole
//! cluster of conjugate roots; `count` is the cluster degree.

use std::fmt;

use crate::error::{Error, Result};
use crate::places::{poly_order, Place, PlaceBasis};
use crate::scalar::Scalar;
use crate::weierstrass::{Minimality, Model};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FiberType {
    /// Multiplicative, a cycle of n rational curves (n >= 1).
    In(u32),
    II,
    III,
    IV,
    IStar0,
    InStar(u32),
    IVStar,
    IIIStar,
    IIStar,
}

impl FiberType {
    pub fn is_multiplicative(self) -> bool {
        matches!(self, FiberType::In(_))
    }

    /// Number of irreducible fiber components.
    pub fn components(self) -> u32 {
        match self {
            FiberType::In(n) => n,
            FiberType::II => 1,
            FiberType::III => 2,
            FiberType::IV => 3,
            FiberType::IStar0 => 5,
            FiberType::InStar(n) => 5 + n,
            FiberType::IVStar => 7,
            FiberType::IIIStar => 8,
            FiberType::IIStar => 9,
        }
    }

    /// Order of the component group of the Neron model.
    pub fn component_group_order(self) -> u32 {
        match self {
            FiberType::In(n) => n,
            FiberType::II | FiberType::IIStar => 1,
            FiberType::III | FiberType::IIIStar => 2,
            FiberType::IV | FiberType::IVStar => 3,
            FiberType::IStar0 | FiberType::InStar(_) => 4,
        }
    }
}

impl fmt::Display for FiberType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FiberType::In(n) => write!(f, "I{n}"),
            FiberType::II => write!(f, "II"),
            FiberType::III => write!(f, "III"),
            FiberType::IV => write!(f, "IV"),
            FiberType::IStar0 => write!(f, "I0*"),
            FiberType::InStar(n) => write!(f, "I{n}*"),
            FiberType::IVStar => write!(f, "IV*"),
            FiberType::IIIStar => write!(f, "III*"),
            FiberType::IIStar => write!(f, "II*"),
        }
    }
}

/// One bad place of the fibration with its reduction data.
#[derive(Clone, Debug)]
pub struct KodairaFiber<K: Scalar> {
    pub place: Place<K>,
    pub fiber_type: FiberType,
    /// v(Delta) at the place.
    pub v_delta: u32,
    pub components: u32,
    pub component_group_order: u32,
    /// Number of conjugate roots in the cluster (1 at infinity).
    pub count: usize,
}

/// Fiber table plus the Euler characteristic bookkeeping of the surface.
#[derive(Clone, Debug)]
pub struct SurfaceSummary<K: Scalar> {
    pub chi: usize,
    pub fibers: Vec<KodairaFiber<K>>,
    /// True when there are no bad fibers at all (constant j, product surface).
    pub everywhere_good: bool,
}

impl<K: Scalar> SurfaceSummary<K> {
    /// Geometric genus, chi - 1 for these fibrations.
    pub fn pg(&self) -> i64 {
        self.chi as i64 - 1
    }

    /// `sum count * (components - 1)`: the fiber excess in the Shioda-Tate
    /// identity `rho = 2 + rank + excess (+ torsion-free corrections)`.
    pub fn component_excess(&self) -> i64 {
        self.fibers
            .iter()
            .map(|f| f.count as i64 * (f.components as i64 - 1))
            .sum()
    }

    /// `12 chi = sum count * v(Delta)` over all places including infinity.
    pub fn euler_sum_checks(&self) -> bool {
        let total: i64 = self
            .fibers
            .iter()
            .map(|f| f.count as i64 * f.v_delta as i64)
            .sum();
        total == 12 * self.chi as i64
    }

    pub fn fiber_at_infinity(&self) -> Option<&KodairaFiber<K>> {
        self.fibers.iter().find(|f| matches!(f.place, Place::Infinity))
    }

    /// All fibers multiplicative (type I_n)?
    pub fn all_multiplicative(&self) -> bool {
        self.fibers.iter().all(|f| f.fiber_type.is_multiplicative())
    }

    /// Product over all conjugate roots of the component group orders; the
    /// torsion subgroup embeds into the product of the component groups.
    pub fn torsion_bound_product(&self) -> num_bigint::BigInt {
        let mut acc = num_bigint::BigInt::from(1);
        for f in &self.fibers {
            for _ in 0..f.count {
                acc *= f.component_group_order;
            }
        }
        acc
    }
}

/// The reduction-type table in residue characteristic zero.
/// `v_c4 = None` encodes c4 = 0 (valuation +infinity).
pub fn reduction_type(v_c4: Option<i64>, v_delta: i64) -> Result<FiberType> {
    let vc4_at_least = |b: i64| v_c4.is_none_or(|v| v >= b);
    if v_delta == 0 {
        return Err(Error::UnclassifiableFiber("good reduction".into()));
    }
    if v_c4 == Some(0) {
        return Ok(FiberType::In(v_delta as u32));
    }
    if v_c4 == Some(2) && v_delta >= 7 {
        return Ok(FiberType::InStar((v_delta - 6) as u32));
    }
    match v_delta {
        2 => Ok(FiberType::II),
        3 => Ok(FiberType::III),
        4 if vc4_at_least(2) => Ok(FiberType::IV),
        6 if vc4_at_least(2) => Ok(FiberType::IStar0),
        8 if vc4_at_least(3) => Ok(FiberType::IVStar),
        9 if vc4_at_least(3) => Ok(FiberType::IIIStar),
        10 if vc4_at_least(4) => Ok(FiberType::IIStar),
        _ => Err(Error::UnclassifiableFiber(format!(
            "v(c4) = {v_c4:?}, v(Delta) = {v_delta}"
        ))),
    }
}

/// Classify every bad fiber of an integral, globally minimal model.
pub fn classify_fibers<K: Scalar>(m: &Model<K>) -> Result<SurfaceSummary<K>> {
    match m.minimality()? {
        Minimality::Minimal => {}
        Minimality::NonMinimalAt(p) => return Err(Error::NotMinimal(p.to_string())),
    }
    let inv = m.invariants();
    let delta = inv.delta.as_poly().expect("integral").clone();
    let chi = m.least_chart_weight()?;

    let mut fibers: Vec<KodairaFiber<K>> = Vec::new();
    if !delta.is_constant() {
        let mut basis = PlaceBasis::new(&[delta.clone()])?;
        if let Some(c4) = inv.c4.as_poly() {
            if !c4.is_zero() {
                basis.refine_with(c4)?;
            }
        }
        let (_, exps) = basis.factor(&delta)?;
        for (idx, v_delta) in exps {
            let cluster = basis.clusters()[idx].clone();
            let v_c4 = match inv.c4.as_poly() {
                Some(c4) if !c4.is_zero() => Some(c4.valuation_of_factor(&cluster)? as i64),
                _ => None,
            };
            let ty = reduction_type(v_c4, v_delta as i64)?;
            fibers.push(KodairaFiber {
                count: cluster.deg_or0(),
                place: Place::finite(cluster),
                fiber_type: ty,
                v_delta,
                components: ty.components(),
                component_group_order: ty.component_group_order(),
            });
        }
    }

    // the infinite place, in the s-chart with the least weight
    let n = chi as i64;
    let v_delta_inf = 12 * n - delta.deg_or0() as i64;
    if v_delta_inf > 0 {
        let v_c4_inf = match inv.c4.as_poly() {
            Some(c4) if !c4.is_zero() => Some(4 * n - c4.deg_or0() as i64),
            _ => None,
        };
        let ty = reduction_type(v_c4_inf, v_delta_inf)?;
        fibers.push(KodairaFiber {
            place: Place::Infinity,
            fiber_type: ty,
            v_delta: v_delta_inf as u32,
            components: ty.components(),
            component_group_order: ty.component_group_order(),
            count: 1,
        });
    }

    fibers.sort_by(|a, b| match (&a.place, &b.place) {
        (Place::Finite(x), Place::Finite(y)) => poly_order(x, y),
        (Place::Finite(_), Place::Infinity) => std::cmp::Ordering::Less,
        (Place::Infinity, Place::Finite(_)) => std::cmp::Ordering::Greater,
        (Place::Infinity, Place::Infinity) => std::cmp::Ordering::Equal,
    });

    Ok(SurfaceSummary { chi, everywhere_good: fibers.is_empty(), fibers })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Poly;
    use crate::rational::Rational;
    use crate::ratfun::RatFun;

    type QP = Poly<Rational>;

    fn p(c: &[i64]) -> QP {
        QP::from_ints(c)
    }

    fn find<'a>(s: &'a SurfaceSummary<Rational>, cluster: &QP) -> &'a KodairaFiber<Rational> {
        s.fibers
            .iter()
            .find(|f| matches!(&f.place, Place::Finite(c) if c == cluster))
            .unwrap_or_else(|| panic!("no fiber at {cluster}"))
    }

    #[test]
    fn classic_triple_fiber_table() {
        let m = Model::family(&p(&[-1, 0, 1]), &p(&[0, 2]));
        let s = classify_fibers(&m).unwrap();
        assert_eq!(s.chi, 2);
        let f = find(&s, &p(&[-1, 0, 1]));
        assert_eq!((f.fiber_type, f.count), (FiberType::In(4), 2));
        let f = find(&s, &p(&[0, 1]));
        assert_eq!((f.fiber_type, f.count), (FiberType::In(4), 1));
        let f = find(&s, &p(&[1, 0, -6, 0, 1]));
        assert_eq!((f.fiber_type, f.count), (FiberType::In(2), 4));
        let inf = s.fiber_at_infinity().unwrap();
        assert_eq!(inf.fiber_type, FiberType::In(4));
        // component total 24 = 12 chi
        let total: u32 = s.fibers.iter().map(|f| f.count as u32 * f.components).sum();
        assert_eq!(total, 24);
        assert!(s.euler_sum_checks());
    }

    #[test]
    fn inseparable_difference_fiber_table() {
        // f = t^2 - 1, g = t^2 + 1: f^2 - g^2 = -4 t^2 has a double root
        let m = Model::family(&p(&[-1, 0, 1]), &p(&[1, 0, 1]));
        let s = classify_fibers(&m).unwrap();
        assert_eq!(s.chi, 2);
        assert_eq!(find(&s, &p(&[-1, 0, 1])).fiber_type, FiberType::In(4));
        assert_eq!(find(&s, &p(&[1, 0, 1])).fiber_type, FiberType::In(4));
        assert_eq!(find(&s, &p(&[0, 1])).fiber_type, FiberType::In(4));
        let inf = s.fiber_at_infinity().unwrap();
        assert_eq!(inf.fiber_type, FiberType::In(4));
        assert!(s.euler_sum_checks());
    }

    #[test]
    fn additive_type_iv() {
        // y^2 = x^3 + t^2: v0(Delta) = 4, c4 = 0
        let m = Model::short(
            RatFun::zero(),
            RatFun::zero(),
            RatFun::from_poly(p(&[0, 0, 1])),
        );
        let s = classify_fibers(&m).unwrap();
        let f = find(&s, &p(&[0, 1]));
        assert_eq!(f.fiber_type, FiberType::IV);
        assert_eq!(f.components, 3);
        assert_eq!(f.component_group_order, 3);
        assert!(s.euler_sum_checks());
    }

    #[test]
    fn everywhere_good_reduction_flagged() {
        let m = Model::short(RatFun::zero(), RatFun::one(), RatFun::one());
        let s = classify_fibers(&m).unwrap();
        assert!(s.everywhere_good);
        assert_eq!(s.chi, 0);
        assert!(s.fibers.is_empty());
    }

    #[test]
    fn random_family_samples_match_multiplicity_rules()
    {
        // roots of f, g of multiplicity e give I_{4e}; roots of f^2 - g^2 of
        // multiplicity e give I_{2e}; at infinity n = 8 deg f - 4 deg g
        // - 2 deg(f^2 - g^2)
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let mut done = 0;
        while done < 50 {
            let f = QP::from_ints(&[
                rng.gen_range(-4..5),
                rng.gen_range(-4..5),
                rng.gen_range(1..4),
            ]);
            let g = QP::from_ints(&[rng.gen_range(-4..5), rng.gen_range(-4..5), rng.gen_range(0..3)]);
            if g.is_zero() || !f.coprime(&g) {
                continue;
            }
            let m = Model::family(&f, &g);
            if m.delta().is_zero() {
                continue;
            }
            let s = classify_fibers(&m).unwrap();
            assert!(s.euler_sum_checks());
            assert_eq!(s.chi, 2);
            let fg = &f * &g;
            let f2 = &f * &f;
            let g2 = &g * &g;
            let diff = &f2 - &g2;
            for fiber in &s.fibers {
                match &fiber.place {
                    Place::Finite(c) => {
                        let e_fg = fg.valuation_of_factor(c).unwrap();
                        let e_diff = diff.valuation_of_factor(c).unwrap();
                        // a cluster belongs to exactly one of the two groups
                        assert!(e_fg == 0 || e_diff == 0);
                        let expected = 4 * e_fg + 2 * e_diff;
                        assert_eq!(fiber.fiber_type, FiberType::In(expected));
                    }
                    Place::Infinity => {
                        let n = 8 * f.deg_or0() as i64
                            - 4 * g.deg_or0() as i64
                            - 2 * diff.deg_or0() as i64;
                        assert_eq!(fiber.fiber_type, FiberType::In(n as u32));
                    }
                }
            }
            done += 1;
        }
    }
}
