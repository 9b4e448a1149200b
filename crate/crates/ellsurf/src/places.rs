//! Places of the projective line over k.
//!
//! A finite place is represented by a monic squarefree "cluster" polynomial:
//! it stands for the Galois orbit of its roots, which all carry identical
//! valuation data for quantities defined over k. Roots are never enumerated;
//! refining a gcd-free basis replaces root arithmetic over the algebraic
//! closure. The place at infinity is a separate symbol, with valuations
//! taken in the chart s = 1/t.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::ratfun::RatFun;
use crate::scalar::Scalar;

#[derive(Clone, PartialEq, Eq)]
pub enum Place<K: Scalar> {
    /// Cluster polynomial: monic, squarefree, nonconstant.
    Finite(Poly<K>),
    Infinity,
}

impl<K: Scalar> Place<K> {
    pub fn finite(cluster: Poly<K>) -> Self {
        Place::Finite(cluster.monic())
    }

    /// Number of conjugate roots the place stands for (1 at infinity).
    pub fn degree(&self) -> usize {
        match self {
            Place::Finite(c) => c.deg_or0(),
            Place::Infinity => 1,
        }
    }
}

impl<K: Scalar> fmt::Display for Place<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Finite(c) => write!(f, "({c})"),
            Place::Infinity => write!(f, "infinity"),
        }
    }
}

impl<K: Scalar> fmt::Debug for Place<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Deterministic ordering key for polynomials: degree first, then
/// coefficients from the leading one down, each compared by the scalar's
/// coordinate order. Used to sort clusters for reproducible reports.
pub fn poly_order<K: Scalar>(a: &Poly<K>, b: &Poly<K>) -> Ordering {
    match a.deg_or0().cmp(&b.deg_or0()) {
        Ordering::Equal => {}
        other => return other,
    }
    for k in (0..=a.deg_or0()).rev() {
        let (ca, cb) = (a.coeff(k).to_string(), b.coeff(k).to_string());
        match ca.cmp(&cb) {
            Ordering::Equal => {}
            other => return other,
        }
    }
    Ordering::Equal
}

/// Outcome of a cluster-local computation that may discover the cluster is
/// too coarse: the payload carries a proper factor to split along.
pub(crate) enum SplitOr<T, K: Scalar> {
    Done(T),
    Split(Poly<K>),
}

/// Valuation of a nonzero polynomial at a cluster; requests a split when the
/// roots of the cluster see different multiplicities.
pub(crate) fn poly_valuation_split<K: Scalar>(
    cluster: &Poly<K>,
    p: &Poly<K>,
) -> Result<SplitOr<u32, K>> {
    debug_assert!(!p.is_zero());
    let mut v = 0u32;
    let mut cur = p.clone();
    loop {
        let g = cluster.gcd(&cur)?;
        if g.is_one() {
            return Ok(SplitOr::Done(v));
        }
        if g == *cluster {
            cur = cur.div_exact(cluster)?;
            v += 1;
        } else {
            return Ok(SplitOr::Split(g));
        }
    }
}

/// Valuation of a rational function at a place. `None` encodes +infinity
/// (the zero function). `chart_weight` shifts the result at the infinite
/// place, matching coordinates rescaled by `s^weight` in the s-chart; it is
/// ignored at finite places.
pub fn valuation<K: Scalar>(
    place: &Place<K>,
    r: &RatFun<K>,
    chart_weight: i64,
) -> Result<Option<i64>> {
    if r.is_zero() {
        return Ok(None);
    }
    match place {
        Place::Infinity => Ok(Some(r.infinity_valuation().unwrap() + chart_weight)),
        Place::Finite(c) => {
            if c.is_constant() {
                return Err(Error::ConstantPolynomial);
            }
            let vn = match poly_valuation_split(c, r.num())? {
                SplitOr::Done(v) => v,
                SplitOr::Split(_) => return Err(Error::ClusterSplits),
            };
            let vd = match poly_valuation_split(c, r.den())? {
                SplitOr::Done(v) => v,
                SplitOr::Split(_) => return Err(Error::ClusterSplits),
            };
            Ok(Some(vn as i64 - vd as i64))
        }
    }
}

/// A gcd-free basis: pairwise coprime monic squarefree clusters refining a
/// set of source polynomials.
#[derive(Clone, Debug)]
pub struct PlaceBasis<K: Scalar> {
    clusters: Vec<Poly<K>>,
}

impl<K: Scalar> PlaceBasis<K> {
    pub fn empty() -> Self {
        PlaceBasis { clusters: Vec::new() }
    }

    /// Basis refining all nonzero sources; errors on a zero source.
    pub fn new(sources: &[Poly<K>]) -> Result<Self> {
        let mut basis = PlaceBasis::empty();
        for s in sources {
            basis.refine_with(s)?;
        }
        Ok(basis)
    }

    pub fn clusters(&self) -> &[Poly<K>] {
        &self.clusters
    }

    /// Add the squarefree factors of `p`; existing clusters split as needed.
    pub fn refine_with(&mut self, p: &Poly<K>) -> Result<()> {
        if p.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let (_, factors) = p.squarefree_decompose()?;
        for (f, _) in factors {
            self.insert_squarefree(f);
        }
        self.clusters.sort_by(poly_order);
        Ok(())
    }

    /// Split an existing cluster along a proper monic factor.
    pub(crate) fn split_cluster(&mut self, cluster: &Poly<K>, factor: &Poly<K>) {
        if let Some(pos) = self.clusters.iter().position(|c| c == cluster) {
            let rest = cluster.div_exact(factor).expect("proper factor");
            self.clusters[pos] = factor.clone();
            self.clusters.push(rest);
            self.clusters.sort_by(poly_order);
        }
    }

    fn insert_squarefree(&mut self, q: Poly<K>) {
        let mut q = q.monic();
        if q.is_constant() {
            return;
        }
        let mut out = Vec::with_capacity(self.clusters.len() + 1);
        for b in self.clusters.drain(..) {
            if q.is_constant() {
                out.push(b);
                continue;
            }
            let d = q.gcd(&b).expect("clusters nonzero");
            if d.is_one() {
                out.push(b);
                continue;
            }
            q = q.div_exact(&d).expect("gcd divides");
            if d == b {
                out.push(b);
            } else {
                out.push(b.div_exact(&d).expect("gcd divides"));
                out.push(d);
            }
        }
        if !q.is_constant() {
            out.push(q);
        }
        self.clusters = out;
    }

    /// Exact factorization of `p` over the basis: `p = lc * prod c_i^{m_i}`.
    /// Errors if the basis does not refine `p`.
    pub fn factor(&self, p: &Poly<K>) -> Result<(K, Vec<(usize, u32)>)> {
        if p.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut exps = Vec::new();
        let mut cur = p.monic();
        for (i, c) in self.clusters.iter().enumerate() {
            let v = cur.valuation_of_factor(c)?;
            if v > 0 {
                exps.push((i, v));
                cur = cur.div_exact(&c.pow(v))?;
            }
        }
        if !cur.is_one() {
            return Err(Error::ClusterSplits);
        }
        Ok((p.leading_coeff(), exps))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::Rational;

    type QP = Poly<Rational>;

    fn p(c: &[i64]) -> QP {
        QP::from_ints(c)
    }

    #[test]
    fn basis_of_the_classic_discriminant_factors() {
        // {t^2-1, 2t, t^4-6t^2+1}: pairwise coprime, so no splitting
        let basis =
            PlaceBasis::new(&[p(&[-1, 0, 1]), p(&[0, 2]), p(&[1, 0, -6, 0, 1])]).unwrap();
        let cl = basis.clusters();
        assert_eq!(cl.len(), 3);
        assert!(cl.contains(&p(&[-1, 0, 1])));
        assert!(cl.contains(&p(&[0, 1])));
        assert!(cl.contains(&p(&[1, 0, -6, 0, 1])));
    }

    #[test]
    fn forced_split() {
        let basis = PlaceBasis::new(&[p(&[-1, 0, 1]), p(&[-1, 1])]).unwrap();
        let cl = basis.clusters();
        assert_eq!(cl.len(), 2);
        assert!(cl.contains(&p(&[-1, 1])));
        assert!(cl.contains(&p(&[1, 1])));
    }

    #[test]
    fn squarefree_source_normalizes() {
        let basis = PlaceBasis::new(&[p(&[2, 0, 2])]).unwrap();
        assert_eq!(basis.clusters(), &[p(&[1, 0, 1])]);
    }

    #[test]
    fn factorization_reconstructs_sources() {
        let sources = [
            &p(&[-1, 0, 1]).pow(3) * &p(&[0, 2]),
            &p(&[-1, 1]) * &p(&[5, 1]).pow(2),
        ];
        let basis = PlaceBasis::new(&sources).unwrap();
        for s in &sources {
            let (lc, exps) = basis.factor(s).unwrap();
            let mut rebuilt = Poly::constant(lc);
            for (i, m) in exps {
                rebuilt = &rebuilt * &basis.clusters()[i].pow(m);
            }
            assert_eq!(&rebuilt, s);
        }
    }

    #[test]
    fn valuations() {
        let t = Place::finite(p(&[0, 1]));
        let two_t = RatFun::from_poly(p(&[0, 2]));
        assert_eq!(valuation(&t, &two_t, 0).unwrap(), Some(1));
        let r = RatFun::new(p(&[-1, 0, 1]), p(&[0, 1])).unwrap();
        assert_eq!(valuation(&t, &r, 0).unwrap(), Some(-1));
        // v_infinity((t^2-1)^2) = -4
        let sq = RatFun::from_poly(&p(&[-1, 0, 1]) * &p(&[-1, 0, 1]));
        assert_eq!(valuation(&Place::Infinity, &sq, 0).unwrap(), Some(-4));
        // zero has valuation +infinity
        assert_eq!(valuation(&t, &RatFun::zero(), 0).unwrap(), None);
        // cluster that splits against the argument
        let c = Place::finite(p(&[-1, 0, 1]));
        let half = RatFun::from_poly(&p(&[-1, 1]) * &p(&[-1, 0, 1]));
        assert_eq!(valuation(&c, &half, 0), Err(Error::ClusterSplits));
    }

    #[test]
    fn valuation_additive_on_products() {
        let places = [Place::finite(p(&[0, 1])), Place::finite(p(&[1, 1])), Place::Infinity];
        let r1 = RatFun::new(&p(&[0, 1]) * &p(&[1, 1]), p(&[3, 1])).unwrap();
        let r2 = RatFun::new(p(&[0, 0, 5]), p(&[1, 1])).unwrap();
        let prod = &r1 * &r2;
        for pl in &places {
            let a = valuation(pl, &r1, 0).unwrap().unwrap();
            let b = valuation(pl, &r2, 0).unwrap().unwrap();
            let c = valuation(pl, &prod, 0).unwrap().unwrap();
            assert_eq!(a + b, c);
        }
    }

    #[test]
    fn product_formula_degree_zero_sum() {
        // sum over all places of v(p), finite clusters weighted by degree,
        // is zero for any nonzero rational function
        let r = RatFun::new(&p(&[-1, 0, 1]) * &p(&[7, 0, 0, 1]), p(&[0, 2, 3])).unwrap();
        let mut basis = PlaceBasis::empty();
        basis.refine_with(r.num()).unwrap();
        basis.refine_with(r.den()).unwrap();
        let mut total: i64 = valuation(&Place::Infinity, &r, 0).unwrap().unwrap();
        for c in basis.clusters() {
            let v = valuation(&Place::finite(c.clone()), &r, 0).unwrap().unwrap();
            total += v * c.deg_or0() as i64;
        }
        assert_eq!(total, 0);
    }
}
