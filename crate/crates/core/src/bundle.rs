//! Grothendieck groups of quantum projective-space bundles, presented as
//! `K0(X)[T, T^-1] / (relation)` where the relation is the inverse Hilbert
//! series `sum_q (-1)^q [pr2* E_q] T^q`.
//!
//! Reduction to the normal form of degree `<= n` needs both the constant and
//! the leading coefficient of the relation to be units, so that `T` is
//! invertible in the quotient and high powers can be divided out.

use std::fmt;

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::One;

use crate::base::{BaseSpace, K0Class};
use crate::error::{Error, Result};
use crate::lattice::{smith_normal_form, IntMatrix};
use crate::series::LaurentPolyK0;

/// Koszul data of a quantum `P^n`-bundle: `koszul[q] = [pr2* E_q]` for
/// `q = 0, ..., n + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PnBundleSpec {
    base: BaseSpace,
    n: usize,
    koszul: Vec<K0Class>,
}

impl PnBundleSpec {
    /// Validates `koszul[0] = (1, 0)` and `rank koszul[q] = C(n + 1, q)`.
    pub fn new(base: BaseSpace, koszul: Vec<K0Class>) -> Result<Self> {
        if koszul.len() < 3 {
            return Err(Error::InvalidBundle(format!(
                "need at least 3 Koszul classes (n >= 1), got {}",
                koszul.len()
            )));
        }
        let n = koszul.len() - 2;
        for c in &koszul {
            base.check(c)?;
        }
        for (q, c) in koszul.iter().enumerate() {
            let expected = binomial(BigInt::from(n + 1), BigInt::from(q));
            if c.rank != expected {
                return Err(Error::RankConstraintViolation {
                    what: format!(
                        "Koszul class E_{q} of a P^{n}-bundle (binomial({}, {q}))",
                        n + 1
                    ),
                    expected,
                    found: c.rank.clone(),
                });
            }
        }
        if !koszul[0].is_one() {
            return Err(Error::InvalidBundle(format!(
                "E_0 must be the class of the diagonal (1, 0), got {}",
                koszul[0]
            )));
        }
        Ok(PnBundleSpec { base, n, koszul })
    }

    /// Quantum ruled surface: `E_0 = (1, 0)`, `E_1 = e`, `E_2 = q`.
    pub fn ruled(genus: u64, e: K0Class, q: K0Class) -> Result<Self> {
        Self::new(BaseSpace::curve(genus), vec![K0Class::one(), e, q])
    }

    /// Trivial bundle: `E_q` the q-th exterior power of a trivial rank
    /// `n + 1` bundle.
    pub fn trivial(base: BaseSpace, n: usize) -> Self {
        let koszul = (0..=n + 1)
            .map(|q| K0Class::new(binomial(BigInt::from(n + 1), BigInt::from(q)), 0))
            .collect();
        Self::new(base, koszul).expect("binomial ranks are valid")
    }

    pub fn base(&self) -> BaseSpace {
        self.base
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn koszul(&self) -> &[K0Class] {
        &self.koszul
    }

    /// `sum_q (-1)^q koszul[q] T^q`.
    pub fn relation_poly(&self) -> LaurentPolyK0 {
        let terms = self.koszul.iter().enumerate().map(|(q, c)| {
            let c = if q % 2 == 0 { c.clone() } else { -c };
            (q as i64, c)
        });
        LaurentPolyK0::from_terms(self.base, terms).expect("validated classes")
    }

    pub fn presentation(&self) -> K0Presentation {
        K0Presentation::new(self.relation_poly()).expect("validated bundle relation")
    }

    pub fn group_structure(&self) -> GroupStructure {
        self.presentation().group_structure()
    }
}

/// A class in the quotient, written in the basis `1, T, ..., T^n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BundleClass {
    base: BaseSpace,
    coeffs: Vec<K0Class>,
}

impl BundleClass {
    pub fn coeffs(&self) -> &[K0Class] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(K0Class::is_zero)
    }

    pub fn to_poly(&self) -> LaurentPolyK0 {
        LaurentPolyK0::from_coeffs(self.base, 0, &self.coeffs).expect("classes live on the base")
    }
}

impl fmt::Display for BundleClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_poly().fmt(f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupStructure {
    /// Rank of the quotient as a free `K0(X)`-module.
    pub free_rank_over_base: usize,
    /// For a point base, the rank of the quotient as a free abelian group.
    pub point_base_abelian_rank: Option<usize>,
}

/// `K0(X)[T, T^-1] / (relation)` for a relation whose constant and leading
/// coefficients are units.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct K0Presentation {
    relation: LaurentPolyK0,
    degree: usize,
    /// `T^-1` written as a polynomial of degree `< degree`.
    t_inverse: LaurentPolyK0,
    lead_inverse: K0Class,
}

impl K0Presentation {
    pub fn new(relation: LaurentPolyK0) -> Result<Self> {
        let (Some(lo), Some(hi)) = (relation.min_exponent(), relation.max_exponent()) else {
            return Err(Error::InvalidRelation("is zero".into()));
        };
        if lo != 0 {
            return Err(Error::InvalidRelation(format!(
                "must start at T^0, lowest exponent is {lo}"
            )));
        }
        if hi < 1 {
            return Err(Error::InvalidRelation("must have degree at least 1".into()));
        }
        let c0 = relation.coeff(0);
        let const_inverse = c0.inverse().map_err(|_| {
            Error::InvalidRelation(format!("constant coefficient {c0} is not a unit"))
        })?;
        let lead = relation.coeff(hi);
        let lead_inverse = lead.inverse().map_err(|_| {
            Error::InvalidRelation(format!(
                "leading coefficient {lead} is not a unit; the quotient is not finitely generated"
            ))
        })?;

        // r_0 + T (r_1 + r_2 T + ...) = 0  =>  T^-1 = -r_0^-1 (r_1 + r_2 T + ...)
        let mut t_inverse = LaurentPolyK0::zero(relation.base());
        for (e, c) in relation.terms().filter(|&(e, _)| e > 0) {
            t_inverse.add_term(e - 1, &-(&const_inverse * c));
        }

        Ok(K0Presentation {
            degree: hi as usize,
            relation,
            t_inverse,
            lead_inverse,
        })
    }

    pub fn relation(&self) -> &LaurentPolyK0 {
        &self.relation
    }

    pub fn base(&self) -> BaseSpace {
        self.relation.base()
    }

    /// Number of basis elements `1, T, ..., T^{degree-1}` of the normal form.
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// The unique representative of degree `< degree` congruent to `p`.
    pub fn reduce(&self, p: &LaurentPolyK0) -> BundleClass {
        assert_eq!(p.base(), self.base(), "class over a different base");
        let mut work = p.clone();
        let top = self.degree as i64;

        while let Some(k) = work.min_exponent().filter(|&k| k < 0) {
            let c = work.coeff(k);
            work.add_term(k, &-&c);
            for (e, t) in self.t_inverse.terms() {
                work.add_term(k + 1 + e, &(&c * t));
            }
        }
        while let Some(k) = work.max_exponent().filter(|&k| k >= top) {
            let c = &work.coeff(k) * &self.lead_inverse;
            for (e, r) in self.relation.terms() {
                work.add_term(k - top + e, &-(&c * r));
            }
        }

        BundleClass {
            base: self.base(),
            coeffs: (0..top).map(|i| work.coeff(i)).collect(),
        }
    }

    /// `f^* F` as the constant class `F`.
    pub fn pullback(&self, f: &K0Class) -> Result<BundleClass> {
        let p = LaurentPolyK0::monomial(self.base(), 0, f.clone())?;
        Ok(self.reduce(&p))
    }

    /// `c . T^k`, the class of `M(-k)`.
    pub fn twist(&self, c: &BundleClass, k: i64) -> BundleClass {
        self.reduce(&c.to_poly().shift(k))
    }

    /// Image of a torsion class under the map to graded K0: `f` times the
    /// relation.
    pub fn rho_of(&self, f: &K0Class) -> Result<LaurentPolyK0> {
        self.base().check(f)?;
        Ok(self.relation.scale(f))
    }

    pub fn group_structure(&self) -> GroupStructure {
        let point_base_abelian_rank = self.base().is_point().then(|| self.abelian_rank());
        GroupStructure {
            free_rank_over_base: self.degree,
            point_base_abelian_rank,
        }
    }

    /// Over a point: `Z[T]/(p)` presented on generators `1, ..., T^{2d-1}`
    /// with relations `T^k p` for `k < d`, read off from its Smith form.
    fn abelian_rank(&self) -> usize {
        let d = self.degree;
        let gens = 2 * d;
        let mut m = IntMatrix::zeros(d, gens);
        for k in 0..d {
            for (e, c) in self.relation.terms() {
                m[(k, k + e as usize)] = c.rank.clone();
            }
        }
        let snf = smith_normal_form(&m);
        debug_assert!(snf.invariant_factors().iter().all(One::is_one));
        gens - snf.rank
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(r: i64, d: i64) -> K0Class {
        K0Class::new(r, d)
    }

    fn ruled(de: i64, dq: i64) -> PnBundleSpec {
        PnBundleSpec::ruled(1, c(2, de), c(1, dq)).unwrap()
    }

    #[test]
    fn ruled_relation() {
        let spec = ruled(3, -2);
        let expected =
            LaurentPolyK0::from_coeffs(spec.base(), 0, &[c(1, 0), c(-2, -3), c(1, -2)]).unwrap();
        assert_eq!(spec.relation_poly(), expected);
    }

    #[test]
    fn commutative_p2_relation() {
        let spec = PnBundleSpec::trivial(BaseSpace::Point, 2);
        let expected = LaurentPolyK0::from_coeffs(
            BaseSpace::Point,
            0,
            &[c(1, 0), c(-3, 0), c(3, 0), c(-1, 0)],
        )
        .unwrap();
        assert_eq!(spec.relation_poly(), expected);
    }

    #[test]
    fn validation_errors() {
        let err = PnBundleSpec::new(BaseSpace::curve(0), vec![c(1, 0), c(5, 0), c(1, 0)]);
        assert!(matches!(err, Err(Error::RankConstraintViolation { .. })));
        let err = PnBundleSpec::new(BaseSpace::curve(0), vec![c(1, 1), c(2, 0), c(1, 0)]);
        assert!(matches!(err, Err(Error::InvalidBundle(_))));
        let err = PnBundleSpec::new(BaseSpace::curve(0), vec![c(1, 0), c(2, 0)]);
        assert!(matches!(err, Err(Error::InvalidBundle(_))));
        let err = PnBundleSpec::new(BaseSpace::Point, vec![c(1, 0), c(2, 1), c(1, 0)]);
        assert!(matches!(err, Err(Error::DegreeOnPoint(_))));
    }

    #[test]
    fn relation_reduces_to_zero() {
        let spec = ruled(4, 1);
        let pres = spec.presentation();
        assert!(pres.reduce(&spec.relation_poly()).is_zero());
        assert!(pres.reduce(&spec.relation_poly().shift(-5)).is_zero());
    }

    // 1 - E T + Q T^2 = 0  =>  T^2 = Q^-1 (E T - 1)
    #[test]
    fn reduce_t_squared() {
        for de in -3..=3 {
            for dq in -3..=3 {
                let spec = ruled(de, dq);
                let pres = spec.presentation();
                let got = pres.reduce(&LaurentPolyK0::t_power(spec.base(), 2));
                assert_eq!(got.coeffs(), &[c(-1, dq), c(2, de - 2 * dq)]);
                let twisted = pres.twist(&pres.pullback(&c(1, 0)).unwrap(), 2);
                assert_eq!(twisted, got);
            }
        }
    }

    #[test]
    fn t_times_t_inverse() {
        let spec = ruled(2, 7);
        let pres = spec.presentation();
        let p = &LaurentPolyK0::t_power(spec.base(), 1) * &LaurentPolyK0::t_power(spec.base(), -1);
        assert_eq!(pres.reduce(&p), pres.pullback(&K0Class::one()).unwrap());
        // reduce T^-1 and multiply back by T
        let tinv = pres.reduce(&LaurentPolyK0::t_power(spec.base(), -1));
        assert_eq!(pres.twist(&tinv, 1).coeffs(), &[c(1, 0), c(0, 0)]);
    }

    #[test]
    fn twist_round_trip() {
        let spec = ruled(-1, 3);
        let pres = spec.presentation();
        let x = pres.reduce(
            &LaurentPolyK0::from_coeffs(spec.base(), -2, &[c(1, 1), c(0, 3), c(-2, 5), c(4, 0)])
                .unwrap(),
        );
        for k in -4..=4 {
            assert_eq!(pres.twist(&pres.twist(&x, k), -k), x);
        }
    }

    #[test]
    fn rho_values() {
        let spec = ruled(3, -1);
        let pres = spec.presentation();
        assert_eq!(pres.rho_of(&c(1, 0)).unwrap(), spec.relation_poly());
        let expected =
            LaurentPolyK0::from_coeffs(spec.base(), 0, &[c(0, 1), c(0, -2), c(0, 1)]).unwrap();
        assert_eq!(pres.rho_of(&c(0, 1)).unwrap(), expected);
        assert!(pres.rho_of(&c(0, 0)).unwrap().is_zero());
    }

    #[test]
    fn group_structures() {
        let p2 = PnBundleSpec::trivial(BaseSpace::Point, 2).group_structure();
        assert_eq!(p2.free_rank_over_base, 3);
        assert_eq!(p2.point_base_abelian_rank, Some(3));
        let rs = ruled(0, 0).group_structure();
        assert_eq!(rs.free_rank_over_base, 2);
        assert_eq!(rs.point_base_abelian_rank, None);
        let p3 = PnBundleSpec::trivial(BaseSpace::curve(2), 3).group_structure();
        assert_eq!(p3.free_rank_over_base, 4);
    }

    #[test]
    fn non_unit_leading_coefficient_is_refused() {
        let p = LaurentPolyK0::from_coeffs(BaseSpace::Point, 0, &[c(1, 0), c(-2, 0)]).unwrap();
        assert!(matches!(
            K0Presentation::new(p),
            Err(Error::InvalidRelation(_))
        ));
        let p = LaurentPolyK0::from_coeffs(BaseSpace::Point, 0, &[c(2, 0), c(-1, 0)]).unwrap();
        assert!(matches!(
            K0Presentation::new(p),
            Err(Error::InvalidRelation(_))
        ));
    }
}
