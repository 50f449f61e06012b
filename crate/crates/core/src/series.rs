//! Laurent polynomials and truncated power series with coefficients in the
//! numerical K0 ring of the base.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::base::{BaseSpace, K0Class};
use crate::bundle::PnBundleSpec;
use crate::error::{Error, Result};

/// Element of `K0(X)[T, T^-1]`. Zero coefficients are never stored, so two
/// polynomials are equal iff their term maps are equal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentPolyK0 {
    base: BaseSpace,
    terms: BTreeMap<i64, K0Class>,
}

impl LaurentPolyK0 {
    pub fn zero(base: BaseSpace) -> Self {
        LaurentPolyK0 {
            base,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(base: BaseSpace) -> Self {
        Self::monomial_unchecked(base, 0, K0Class::one())
    }

    /// `T^k`.
    pub fn t_power(base: BaseSpace, k: i64) -> Self {
        Self::monomial_unchecked(base, k, K0Class::one())
    }

    pub fn monomial(base: BaseSpace, exp: i64, c: K0Class) -> Result<Self> {
        base.check(&c)?;
        Ok(Self::monomial_unchecked(base, exp, c))
    }

    fn monomial_unchecked(base: BaseSpace, exp: i64, c: K0Class) -> Self {
        let mut p = Self::zero(base);
        p.add_term(exp, &c);
        p
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms<I>(base: BaseSpace, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (i64, K0Class)>,
    {
        let mut p = Self::zero(base);
        for (e, c) in terms {
            base.check(&c)?;
            p.add_term(e, &c);
        }
        Ok(p)
    }

    /// Dense constructor: `coeffs[i]` is the coefficient of `T^(offset + i)`.
    pub fn from_coeffs(base: BaseSpace, offset: i64, coeffs: &[K0Class]) -> Result<Self> {
        Self::from_terms(
            base,
            coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| (offset + i as i64, c.clone())),
        )
    }

    pub fn base(&self) -> BaseSpace {
        self.base
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &K0Class)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, exp: i64) -> K0Class {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub(crate) fn add_term(&mut self, exp: i64, c: &K0Class) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&exp);
        }
    }

    /// Multiplies every coefficient by the base class `c`.
    pub fn scale(&self, c: &K0Class) -> Self {
        let mut out = Self::zero(self.base);
        for (e, a) in self.terms() {
            out.add_term(e, &(a * c));
        }
        out
    }

    /// Multiplication by `T^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPolyK0 {
            base: self.base,
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    /// Coefficients of `T^0 .. T^order` as a truncated series.
    pub fn truncate(&self, order: usize) -> TruncatedSeriesK0 {
        TruncatedSeriesK0 {
            base: self.base,
            coeffs: (0..=order as i64).map(|i| self.coeff(i)).collect(),
        }
    }

    fn assert_same_base(&self, other: &Self) {
        assert_eq!(
            self.base, other.base,
            "Laurent polynomials over different bases"
        );
    }
}

impl fmt::Display for LaurentPolyK0 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match e {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}T")?,
                _ => write!(f, "{c}T^{e}")?,
            }
        }
        Ok(())
    }
}

impl<'a> Add<&'a LaurentPolyK0> for &'a LaurentPolyK0 {
    type Output = LaurentPolyK0;
    fn add(self, rhs: &LaurentPolyK0) -> LaurentPolyK0 {
        self.assert_same_base(rhs);
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, c);
        }
        out
    }
}

impl<'a> Sub<&'a LaurentPolyK0> for &'a LaurentPolyK0 {
    type Output = LaurentPolyK0;
    fn sub(self, rhs: &LaurentPolyK0) -> LaurentPolyK0 {
        self.assert_same_base(rhs);
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, &-c);
        }
        out
    }
}

impl<'a> Mul<&'a LaurentPolyK0> for &'a LaurentPolyK0 {
    type Output = LaurentPolyK0;
    fn mul(self, rhs: &LaurentPolyK0) -> LaurentPolyK0 {
        self.assert_same_base(rhs);
        let mut out = LaurentPolyK0::zero(self.base);
        for (i, a) in self.terms() {
            for (j, b) in rhs.terms() {
                out.add_term(i + j, &(a * b));
            }
        }
        out
    }
}

impl Neg for &LaurentPolyK0 {
    type Output = LaurentPolyK0;
    fn neg(self) -> LaurentPolyK0 {
        LaurentPolyK0 {
            base: self.base,
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

pub fn poly_add(p: &LaurentPolyK0, q: &LaurentPolyK0) -> LaurentPolyK0 {
    p + q
}

pub fn poly_mul(p: &LaurentPolyK0, q: &LaurentPolyK0) -> LaurentPolyK0 {
    p * q
}

pub fn poly_scale(p: &LaurentPolyK0, c: &K0Class) -> LaurentPolyK0 {
    p.scale(c)
}

/// Coefficients `[B_0], ..., [B_N]` of a power series in `K0(X)[[T]]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeriesK0 {
    base: BaseSpace,
    coeffs: Vec<K0Class>,
}

impl TruncatedSeriesK0 {
    pub fn new(base: BaseSpace, coeffs: Vec<K0Class>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a truncated series has at least one coefficient"
        );
        TruncatedSeriesK0 { base, coeffs }
    }

    pub fn base(&self) -> BaseSpace {
        self.base
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[K0Class] {
        &self.coeffs
    }

    pub fn ranks(&self) -> impl Iterator<Item = &num_bigint::BigInt> + '_ {
        self.coeffs.iter().map(|c| &c.rank)
    }

    pub fn to_poly(&self) -> LaurentPolyK0 {
        let mut p = LaurentPolyK0::zero(self.base);
        for (i, c) in self.coeffs.iter().enumerate() {
            p.add_term(i as i64, c);
        }
        p
    }

    /// True iff this is `1 + O(T^{N+1})`.
    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(K0Class::is_zero)
    }
}

/// Inverse of `p` in `K0(X)[[T]]`, truncated at `T^order`.
///
/// `b_0 = p_0^{-1}` and `b_n = -p_0^{-1} sum_{k=1}^{min(n, deg p)} p_k b_{n-k}`.
pub fn series_invert(p: &LaurentPolyK0, order: usize) -> Result<TruncatedSeriesK0> {
    if let Some(e) = p.min_exponent().filter(|&e| e < 0) {
        return Err(Error::NegativeExponent(e));
    }
    let p0 = p.coeff(0);
    let inv0 = p0
        .inverse()
        .map_err(|_| Error::NonUnitConstantTerm(p0.clone()))?;
    let deg = p.max_exponent().unwrap_or(0) as usize;
    let neg_inv0 = -&inv0;

    let mut b: Vec<K0Class> = Vec::with_capacity(order + 1);
    b.push(inv0);
    for n in 1..=order {
        let acc: K0Class = (1..=n.min(deg))
            .map(|k| &p.coeff(k as i64) * &b[n - k])
            .sum();
        b.push(&neg_inv0 * &acc);
    }
    Ok(TruncatedSeriesK0::new(p.base(), b))
}

fn check_ruled_ranks(e: &K0Class, q: &K0Class) -> Result<()> {
    if e.rank != 2.into() {
        return Err(Error::RankConstraintViolation {
            what: "E".into(),
            expected: 2.into(),
            found: e.rank.clone(),
        });
    }
    if q.rank != 1.into() {
        return Err(Error::RankConstraintViolation {
            what: "Q".into(),
            expected: 1.into(),
            found: q.rank.clone(),
        });
    }
    Ok(())
}

/// `[B_0], ..., [B_order]` for a quantum ruled surface with `[pr2* E] = e`
/// and `[pr2* Q] = q`, using `B_n = E B_{n-1} - Q B_{n-2}`.
pub fn hilbert_coeffs_ruled(e: &K0Class, q: &K0Class, order: usize) -> Result<Vec<K0Class>> {
    check_ruled_ranks(e, q)?;
    let mut b = Vec::with_capacity(order + 1);
    b.push(K0Class::one());
    if order >= 1 {
        b.push(e.clone());
    }
    for n in 2..=order {
        let next = &(e * &b[n - 1]) - &(q * &b[n - 2]);
        b.push(next);
    }
    Ok(b)
}

/// `[B_n]`, zero in negative degrees.
pub fn hilbert_coeff_ruled(e: &K0Class, q: &K0Class, n: i64) -> Result<K0Class> {
    check_ruled_ranks(e, q)?;
    if n < 0 {
        return Ok(K0Class::zero());
    }
    let mut b = hilbert_coeffs_ruled(e, q, n as usize)?;
    Ok(b.pop().expect("nonempty"))
}

/// Hilbert series of `pr2* B` as the inverse of the Koszul relation.
pub fn hilbert_series_pn(spec: &PnBundleSpec, order: usize) -> Result<TruncatedSeriesK0> {
    series_invert(&spec.relation_poly(), order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn c(r: i64, d: i64) -> K0Class {
        K0Class::new(r, d)
    }

    fn curve() -> BaseSpace {
        BaseSpace::curve(2)
    }

    fn poly(coeffs: &[(i64, i64)]) -> LaurentPolyK0 {
        let cs: Vec<_> = coeffs.iter().map(|&(r, d)| c(r, d)).collect();
        LaurentPolyK0::from_coeffs(curve(), 0, &cs).unwrap()
    }

    #[test]
    fn torsion_square_vanishes() {
        let p = poly(&[(1, 0), (0, 1)]);
        let q = poly(&[(1, 0), (0, -1)]);
        assert_eq!(&p * &q, LaurentPolyK0::one(curve()));
    }

    #[test]
    fn identity_and_zero() {
        let p = poly(&[(3, 1), (-2, 4), (0, 7)]);
        assert_eq!(&p * &LaurentPolyK0::one(curve()), p);
        assert!((&p * &LaurentPolyK0::zero(curve())).is_zero());
    }

    #[test]
    fn canonical_form_drops_zeros() {
        let p = poly(&[(1, 2), (0, 0), (3, 3)]);
        let q = poly(&[(-1, -2), (0, 0), (0, 0)]);
        let s = &p + &q;
        assert_eq!(s.terms().count(), 1);
        assert_eq!(s.min_exponent(), Some(2));
    }

    #[test]
    fn geometric_series() {
        let p = poly(&[(1, 0), (-1, 0)]);
        let b = series_invert(&p, 3).unwrap();
        assert_eq!(b.coeffs(), &[c(1, 0), c(1, 0), c(1, 0), c(1, 0)]);
    }

    #[test]
    fn invert_ruled_relation() {
        for de in -3..=3 {
            for dq in -3..=3 {
                let p = poly(&[(1, 0), (-2, -de), (1, dq)]);
                let b = series_invert(&p, 2).unwrap();
                assert_eq!(b.coeffs(), &[c(1, 0), c(2, de), c(3, 4 * de - dq)]);
            }
        }
    }

    #[test]
    fn invert_errors() {
        let p = poly(&[(2, 0), (1, 0)]);
        assert_eq!(
            series_invert(&p, 1),
            Err(Error::NonUnitConstantTerm(c(2, 0)))
        );
        let p = LaurentPolyK0::t_power(curve(), -1);
        assert_eq!(series_invert(&p, 1), Err(Error::NegativeExponent(-1)));
        let z = LaurentPolyK0::zero(curve());
        assert!(matches!(
            series_invert(&z, 1),
            Err(Error::NonUnitConstantTerm(_))
        ));
    }

    #[test]
    fn ruled_hilbert_coefficients() {
        let e = c(2, 5);
        let q = c(1, -1);
        assert_eq!(hilbert_coeff_ruled(&e, &q, -1).unwrap(), c(0, 0));
        assert_eq!(hilbert_coeff_ruled(&e, &q, 0).unwrap(), c(1, 0));
        assert_eq!(hilbert_coeff_ruled(&e, &q, 1).unwrap(), c(2, 5));
        assert_eq!(hilbert_coeff_ruled(&c(2, 0), &c(1, 0), 3).unwrap(), c(4, 0));
        assert!(matches!(
            hilbert_coeff_ruled(&c(3, 0), &q, 2),
            Err(Error::RankConstraintViolation { .. })
        ));
        assert!(matches!(
            hilbert_coeff_ruled(&e, &c(2, 0), 2),
            Err(Error::RankConstraintViolation { .. })
        ));
    }

    #[test]
    fn ruled_rank_law() {
        for de in -5..=5 {
            for dq in -5..=5 {
                let b = hilbert_coeffs_ruled(&c(2, de), &c(1, dq), 50).unwrap();
                for (n, bn) in b.iter().enumerate() {
                    assert_eq!(bn.rank, BigInt::from(n as i64 + 1));
                }
            }
        }
    }

    #[test]
    fn point_base_binomial_expansion() {
        // 1 / (1 - T)^2 = sum (n + 1) T^n
        let p =
            LaurentPolyK0::from_coeffs(BaseSpace::Point, 0, &[c(1, 0), c(-2, 0), c(1, 0)]).unwrap();
        let b = series_invert(&p, 3).unwrap();
        let ranks: Vec<_> = b.ranks().cloned().collect();
        assert_eq!(ranks, [1, 2, 3, 4].map(BigInt::from));
    }

    #[test]
    fn point_base_rejects_degrees() {
        assert!(LaurentPolyK0::monomial(BaseSpace::Point, 0, c(1, 1)).is_err());
    }
}
