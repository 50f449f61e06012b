//! Intersection theory on quantum ruled surfaces.
//!
//! A class on the surface is represented by a Laurent polynomial whose
//! `T^i` coefficient `F` stands for `f^*F(-i)`. The derived pushforward of
//! `f^*L(n)` is `L . [B_n] - L . [B_{-2-n}]^*`, with `[B_k] = 0` for `k < 0`,
//! and the Euler form is obtained from it by adjunction and twist invariance:
//!
//! ```text
//! (a T^i, b T^j) = ( a, b [B_{i-j}] - b [B_{j-i-2}]^* )_X
//! ```
//!
//! Pairings are evaluated on the Laurent representative as given; classes
//! are only reduced to the `a + bT` normal form on request.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::base::{BaseSpace, K0Class};
use crate::bundle::{BundleClass, K0Presentation, PnBundleSpec};
use crate::error::{Error, Result};
use crate::lattice::{complement_basis, integer_kernel, IntMatrix};
use crate::series::{hilbert_coeffs_ruled, LaurentPolyK0};

/// Numerical data of a quantum ruled surface `P(E)` over a curve.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RuledSurface {
    genus: u64,
    e: K0Class,
    q: K0Class,
}

/// A class in `K0(P(E))`, kept as an unreduced Laurent representative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurfaceClass {
    rep: LaurentPolyK0,
}

impl SurfaceClass {
    pub fn rep(&self) -> &LaurentPolyK0 {
        &self.rep
    }

    /// `sum_i rank(c_i)`.
    pub fn rank_total(&self) -> BigInt {
        self.rep.terms().map(|(_, c)| c.rank.clone()).sum()
    }

    /// `c . T^k`, i.e. the twist `M -> M(-k)`.
    pub fn shifted(&self, k: i64) -> SurfaceClass {
        SurfaceClass {
            rep: self.rep.shift(k),
        }
    }

    /// The twist `M -> M(n)`.
    pub fn twist(&self, n: i64) -> SurfaceClass {
        self.shifted(-n)
    }

    pub fn scale(&self, k: i64) -> SurfaceClass {
        SurfaceClass {
            rep: self.rep.scale(&K0Class::new(k, 0)),
        }
    }
}

impl std::ops::Add<&SurfaceClass> for &SurfaceClass {
    type Output = SurfaceClass;
    fn add(self, rhs: &SurfaceClass) -> SurfaceClass {
        SurfaceClass {
            rep: &self.rep + &rhs.rep,
        }
    }
}

impl std::ops::Sub<&SurfaceClass> for &SurfaceClass {
    type Output = SurfaceClass;
    fn sub(self, rhs: &SurfaceClass) -> SurfaceClass {
        SurfaceClass {
            rep: &self.rep - &rhs.rep,
        }
    }
}

impl RuledSurface {
    pub fn new(genus: u64, e: K0Class, q: K0Class) -> Result<Self> {
        if e.rank != BigInt::from(2) {
            return Err(Error::RankConstraintViolation {
                what: "E (a quantum ruled surface needs a rank 2 bimodule)".into(),
                expected: 2.into(),
                found: e.rank,
            });
        }
        if !q.rank.is_one() {
            return Err(Error::RankConstraintViolation {
                what: "Q (must be invertible)".into(),
                expected: 1.into(),
                found: q.rank,
            });
        }
        Ok(RuledSurface { genus, e, q })
    }

    /// Surface with `deg pr2* E = deg_e` and `deg pr2* Q = deg_q`.
    pub fn from_degrees(genus: u64, deg_e: impl Into<BigInt>, deg_q: impl Into<BigInt>) -> Self {
        Self::new(genus, K0Class::new(2, deg_e), K0Class::new(1, deg_q)).expect("ranks are fixed")
    }

    pub fn genus(&self) -> u64 {
        self.genus
    }

    pub fn base(&self) -> BaseSpace {
        BaseSpace::curve(self.genus)
    }

    pub fn e(&self) -> &K0Class {
        &self.e
    }

    pub fn q(&self) -> &K0Class {
        &self.q
    }

    pub fn bundle_spec(&self) -> PnBundleSpec {
        PnBundleSpec::ruled(self.genus, self.e.clone(), self.q.clone())
            .expect("ruled surface data is a valid P^1-bundle")
    }

    pub fn presentation(&self) -> K0Presentation {
        self.bundle_spec().presentation()
    }

    /// Normal form `a + bT` of a class.
    pub fn reduce(&self, c: &SurfaceClass) -> BundleClass {
        self.presentation().reduce(&c.rep)
    }

    pub fn class(&self, rep: LaurentPolyK0) -> Result<SurfaceClass> {
        if rep.base() != self.base() {
            return Err(Error::InvalidBundle(format!(
                "class over {} used on a surface over {}",
                rep.base(),
                self.base()
            )));
        }
        Ok(SurfaceClass { rep })
    }

    fn monomial(&self, exp: i64, c: K0Class) -> SurfaceClass {
        SurfaceClass {
            rep: LaurentPolyK0::monomial(self.base(), exp, c).expect("curve base accepts degrees"),
        }
    }

    /// `f^* F`.
    pub fn pullback(&self, f: &K0Class) -> SurfaceClass {
        self.monomial(0, f.clone())
    }

    /// `f^* O_p`.
    pub fn fiber_class(&self) -> SurfaceClass {
        self.monomial(0, K0Class::point())
    }

    /// `H = [O] - [O(-1)]`.
    pub fn section_class_h(&self) -> SurfaceClass {
        &self.structure_class(0) - &self.structure_class(-1)
    }

    /// `[O(n)] = T^{-n}`.
    pub fn structure_class(&self, n: i64) -> SurfaceClass {
        self.monomial(-n, K0Class::one())
    }

    /// `[B_0], ..., [B_max]`.
    fn hilbert(&self, max: i64) -> Vec<K0Class> {
        hilbert_coeffs_ruled(&self.e, &self.q, max.max(0) as usize).expect("validated ranks")
    }

    /// `[Rf_* f^*L(n)] / L = [B_n] - [B_{-2-n}]^*`.
    fn pushforward_kernel(b: &[K0Class], n: i64) -> K0Class {
        let at = |k: i64| -> K0Class {
            if k < 0 {
                K0Class::zero()
            } else {
                b[k as usize].clone()
            }
        };
        &at(n) - &at(-2 - n).dual()
    }

    /// `[f_* M] - [R^1 f_* M]` in `K0(X)`.
    pub fn pushforward_class(&self, c: &SurfaceClass) -> K0Class {
        let span = c
            .rep
            .terms()
            .map(|(i, _)| i.unsigned_abs() as i64 + 2)
            .max()
            .unwrap_or(0);
        let b = self.hilbert(span);
        c.rep
            .terms()
            .map(|(i, ci)| ci * &Self::pushforward_kernel(&b, -i))
            .sum()
    }

    pub fn euler_form(&self, a: &SurfaceClass, b: &SurfaceClass) -> BigInt {
        let (Some(a_lo), Some(a_hi)) = (a.rep.min_exponent(), a.rep.max_exponent()) else {
            return BigInt::zero();
        };
        let (Some(b_lo), Some(b_hi)) = (b.rep.min_exponent(), b.rep.max_exponent()) else {
            return BigInt::zero();
        };
        let span = (a_hi - b_lo).abs().max((b_hi - a_lo).abs()) + 2;
        let hilb = self.hilbert(span);
        let base = self.base();
        let mut total = BigInt::zero();
        for (i, ai) in a.rep.terms() {
            for (j, bj) in b.rep.terms() {
                let push = bj * &Self::pushforward_kernel(&hilb, i - j);
                total += base.euler_form(ai, &push);
            }
        }
        total
    }

    /// `M . N = -(M, N)`.
    pub fn intersect(&self, a: &SurfaceClass, b: &SurfaceClass) -> BigInt {
        -self.euler_form(a, b)
    }

    /// `e = -H . H = -deg pr2* E`.
    pub fn e_invariant(&self) -> BigInt {
        -&self.e.degree
    }

    pub fn intersection_table(&self) -> IntersectionTable {
        let f = self.fiber_class();
        let h = self.section_class_h();
        IntersectionTable {
            fiber_fiber: self.intersect(&f, &f),
            fiber_h: self.intersect(&f, &h),
            h_fiber: self.intersect(&h, &f),
            h_h: self.intersect(&h, &h),
        }
    }

    /// Numerical basis of the rank-zero part: fiber, fiber . H, H.
    pub fn f1_basis(&self) -> Vec<SurfaceClass> {
        let fiber = self.fiber_class();
        let fiber_h = &fiber - &fiber.shifted(1);
        vec![fiber, fiber_h, self.section_class_h()]
    }

    pub fn neron_severi(&self) -> IntersectionLattice {
        IntersectionLattice::new(self, self.f1_basis())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionTable {
    pub fiber_fiber: BigInt,
    pub fiber_h: BigInt,
    pub h_fiber: BigInt,
    pub h_h: BigInt,
}

/// A finite basis with its Euler Gram matrix, the two-sided radical and the
/// intersection form induced on the quotient lattice.
#[derive(Debug, Clone)]
pub struct IntersectionLattice {
    pub basis: Vec<SurfaceClass>,
    pub euler_gram: IntMatrix,
    /// Radical vectors in coordinates of `basis`.
    pub radical: Vec<Vec<BigInt>>,
    /// Lifts of a basis of the quotient, in coordinates of `basis`.
    pub quotient_basis: Vec<Vec<BigInt>>,
    /// Intersection form `-(x, y)` on `quotient_basis`.
    pub quotient_gram: IntMatrix,
}

impl IntersectionLattice {
    pub fn new(surface: &RuledSurface, basis: Vec<SurfaceClass>) -> Self {
        Self::from_pairing(basis, |x, y| surface.euler_form(x, y))
    }

    /// Same construction for an arbitrary bilinear `euler` pairing.
    pub fn from_pairing<F>(basis: Vec<SurfaceClass>, euler: F) -> Self
    where
        F: Fn(&SurfaceClass, &SurfaceClass) -> BigInt,
    {
        assert!(!basis.is_empty(), "empty lattice basis");
        let n = basis.len();
        let mut gram = IntMatrix::zeros(n, n);
        for (i, x) in basis.iter().enumerate() {
            for (j, y) in basis.iter().enumerate() {
                gram[(i, j)] = euler(x, y);
            }
        }
        let radical = integer_kernel(&gram.stack(&gram.transpose()));
        let quotient_basis = complement_basis(n, &radical);
        let k = quotient_basis.len();
        let mut quotient_gram = IntMatrix::zeros(k, k);
        for (i, x) in quotient_basis.iter().enumerate() {
            for (j, y) in quotient_basis.iter().enumerate() {
                quotient_gram[(i, j)] = -gram.bilinear(x, y);
            }
        }
        IntersectionLattice {
            basis,
            euler_gram: gram,
            radical,
            quotient_basis,
            quotient_gram,
        }
    }

    /// Classes spanning the radical.
    pub fn radical_classes(&self) -> Vec<SurfaceClass> {
        self.radical.iter().map(|v| self.combine(v)).collect()
    }

    pub fn quotient_classes(&self) -> Vec<SurfaceClass> {
        self.quotient_basis
            .iter()
            .map(|v| self.combine(v))
            .collect()
    }

    fn combine(&self, coords: &[BigInt]) -> SurfaceClass {
        let base = self.basis[0].rep.base();
        let mut rep = LaurentPolyK0::zero(base);
        for (x, c) in self.basis.iter().zip(coords) {
            rep = &rep + &x.rep.scale(&K0Class::new(c.clone(), 0));
        }
        SurfaceClass { rep }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(r: i64, d: i64) -> K0Class {
        K0Class::new(r, d)
    }

    fn big(x: i64) -> BigInt {
        BigInt::from(x)
    }

    #[test]
    fn named_classes() {
        let s = RuledSurface::from_degrees(1, 3, -2);
        let h = s.section_class_h();
        assert_eq!(
            h.rep().terms().collect::<Vec<_>>(),
            [(0, &c(1, 0)), (1, &c(-1, 0))]
        );
        assert_eq!(
            s.fiber_class().rep().terms().collect::<Vec<_>>(),
            [(0, &c(0, 1))]
        );
        assert_eq!(
            s.structure_class(0).rep().terms().collect::<Vec<_>>(),
            [(0, &c(1, 0))]
        );
    }

    #[test]
    fn ranks() {
        let s = RuledSurface::from_degrees(0, 1, 1);
        for n in -5..=5 {
            assert_eq!(s.structure_class(n).rank_total(), big(1));
            assert_eq!(s.fiber_class().twist(n).rank_total(), big(0));
        }
        assert_eq!(s.section_class_h().rank_total(), big(0));
    }

    #[test]
    fn pushforwards() {
        let s = RuledSurface::from_degrees(2, 3, -1);
        for n in 0..6 {
            let expected = crate::series::hilbert_coeff_ruled(s.e(), s.q(), n).unwrap();
            assert_eq!(s.pushforward_class(&s.structure_class(n)), expected);
        }
        assert_eq!(s.pushforward_class(&s.structure_class(-1)), c(0, 0));
        assert_eq!(s.pushforward_class(&s.structure_class(-2)), c(-1, 0));
        // R^1 f_* O(-3) = B_1^*
        assert_eq!(s.pushforward_class(&s.structure_class(-3)), c(-2, 3));
    }

    #[test]
    fn pairings() {
        for g in 0..3 {
            for de in -3..=3 {
                let s = RuledSurface::from_degrees(g, de, 1);
                let f = s.fiber_class();
                let h = s.section_class_h();
                for n in -1..=6 {
                    assert_eq!(s.euler_form(&s.structure_class(0), &f.twist(n)), big(n + 1));
                }
                assert_eq!(s.euler_form(&f, &h), big(-1));
                assert_eq!(s.euler_form(&h, &h), big(-de));
                let t = s.intersection_table();
                assert_eq!(
                    (t.fiber_fiber, t.fiber_h, t.h_fiber, t.h_h),
                    (big(0), big(1), big(1), big(de))
                );
            }
        }
    }

    #[test]
    fn neron_severi_lattice() {
        let s = RuledSurface::from_degrees(3, -4, 2);
        let ns = s.neron_severi();
        let expected = IntMatrix::from_rows(&[vec![0, 0, -1], vec![0, 0, 0], vec![-1, 0, 4]]);
        assert_eq!(ns.euler_gram, expected);
        assert_eq!(ns.radical.len(), 1);
        let rad = &ns.radical_classes()[0];
        let v = &ns.basis[1];
        assert!(rad == v || *rad == v.scale(-1));
        assert_eq!(
            ns.quotient_gram,
            IntMatrix::from_rows(&[vec![0, 1], vec![1, -4]])
        );
        assert_eq!(ns.quotient_gram.determinant(), big(-1));
        assert_eq!(
            ns.quotient_classes(),
            vec![s.fiber_class(), s.section_class_h()]
        );
    }

    #[test]
    fn e_invariants() {
        assert_eq!(RuledSurface::from_degrees(0, -3, 0).e_invariant(), big(3));
        assert_eq!(RuledSurface::from_degrees(0, 0, 0).e_invariant(), big(0));
        for e in 0..=5 {
            let s = RuledSurface::from_degrees(0, -e, -e);
            let h = s.section_class_h();
            assert_eq!(s.e_invariant(), big(e));
            assert_eq!(s.e_invariant(), -s.intersect(&h, &h));
        }
    }

    #[test]
    fn rejects_bad_ranks() {
        assert!(RuledSurface::new(0, c(3, 0), c(1, 0)).is_err());
        assert!(RuledSurface::new(0, c(2, 0), c(2, 0)).is_err());
    }
}
