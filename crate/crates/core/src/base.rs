//! Numerical Grothendieck ring of the base: a smooth projective curve of
//! genus `g`, or a point.
//!
//! A coherent sheaf on a curve is recorded by its image under
//! `(rank, degree)`. The ring structure is the one induced by the tensor
//! product, `(r1, d1) * (r2, d2) = (r1 r2, r1 d2 + d1 r2)`, and the Euler
//! form is Riemann-Roch:
//!
//! ```text
//! (a, b) = (1 - g) ra rb + ra db - da rb
//! ```
//!
//! On a point every class has degree zero and the form is `ra rb`.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BaseSpace {
    Point,
    Curve { genus: u64 },
}

impl BaseSpace {
    pub fn curve(genus: u64) -> Self {
        BaseSpace::Curve { genus }
    }

    pub fn is_point(&self) -> bool {
        matches!(self, BaseSpace::Point)
    }

    pub fn genus(&self) -> Option<u64> {
        match *self {
            BaseSpace::Point => None,
            BaseSpace::Curve { genus } => Some(genus),
        }
    }

    /// `(O, O) = 1 - g`; equal to 1 on a point.
    pub fn euler_characteristic(&self) -> BigInt {
        match *self {
            BaseSpace::Point => BigInt::one(),
            BaseSpace::Curve { genus } => BigInt::one() - BigInt::from(genus),
        }
    }

    /// Checks that `c` can live on this base.
    pub fn check(&self, c: &K0Class) -> Result<()> {
        if self.is_point() && !c.degree.is_zero() {
            return Err(Error::DegreeOnPoint(c.clone()));
        }
        Ok(())
    }

    pub fn euler_form(&self, a: &K0Class, b: &K0Class) -> BigInt {
        euler_form_base(a, b, *self)
    }
}

impl fmt::Display for BaseSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BaseSpace::Point => write!(f, "point"),
            BaseSpace::Curve { genus } => write!(f, "curve of genus {genus}"),
        }
    }
}

/// Numerical class `(rank, degree)` in K0 of the base.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct K0Class {
    pub rank: BigInt,
    pub degree: BigInt,
}

impl K0Class {
    pub fn new(rank: impl Into<BigInt>, degree: impl Into<BigInt>) -> Self {
        K0Class {
            rank: rank.into(),
            degree: degree.into(),
        }
    }

    /// Class of the structure sheaf, the multiplicative identity.
    pub fn one() -> Self {
        K0Class::new(1, 0)
    }

    /// Class of a skyscraper sheaf at a closed point.
    pub fn point() -> Self {
        K0Class::new(0, 1)
    }

    pub fn zero() -> Self {
        K0Class::default()
    }

    pub fn is_zero(&self) -> bool {
        self.rank.is_zero() && self.degree.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.rank.is_one() && self.degree.is_zero()
    }

    pub fn is_unit(&self) -> bool {
        self.rank.abs().is_one()
    }

    /// Inverse of a unit: `(r, d)^{-1} = (r, -d)` for `r = +-1`.
    pub fn inverse(&self) -> Result<K0Class> {
        if !self.is_unit() {
            return Err(Error::NotAUnit(self.clone()));
        }
        Ok(K0Class {
            rank: self.rank.clone(),
            degree: -&self.degree,
        })
    }

    /// Dual of a locally free class: same rank, negated degree.
    pub fn dual(&self) -> K0Class {
        K0Class {
            rank: self.rank.clone(),
            degree: -&self.degree,
        }
    }

    /// Multiplication by an integer.
    pub fn scale(&self, k: &BigInt) -> K0Class {
        K0Class {
            rank: &self.rank * k,
            degree: &self.degree * k,
        }
    }
}

impl fmt::Display for K0Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.rank, self.degree)
    }
}

impl<'a> Add<&'a K0Class> for &'a K0Class {
    type Output = K0Class;
    fn add(self, rhs: &K0Class) -> K0Class {
        K0Class {
            rank: &self.rank + &rhs.rank,
            degree: &self.degree + &rhs.degree,
        }
    }
}

impl<'a> Sub<&'a K0Class> for &'a K0Class {
    type Output = K0Class;
    fn sub(self, rhs: &K0Class) -> K0Class {
        K0Class {
            rank: &self.rank - &rhs.rank,
            degree: &self.degree - &rhs.degree,
        }
    }
}

impl<'a> Mul<&'a K0Class> for &'a K0Class {
    type Output = K0Class;
    fn mul(self, rhs: &K0Class) -> K0Class {
        K0Class {
            rank: &self.rank * &rhs.rank,
            degree: &self.rank * &rhs.degree + &self.degree * &rhs.rank,
        }
    }
}

impl Neg for &K0Class {
    type Output = K0Class;
    fn neg(self) -> K0Class {
        K0Class {
            rank: -&self.rank,
            degree: -&self.degree,
        }
    }
}

impl Neg for K0Class {
    type Output = K0Class;
    fn neg(self) -> K0Class {
        -&self
    }
}

macro_rules! forward_owned_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<K0Class> for K0Class {
            type Output = K0Class;
            fn $method(self, rhs: K0Class) -> K0Class {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a K0Class> for K0Class {
            type Output = K0Class;
            fn $method(self, rhs: &K0Class) -> K0Class {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl AddAssign<&K0Class> for K0Class {
    fn add_assign(&mut self, rhs: &K0Class) {
        self.rank += &rhs.rank;
        self.degree += &rhs.degree;
    }
}

impl SubAssign<&K0Class> for K0Class {
    fn sub_assign(&mut self, rhs: &K0Class) {
        self.rank -= &rhs.rank;
        self.degree -= &rhs.degree;
    }
}

impl std::iter::Sum for K0Class {
    fn sum<I: Iterator<Item = K0Class>>(iter: I) -> K0Class {
        iter.fold(K0Class::zero(), |mut acc, c| {
            acc += &c;
            acc
        })
    }
}

pub fn k0_add(a: &K0Class, b: &K0Class) -> K0Class {
    a + b
}

pub fn k0_mul(a: &K0Class, b: &K0Class) -> K0Class {
    a * b
}

pub fn k0_dual(a: &K0Class) -> K0Class {
    a.dual()
}

pub fn k0_is_unit(a: &K0Class) -> bool {
    a.is_unit()
}

pub fn k0_inverse(a: &K0Class) -> Result<K0Class> {
    a.inverse()
}

/// Euler form `sum (-1)^i dim Ext^i(a, b)` on the base, by Riemann-Roch.
pub fn euler_form_base(a: &K0Class, b: &K0Class, base: BaseSpace) -> BigInt {
    let chi = base.euler_characteristic();
    chi * &a.rank * &b.rank + &a.rank * &b.degree - &a.degree * &b.rank
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(r: i64, d: i64) -> K0Class {
        K0Class::new(r, d)
    }

    #[test]
    fn addition() {
        assert_eq!(c(1, 0) + c(0, 1), c(1, 1));
        assert_eq!(c(2, -3) + c(-2, 3), c(0, 0));
        assert_eq!(c(0, 0) + c(5, 7), c(5, 7));
    }

    // Tensor product of line bundles O(a) (x) O(b) = O(a + b).
    #[test]
    fn product_of_line_bundles() {
        for a in -2..=2 {
            for b in -2..=2 {
                assert_eq!(c(1, a) * c(1, b), c(1, a + b));
            }
        }
    }

    #[test]
    fn product_identity_and_torsion() {
        assert_eq!(c(1, 0) * c(7, -4), c(7, -4));
        // skyscrapers at distinct points have no Tor
        assert_eq!(c(0, 1) * c(0, 1), c(0, 0));
    }

    // E = O(a) + O(b) has dual O(-a) + O(-b).
    #[test]
    fn dual_of_split_bundle() {
        let e = c(1, 2) + c(1, 3);
        assert_eq!(e.dual(), c(1, -2) + c(1, -3));
        assert_eq!(c(2, 5).dual(), c(2, -5));
        assert_eq!(c(1, 0).dual(), c(1, 0));
        assert_eq!(c(3, -8).dual().dual(), c(3, -8));
    }

    #[test]
    fn inverses() {
        assert_eq!(c(1, -3).inverse().unwrap(), c(1, 3));
        assert_eq!(c(1, -3) * c(1, 3), c(1, 0));
        assert_eq!(c(-1, 2).inverse().unwrap(), c(-1, -2));
        assert_eq!(c(-1, 2) * c(-1, -2), c(1, 0));
        assert_eq!(c(2, 0).inverse(), Err(Error::NotAUnit(c(2, 0))));
        assert!(!c(0, 1).is_unit());
    }

    #[test]
    fn curve_euler_table() {
        for g in 0..=10u64 {
            let x = BaseSpace::curve(g);
            assert_eq!(x.euler_form(&c(1, 0), &c(1, 0)), BigInt::from(1 - g as i64));
            assert_eq!(x.euler_form(&c(1, 0), &c(0, 1)), BigInt::from(1));
            assert_eq!(x.euler_form(&c(0, 1), &c(1, 0)), BigInt::from(-1));
            assert_eq!(x.euler_form(&c(0, 1), &c(0, 1)), BigInt::from(0));
        }
    }

    #[test]
    fn point_euler_form_is_rank_product() {
        let pt = BaseSpace::Point;
        assert_eq!(pt.euler_form(&c(3, 0), &c(-2, 0)), BigInt::from(-6));
        assert!(pt.check(&c(1, 1)).is_err());
        assert!(pt.check(&c(4, 0)).is_ok());
    }

    #[test]
    fn big_values_do_not_overflow() {
        let big = K0Class::new(BigInt::from(i64::MAX), BigInt::from(i64::MIN));
        let sq = &big * &big;
        assert_eq!(sq.rank, BigInt::from(i64::MAX) * BigInt::from(i64::MAX));
    }
}
