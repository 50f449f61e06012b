//! Independent oracles shared by the integration and acceptance tests.
#![allow(dead_code)]

use kzero::K0Class;
use num_bigint::BigInt;

/// 2x2 matrix over the numerical K0 ring, acting on coordinates in the
/// basis {1, T}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mat2(pub [[K0Class; 2]; 2]);

impl Mat2 {
    pub fn identity() -> Self {
        Mat2([
            [K0Class::one(), K0Class::zero()],
            [K0Class::zero(), K0Class::one()],
        ])
    }

    pub fn mul(&self, o: &Mat2) -> Mat2 {
        let a = &self.0;
        let b = &o.0;
        let entry = |i: usize, j: usize| &(&a[i][0] * &b[0][j]) + &(&a[i][1] * &b[1][j]);
        Mat2([[entry(0, 0), entry(0, 1)], [entry(1, 0), entry(1, 1)]])
    }

    pub fn pow(&self, k: u32) -> Mat2 {
        (0..k).fold(Mat2::identity(), |acc, _| acc.mul(self))
    }

    pub fn first_column(&self) -> [K0Class; 2] {
        [self.0[0][0].clone(), self.0[1][0].clone()]
    }
}

/// Multiplication by T and by T^-1 on K0(X) + K0(X) T, read off directly
/// from 1 - E T + Q T^2 = 0:
///   T^2 = Q^-1 E T - Q^-1,   T^-1 = E - Q T.
pub fn companion(e: &K0Class, q: &K0Class) -> (Mat2, Mat2) {
    let qi = q.inverse().unwrap();
    let t = Mat2([[K0Class::zero(), -&qi], [K0Class::one(), &qi * e]]);
    let t_inv = Mat2([[e.clone(), K0Class::one()], [-q, K0Class::zero()]]);
    (t, t_inv)
}

/// Coordinates of T^k in the basis {1, T}.
pub fn companion_power(e: &K0Class, q: &K0Class, k: i64) -> [K0Class; 2] {
    let (t, t_inv) = companion(e, q);
    let m = if k >= 0 {
        t.pow(k as u32)
    } else {
        t_inv.pow((-k) as u32)
    };
    m.first_column()
}

/// All x in [-bound, bound]^n with m x = 0 and m^T x = 0, by enumeration.
pub fn brute_force_radical(m: &[Vec<BigInt>], bound: i64) -> Vec<Vec<i64>> {
    let n = m.len();
    let mut out = Vec::new();
    let mut x = vec![-bound; n];
    loop {
        let xb: Vec<BigInt> = x.iter().map(|&v| BigInt::from(v)).collect();
        let right =
            (0..n).all(|i| (0..n).map(|j| &m[i][j] * &xb[j]).sum::<BigInt>() == BigInt::from(0));
        let left =
            (0..n).all(|j| (0..n).map(|i| &xb[i] * &m[i][j]).sum::<BigInt>() == BigInt::from(0));
        if right && left {
            out.push(x.clone());
        }
        let mut i = 0;
        loop {
            if i == n {
                return out;
            }
            if x[i] < bound {
                x[i] += 1;
                break;
            }
            x[i] = -bound;
            i += 1;
        }
    }
}
