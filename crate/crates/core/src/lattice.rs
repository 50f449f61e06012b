//! Dense integer matrices, Smith normal form and integer kernels.

use std::fmt;
use std::ops::{Index, IndexMut, Mul};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row.iter().cloned().map(Into::into));
        }
        IntMatrix {
            rows: r,
            cols: c,
            data,
        }
    }

    /// Matrix whose columns are the given vectors, each of length `n`.
    pub fn from_columns(n: usize, cols: &[Vec<BigInt>]) -> Self {
        let mut m = Self::zeros(n, cols.len());
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), n);
            for (i, x) in col.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    /// Rows of `self` followed by rows of `other`.
    pub fn stack(&self, other: &IntMatrix) -> Self {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        IntMatrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// `x^T self y`.
    pub fn bilinear(&self, x: &[BigInt], y: &[BigInt]) -> BigInt {
        assert_eq!(x.len(), self.rows);
        x.iter().zip(self.mul_vec(y)).map(|(a, b)| a * b).sum()
    }

    pub fn neg(&self) -> Self {
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| -x).collect(),
        }
    }

    /// Fraction-free (Bareiss) determinant.
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[(k, k)].is_zero() {
                match (k + 1..n).find(|&i| !a[(i, k)].is_zero()) {
                    Some(i) => {
                        a.swap_rows(i, k);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[(i, j)] * &a[(k, k)] - &a[(i, k)] * &a[(k, j)];
                    a[(i, j)] = v / &prev;
                }
            }
            prev = a[(k, k)].clone();
        }
        sign * &a[(n - 1, n - 1)]
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] += k * row[src]
    fn add_row_multiple(&mut self, dst: usize, src: usize, k: &BigInt) {
        for j in 0..self.cols {
            let v = &self[(src, j)] * k;
            self[(dst, j)] += v;
        }
    }

    /// col[dst] += k * col[src]
    fn add_col_multiple(&mut self, dst: usize, src: usize, k: &BigInt) {
        for i in 0..self.rows {
            let v = &self[(i, src)] * k;
            self[(i, dst)] += v;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -&self[(i, j)];
            self[(i, j)] = v;
        }
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

impl Mul<&IntMatrix> for &IntMatrix {
    type Output = IntMatrix;
    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut out = IntMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    out[(i, j)] += a * &rhs[(k, j)];
                }
            }
        }
        out
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// `left * input * right = diag`, with `left` and `right` unimodular and
/// `diag[i][i]` dividing `diag[i+1][i+1]`.
#[derive(Debug, Clone)]
pub struct SmithForm {
    pub diag: IntMatrix,
    pub left: IntMatrix,
    pub right: IntMatrix,
    pub rank: usize,
}

impl SmithForm {
    /// Nonzero diagonal entries.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        (0..self.rank).map(|i| self.diag[(i, i)].clone()).collect()
    }
}

pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let (rows, cols) = (m.rows, m.cols);
    let mut a = m.clone();
    let mut left = IntMatrix::identity(rows);
    let mut right = IntMatrix::identity(cols);
    let mut t = 0;

    while t < rows.min(cols) {
        // smallest nonzero entry of the trailing block
        let pivot = (t..rows)
            .flat_map(|i| (t..cols).map(move |j| (i, j)))
            .filter(|&(i, j)| !a[(i, j)].is_zero())
            .min_by(|&p, &q| a[p].abs().cmp(&a[q].abs()));
        let Some((pi, pj)) = pivot else { break };
        a.swap_rows(t, pi);
        left.swap_rows(t, pi);
        a.swap_cols(t, pj);
        right.swap_cols(t, pj);

        loop {
            let mut dirty = false;
            for i in t + 1..rows {
                if a[(i, t)].is_zero() {
                    continue;
                }
                let q = a[(i, t)].div_floor(&a[(t, t)]);
                let nq = -q;
                a.add_row_multiple(i, t, &nq);
                left.add_row_multiple(i, t, &nq);
                if !a[(i, t)].is_zero() {
                    dirty = true;
                }
            }
            for j in t + 1..cols {
                if a[(t, j)].is_zero() {
                    continue;
                }
                let q = a[(t, j)].div_floor(&a[(t, t)]);
                let nq = -q;
                a.add_col_multiple(j, t, &nq);
                right.add_col_multiple(j, t, &nq);
                if !a[(t, j)].is_zero() {
                    dirty = true;
                }
            }
            if dirty {
                // move a nonzero remainder of smaller size into the pivot
                let col_best = (t + 1..rows)
                    .filter(|&i| !a[(i, t)].is_zero())
                    .min_by(|&x, &y| a[(x, t)].abs().cmp(&a[(y, t)].abs()));
                if let Some(i) = col_best {
                    a.swap_rows(t, i);
                    left.swap_rows(t, i);
                    continue;
                }
                let row_best = (t + 1..cols)
                    .filter(|&j| !a[(t, j)].is_zero())
                    .min_by(|&x, &y| a[(t, x)].abs().cmp(&a[(t, y)].abs()));
                if let Some(j) = row_best {
                    a.swap_cols(t, j);
                    right.swap_cols(t, j);
                    continue;
                }
            }
            // row and column are clear; enforce divisibility of the rest
            let offender = (t + 1..rows)
                .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                .find(|&p| !a[p].is_multiple_of(&a[(t, t)]));
            match offender {
                Some((i, _)) => {
                    let one = BigInt::one();
                    a.add_row_multiple(t, i, &one);
                    left.add_row_multiple(t, i, &one);
                }
                None => break,
            }
        }
        if a[(t, t)].is_negative() {
            a.negate_row(t);
            left.negate_row(t);
        }
        t += 1;
    }

    SmithForm {
        diag: a,
        left,
        right,
        rank: t,
    }
}

/// Basis of `{ x in Z^n : m x = 0 }`. The returned lattice is saturated.
pub fn integer_kernel(m: &IntMatrix) -> Vec<Vec<BigInt>> {
    let snf = smith_normal_form(m);
    (snf.rank..m.cols).map(|j| snf.right.column(j)).collect()
}

/// Extends a basis of a saturated sublattice of `Z^n` to a basis of `Z^n`
/// and returns only the added vectors. Standard basis vectors are tried
/// first so that the complement is as close to the ambient basis as possible.
pub fn complement_basis(n: usize, sub: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let unit = |i: usize| -> Vec<BigInt> {
        (0..n)
            .map(|k| {
                if k == i {
                    BigInt::one()
                } else {
                    BigInt::zero()
                }
            })
            .collect()
    };

    let mut chosen: Vec<Vec<BigInt>> = Vec::new();
    for i in 0..n {
        let mut candidate: Vec<Vec<BigInt>> = sub.to_vec();
        candidate.extend(chosen.iter().cloned());
        candidate.push(unit(i));
        if is_saturated_basis(n, &candidate) {
            chosen.push(unit(i));
        }
    }
    if sub.len() + chosen.len() == n {
        return chosen;
    }

    // sub = left^-1 [I; 0] right^-1, so the trailing columns of left^-1 complete it
    let snf = smith_normal_form(&IntMatrix::from_columns(n, sub));
    let inv = unimodular_inverse(&snf.left);
    (sub.len()..n).map(|j| inv.column(j)).collect()
}

/// True iff the vectors are independent and span a saturated sublattice.
fn is_saturated_basis(n: usize, vecs: &[Vec<BigInt>]) -> bool {
    let snf = smith_normal_form(&IntMatrix::from_columns(n, vecs));
    snf.rank == vecs.len() && snf.invariant_factors().iter().all(One::is_one)
}

/// Inverse of a unimodular matrix, computed through its Smith form.
pub fn unimodular_inverse(u: &IntMatrix) -> IntMatrix {
    // L U R = I  =>  U^-1 = R L
    let snf = smith_normal_form(u);
    assert!(
        snf.rank == u.rows && snf.invariant_factors().iter().all(One::is_one),
        "matrix is not unimodular"
    );
    &snf.right * &snf.left
}
