//! Exact dense linear algebra over fields: fraction-free determinants,
//! linear solves and characteristic polynomials.

use std::fmt;
use std::ops::{Index, IndexMut};

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::cyclotomic::RationalPoly;

/// Minimal exact field interface used by the elimination routines.
pub trait Field: Clone + PartialEq {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero_elem(&self) -> bool;
    fn add_ref(&self, other: &Self) -> Self;
    fn sub_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    /// Exact division; callers guarantee `other` is nonzero.
    fn div_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self {
        self.zero_like().sub_ref(self)
    }
}

impl Field for BigRational {
    fn zero_like(&self) -> Self {
        BigRational::zero()
    }
    fn one_like(&self) -> Self {
        BigRational::one()
    }
    fn is_zero_elem(&self) -> bool {
        <BigRational as Zero>::is_zero(self)
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn div_ref(&self, other: &Self) -> Self {
        self / other
    }
}

/// Row-major dense matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Clone> Matrix<T> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix rows");
        Self {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }
}

impl<T: Field> Matrix<T> {
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "matrix dimension mismatch");
        let zero = self.data[0].zero_like();
        Self::from_fn(self.rows, other.cols, |i, j| {
            (0..self.cols).fold(zero.clone(), |acc, k| {
                let a = &self[(i, k)];
                if a.is_zero_elem() {
                    acc
                } else {
                    acc.add_ref(&a.mul_ref(&other[(k, j)]))
                }
            })
        })
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(self.cols, v.len(), "matrix-vector dimension mismatch");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(v[0].zero_like(), |acc, (a, b)| acc.add_ref(&a.mul_ref(b)))
            })
            .collect()
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.cols + j]
    }
}

impl<T: fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.data[i * self.cols + j])?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

/// Determinant by Bareiss fraction-free elimination.
///
/// Every division performed is exact in the underlying integral domain, so
/// over ℚ(ζ) the intermediate entries stay as small as the minors they are.
pub fn determinant<T: Field>(m: &Matrix<T>) -> T {
    assert!(m.is_square(), "determinant of a non-square matrix");
    let n = m.rows();
    if n == 0 {
        panic!("determinant of an empty matrix has no scalar to anchor on");
    }
    let mut a = m.clone();
    let mut sign_flip = false;
    let mut prev = a[(0, 0)].one_like();
    for k in 0..n - 1 {
        if a[(k, k)].is_zero_elem() {
            let Some(p) = (k + 1..n).find(|&i| !a[(i, k)].is_zero_elem()) else {
                return a[(0, 0)].zero_like();
            };
            a.swap_rows(k, p);
            sign_flip = !sign_flip;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = a[(k, k)]
                    .mul_ref(&a[(i, j)])
                    .sub_ref(&a[(i, k)].mul_ref(&a[(k, j)]))
                    .div_ref(&prev);
                a[(i, j)] = v;
            }
        }
        prev = a[(k, k)].clone();
    }
    let det = a[(n - 1, n - 1)].clone();
    if sign_flip {
        det.neg_ref()
    } else {
        det
    }
}

/// Solves `m x = rhs` by Gauss-Jordan elimination; `None` if `m` is singular.
pub fn solve<T: Field>(m: &Matrix<T>, rhs: &[T]) -> Option<Vec<T>> {
    assert!(m.is_square(), "solve needs a square matrix");
    let n = m.rows();
    assert_eq!(rhs.len(), n, "right-hand side length mismatch");
    let mut a = Matrix::from_fn(n, n + 1, |i, j| if j < n { m[(i, j)].clone() } else { rhs[i].clone() });
    for k in 0..n {
        let p = (k..n).find(|&i| !a[(i, k)].is_zero_elem())?;
        a.swap_rows(k, p);
        let pivot = a[(k, k)].clone();
        for j in k..=n {
            a[(k, j)] = a[(k, j)].div_ref(&pivot);
        }
        for i in 0..n {
            if i == k || a[(i, k)].is_zero_elem() {
                continue;
            }
            let f = a[(i, k)].clone();
            for j in k..=n {
                let v = a[(i, j)].sub_ref(&f.mul_ref(&a[(k, j)]));
                a[(i, j)] = v;
            }
        }
    }
    Some((0..n).map(|i| a[(i, n)].clone()).collect())
}

/// Characteristic polynomial `det(x I - m)` of a rational matrix.
///
/// Reduces to upper Hessenberg form by elementary similarities, then runs
/// the standard three-term recurrence on the leading principal blocks.
pub fn char_poly(m: &Matrix<BigRational>) -> RationalPoly {
    assert!(m.is_square(), "characteristic polynomial of a non-square matrix");
    let n = m.rows();
    let mut h = m.clone();
    for k in 0..n.saturating_sub(2) {
        let Some(p) = (k + 1..n).find(|&i| !Zero::is_zero(&h[(i, k)])) else {
            continue;
        };
        if p != k + 1 {
            h.swap_rows(p, k + 1);
            h.swap_cols(p, k + 1);
        }
        let pivot = h[(k + 1, k)].clone();
        for i in k + 2..n {
            if Zero::is_zero(&h[(i, k)]) {
                continue;
            }
            let u = &h[(i, k)] / &pivot;
            for j in 0..n {
                let v = &h[(i, j)] - &u * &h[(k + 1, j)];
                h[(i, j)] = v;
            }
            for r in 0..n {
                let v = &h[(r, k + 1)] + &u * &h[(r, i)];
                h[(r, k + 1)] = v;
            }
        }
    }

    // polys[m] = characteristic polynomial of the leading m×m block.
    let mut polys: Vec<RationalPoly> = vec![RationalPoly::one()];
    for mi in 0..n {
        let lin = RationalPoly::new(vec![-h[(mi, mi)].clone(), BigRational::one()]);
        let mut p = lin.mul(&polys[mi]);
        let mut prod = BigRational::one();
        for i in (0..mi).rev() {
            prod *= &h[(i + 1, i)];
            if Zero::is_zero(&prod) {
                break;
            }
            let coef = &h[(i, mi)] * &prod;
            if !Zero::is_zero(&coef) {
                p = p.sub(&polys[i].scale(&coef));
            }
        }
        polys.push(p);
    }
    polys.pop().expect("at least the constant polynomial")
}
