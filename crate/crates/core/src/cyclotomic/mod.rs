//! Exact arithmetic in cyclotomic fields ℚ(ζ_M).
//!
//! An element is stored in the power basis `1, ζ, …, ζ^{φ(M)-1}` of
//! ℚ(ζ_M), fully reduced modulo the cyclotomic polynomial Φ_M. Binary
//! operations on elements of different conductors first lift both operands
//! to the field of conductor `lcm(M₁, M₂)`; the conductor is never shrunk.

mod poly;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::linalg::{self, Field, Matrix};

pub(crate) use poly::rational_to_f64;
pub use poly::{cyclotomic_poly, lcm, totient, RationalPoly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CycloError {
    #[error("division by zero in cyclotomic field")]
    DivisionByZero,
    #[error("conductor must be positive")]
    ZeroConductor,
    #[error("conductor {conductor} expects {expected} coefficients, got {got}")]
    CoefficientCount {
        conductor: u64,
        expected: usize,
        got: usize,
    },
    #[error("invalid rational literal {0:?}")]
    BadRational(String),
    #[error("cannot lift conductor {from} into conductor {to}")]
    BadLift { from: u64, to: u64 },
}

/// Element of the cyclotomic field ℚ(ζ_M).
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(try_from = "CycloRepr", into = "CycloRepr")]
pub struct CycloNum {
    conductor: u64,
    coeffs: Vec<BigRational>,
}

/// A root of unity `ζ_base^exponent` of exact multiplicative order `order`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RootOfUnity {
    pub base: u64,
    pub exponent: u64,
    pub order: u64,
}

impl RootOfUnity {
    /// The angle `exponent / base` as a reduced fraction of a full turn,
    /// i.e. the pair `(k, m)` with the root equal to `e^{2πik/m}`, `0 ≤ k < m`.
    pub fn turn_fraction(&self) -> (u64, u64) {
        let g = self.exponent.gcd(&self.base);
        (self.exponent / g, self.base / g)
    }
}

impl fmt::Display for RootOfUnity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (k, m) = self.turn_fraction();
        write!(f, "ζ{m}^{k}")
    }
}

fn reduce(conductor: u64, mut v: Vec<BigRational>) -> Vec<BigRational> {
    let m = conductor as usize;
    if v.len() > m {
        let extra: Vec<_> = v.drain(m..).collect();
        for (i, c) in extra.into_iter().enumerate() {
            v[(m + i) % m] += c;
        }
    }
    let phi = totient(conductor) as usize;
    let cyc = cyclotomic_poly(conductor);
    for top in (phi..v.len()).rev() {
        let c = std::mem::replace(&mut v[top], BigRational::zero());
        if c.is_zero() {
            continue;
        }
        for (j, pj) in cyc.iter().take(phi).enumerate() {
            if !pj.is_zero() {
                v[top - phi + j] -= &c * BigRational::from_integer(pj.clone());
            }
        }
    }
    v.resize(phi, BigRational::zero());
    v
}

impl CycloNum {
    /// Builds an element from its power-basis coordinates; the vector must
    /// have exactly φ(M) entries.
    pub fn new(conductor: u64, coeffs: Vec<BigRational>) -> Result<Self, CycloError> {
        if conductor == 0 {
            return Err(CycloError::ZeroConductor);
        }
        let expected = totient(conductor) as usize;
        if coeffs.len() != expected {
            return Err(CycloError::CoefficientCount {
                conductor,
                expected,
                got: coeffs.len(),
            });
        }
        Ok(Self { conductor, coeffs })
    }

    /// Σ qⱼ ζ_M^{eⱼ} for arbitrary integer exponents.
    pub fn from_terms(conductor: u64, terms: &[(i64, BigRational)]) -> Self {
        assert!(conductor > 0, "conductor must be positive");
        let m = conductor as i64;
        let mut v = vec![BigRational::zero(); conductor as usize];
        for (e, q) in terms {
            v[e.rem_euclid(m) as usize] += q;
        }
        Self {
            conductor,
            coeffs: reduce(conductor, v),
        }
    }

    /// Integer combination Σ cⱼ ζ_M^{eⱼ}.
    pub fn from_int_terms(conductor: u64, terms: &[(i64, i64)]) -> Self {
        let terms: Vec<_> = terms
            .iter()
            .map(|&(e, c)| (e, BigRational::from_integer(c.into())))
            .collect();
        Self::from_terms(conductor, &terms)
    }

    pub fn from_rational(q: BigRational) -> Self {
        Self {
            conductor: 1,
            coeffs: vec![q],
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(n.into()))
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Self::from_rational(BigRational::new(num.into(), den.into()))
    }

    pub fn zero(conductor: u64) -> Self {
        Self::from_terms(conductor, &[])
    }

    pub fn one(conductor: u64) -> Self {
        Self::from_terms(conductor, &[(0, BigRational::one())])
    }

    /// ζ_M^k.
    pub fn zeta(conductor: u64, k: i64) -> Self {
        Self::from_terms(conductor, &[(k, BigRational::one())])
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Degree φ(M) of the ambient field over ℚ.
    pub fn degree(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// The rational value, if the element lies in ℚ.
    pub fn as_rational(&self) -> Option<&BigRational> {
        self.coeffs[1..].iter().all(Zero::is_zero).then(|| &self.coeffs[0])
    }

    /// Re-expresses the element in ℚ(ζ_target); `target` must be a multiple
    /// of the conductor.
    pub fn lift(&self, target: u64) -> Result<Self, CycloError> {
        if target == 0 || !target.is_multiple_of(self.conductor) {
            return Err(CycloError::BadLift {
                from: self.conductor,
                to: target,
            });
        }
        if target == self.conductor {
            return Ok(self.clone());
        }
        let step = target / self.conductor;
        let mut v = vec![BigRational::zero(); target as usize];
        for (j, c) in self.coeffs.iter().enumerate() {
            v[j * step as usize] = c.clone();
        }
        Ok(Self {
            conductor: target,
            coeffs: reduce(target, v),
        })
    }

    fn lifted_pair(&self, other: &Self) -> (Self, Self) {
        let l = lcm(self.conductor, other.conductor);
        (
            self.lift(l).expect("lcm is a multiple"),
            other.lift(l).expect("lcm is a multiple"),
        )
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        Self {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    pub fn inverse(&self) -> Result<Self, CycloError> {
        if self.is_zero() {
            return Err(CycloError::DivisionByZero);
        }
        let m = self.mult_matrix();
        let mut e0 = vec![BigRational::zero(); self.degree()];
        e0[0] = BigRational::one();
        let x = linalg::solve(&m, &e0).ok_or(CycloError::DivisionByZero)?;
        Ok(Self {
            conductor: self.conductor,
            coeffs: x,
        })
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, CycloError> {
        Ok(self * &other.inverse()?)
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.conductor);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Integer power, negative exponents through the inverse.
    pub fn powi(&self, e: i64) -> Result<Self, CycloError> {
        if e >= 0 {
            Ok(self.pow(e as u64))
        } else {
            Ok(self.inverse()?.pow(e.unsigned_abs()))
        }
    }

    /// Matrix of multiplication by `self` on power-basis coordinate vectors
    /// (column `j` holds the coordinates of `self · ζ^j`).
    pub fn mult_matrix(&self) -> Matrix<BigRational> {
        let n = self.degree();
        let mut cols = Vec::with_capacity(n);
        let mut cur = self.clone();
        for j in 0..n {
            if j > 0 {
                cur = cur.times_zeta();
            }
            cols.push(cur.coeffs.clone());
        }
        Matrix::from_fn(n, n, |i, j| cols[j][i].clone())
    }

    fn times_zeta(&self) -> Self {
        let mut v = Vec::with_capacity(self.degree() + 1);
        v.push(BigRational::zero());
        v.extend(self.coeffs.iter().cloned());
        Self {
            conductor: self.conductor,
            coeffs: reduce(self.conductor, v),
        }
    }

    /// Characteristic polynomial of the multiplication operator; monic of
    /// degree φ(M).
    pub fn char_poly(&self) -> RationalPoly {
        linalg::char_poly(&self.mult_matrix())
    }

    /// Whether the element is an algebraic integer.
    ///
    /// The ring of integers of ℚ(ζ_M) is ℤ[ζ_M] and the power basis is an
    /// integral basis, so this holds iff every coordinate is an integer.
    /// [`CycloNum::char_poly_is_integral`] decides the same property from
    /// the characteristic polynomial and is much slower for large φ(M).
    pub fn is_algebraic_integer(&self) -> bool {
        self.coeffs.iter().all(BigRational::is_integer)
    }

    /// Integrality via the characteristic polynomial of the multiplication
    /// map: it is a power of the minimal polynomial, and by Gauss's lemma a
    /// power of a monic rational polynomial is integral iff the polynomial
    /// itself is.
    pub fn char_poly_is_integral(&self) -> bool {
        if let Some(q) = self.as_rational() {
            return q.is_integer();
        }
        self.char_poly().has_integer_coeffs()
    }

    /// Detects whether the element is a root of unity. Roots of unity in
    /// ℚ(ζ_M) are exactly ±ζ_M^k, i.e. the powers of ζ_L with `L = lcm(2, M)`;
    /// all `L` of them are compared exactly.
    pub fn as_root_of_unity(&self) -> Option<RootOfUnity> {
        let base = lcm(2, self.conductor);
        let target = self.lift(base).expect("base is a multiple of the conductor");
        let mut cur = Self::one(base);
        for e in 0..base {
            if cur.coeffs == target.coeffs {
                return Some(RootOfUnity {
                    base,
                    exponent: e,
                    order: base / e.gcd(&base),
                });
            }
            cur = cur.times_zeta();
        }
        None
    }

    /// Image under the Galois automorphism ζ_M ↦ ζ_M^a, `gcd(a, M) = 1`.
    pub fn galois(&self, a: i64) -> Self {
        let m = self.conductor as i64;
        assert_eq!(a.gcd(&m), 1, "Galois exponent must be a unit mod the conductor");
        let terms: Vec<_> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(j, c)| (j as i64 * a, c.clone()))
            .collect();
        Self::from_terms(self.conductor, &terms)
    }

    /// Complex conjugate (the Galois automorphism ζ ↦ ζ⁻¹).
    pub fn conj(&self) -> Self {
        self.galois(-1)
    }

    /// Numerical value under the embedding ζ_M ↦ e^{2πi/M}.
    pub fn embed(&self) -> Complex64 {
        self.embed_at(1)
    }

    /// Numerical value under ζ_M ↦ e^{2πia/M}.
    pub fn embed_at(&self, a: i64) -> Complex64 {
        let m = self.conductor as f64;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(j, c)| {
                let angle = 2.0 * std::f64::consts::PI * ((a * j as i64) as f64) / m;
                Complex64::from_polar(rational_to_f64(c), angle)
            })
            .sum()
    }

    /// Numerical values under every complex embedding, indexed by the units
    /// `a` mod M in increasing order.
    pub fn embeddings(&self) -> Vec<(i64, Complex64)> {
        let m = self.conductor as i64;
        (1..=m)
            .filter(|a| a.gcd(&m) == 1)
            .map(|a| (a % m, self.embed_at(a)))
            .collect()
    }
}

impl PartialEq for CycloNum {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor == other.conductor {
            return self.coeffs == other.coeffs;
        }
        let (a, b) = self.lifted_pair(other);
        a.coeffs == b.coeffs
    }
}

impl Eq for CycloNum {}

impl<'a> Add<&'a CycloNum> for &'a CycloNum {
    type Output = CycloNum;
    fn add(self, rhs: &'a CycloNum) -> CycloNum {
        let (a, b) = self.lifted_pair(rhs);
        CycloNum {
            conductor: a.conductor,
            coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect(),
        }
    }
}

impl<'a> Sub<&'a CycloNum> for &'a CycloNum {
    type Output = CycloNum;
    fn sub(self, rhs: &'a CycloNum) -> CycloNum {
        let (a, b) = self.lifted_pair(rhs);
        CycloNum {
            conductor: a.conductor,
            coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x - y).collect(),
        }
    }
}

impl<'a> Mul<&'a CycloNum> for &'a CycloNum {
    type Output = CycloNum;
    fn mul(self, rhs: &'a CycloNum) -> CycloNum {
        let (a, b) = self.lifted_pair(rhs);
        if a.is_zero() || b.is_zero() {
            return CycloNum::zero(a.conductor);
        }
        let n = a.degree();
        let mut v = vec![BigRational::zero(); 2 * n - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    v[i + j] += x * y;
                }
            }
        }
        CycloNum {
            conductor: a.conductor,
            coeffs: reduce(a.conductor, v),
        }
    }
}

impl Neg for &CycloNum {
    type Output = CycloNum;
    fn neg(self) -> CycloNum {
        CycloNum {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<CycloNum> for CycloNum {
            type Output = CycloNum;
            fn $m(self, rhs: CycloNum) -> CycloNum {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a CycloNum> for CycloNum {
            type Output = CycloNum;
            fn $m(self, rhs: &'a CycloNum) -> CycloNum {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for CycloNum {
    type Output = CycloNum;
    fn neg(self) -> CycloNum {
        -&self
    }
}

impl std::iter::Sum for CycloNum {
    fn sum<I: Iterator<Item = CycloNum>>(iter: I) -> CycloNum {
        iter.fold(CycloNum::from_int(0), |acc, x| acc + x)
    }
}

impl Field for CycloNum {
    fn zero_like(&self) -> Self {
        CycloNum::zero(self.conductor)
    }
    fn one_like(&self) -> Self {
        CycloNum::one(self.conductor)
    }
    fn is_zero_elem(&self) -> bool {
        CycloNum::is_zero(self)
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
        self.checked_div(other).expect("division by a nonzero pivot")
    }
}

impl fmt::Display for CycloNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            match (j, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (_, true) => write!(f, "ζ{}^{j}", self.conductor)?,
                (_, false) => write!(f, "{mag}·ζ{}^{j}", self.conductor)?,
            }
        }
        Ok(())
    }
}

/// On-disk form: `{"conductor": M, "coeffs": ["p/q", ...]}`.
#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CycloRepr {
    conductor: u64,
    coeffs: Vec<String>,
}

pub fn parse_rational(s: &str) -> Result<BigRational, CycloError> {
    let bad = || CycloError::BadRational(s.to_string());
    if s.trim() != s || s.is_empty() {
        return Err(bad());
    }
    let q = BigRational::from_str(s).map_err(|_| bad())?;
    Ok(q)
}

impl TryFrom<CycloRepr> for CycloNum {
    type Error = CycloError;
    fn try_from(r: CycloRepr) -> Result<Self, CycloError> {
        let coeffs = r
            .coeffs
            .iter()
            .map(|s| parse_rational(s))
            .collect::<Result<Vec<_>, _>>()?;
        CycloNum::new(r.conductor, coeffs)
    }
}

impl From<CycloNum> for CycloRepr {
    fn from(c: CycloNum) -> Self {
        CycloRepr {
            conductor: c.conductor,
            coeffs: c.coeffs.iter().map(ToString::to_string).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn close(a: Complex64, b: Complex64, tol: f64) -> bool {
        (a - b).norm() < tol
    }

    #[test]
    fn add_examples() {
        let z5 = CycloNum::zeta(5, 1);
        assert_eq!(&z5 + &CycloNum::from_int(0), z5);
        let z3 = CycloNum::zeta(3, 1);
        let s = &z3 + &CycloNum::zeta(3, 2);
        assert_eq!(s, CycloNum::from_int(-1));
        assert!(close(s.embed(), Complex64::new(-1.0, 0.0), 1e-12));
        assert_eq!(
            CycloNum::from_ratio(1, 2) + CycloNum::from_ratio(1, 2),
            CycloNum::from_int(1)
        );
    }

    #[test]
    fn mul_examples() {
        let z8 = CycloNum::zeta(8, 1);
        let sq = &z8 * &z8;
        assert_eq!(sq, CycloNum::zeta(4, 1));
        assert_eq!(sq, CycloNum::zeta(8, 2));
        assert_eq!(sq.conductor(), 8);
        assert_eq!(CycloNum::zeta(5, 2) * CycloNum::zeta(5, 3), CycloNum::from_int(1));
        let i = CycloNum::zeta(4, 1);
        let one = CycloNum::one(4);
        assert_eq!((&one + &i) * (&one - &i), CycloNum::from_int(2));
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(CycloNum::from_int(1).inverse().unwrap(), CycloNum::from_int(1));
        assert_eq!(CycloNum::zeta(8, 1).inverse().unwrap(), CycloNum::zeta(8, 7));
        let one = CycloNum::one(4);
        let i = CycloNum::zeta(4, 1);
        // (1 + i) x = 1 as a 2x2 rational system: x = (a, b), a - b = 1, a + b = 0
        let x = (&one + &i).inverse().unwrap();
        assert_eq!(x.coeffs(), &[q(1, 2), q(-1, 2)]);
        assert_eq!(CycloNum::zero(7).inverse(), Err(CycloError::DivisionByZero));
    }

    #[test]
    fn mult_matrix_examples() {
        let zero = CycloNum::zero(4).mult_matrix();
        assert!(zero.to_rows().iter().flatten().all(Zero::is_zero));
        let id = CycloNum::one(5).mult_matrix();
        for r in 0..4 {
            for c in 0..4 {
                assert_eq!(id[(r, c)], q((r == c) as i64, 1));
            }
        }
        let m = CycloNum::zeta(4, 1).mult_matrix();
        assert_eq!(m.to_rows(), vec![vec![q(0, 1), q(-1, 1)], vec![q(1, 1), q(0, 1)]]);
    }

    #[test]
    fn char_poly_examples() {
        assert_eq!(CycloNum::zero(4).char_poly(), RationalPoly::from_ints(&[0, 0, 1]));
        assert_eq!(CycloNum::zeta(4, 1).char_poly(), RationalPoly::from_ints(&[1, 0, 1]));
        let half = CycloNum::from_ratio(1, 2).lift(3).unwrap();
        let expect = RationalPoly::new(vec![q(-1, 2), q(1, 1)]).pow(2);
        assert_eq!(half.char_poly(), expect);
    }

    #[test]
    fn integrality_examples() {
        assert!(!CycloNum::from_ratio(1, 2).is_algebraic_integer());
        let c = CycloNum::from_int_terms(5, &[(1, 1), (4, 1)]);
        // 2cos(2π/5) is a root of x² + x − 1; char poly over ℚ(ζ5) is its square
        assert_eq!(c.char_poly(), RationalPoly::from_ints(&[-1, 1, 1]).pow(2));
        assert!(c.is_algebraic_integer());
        let golden = CycloNum::from_int_terms(5, &[(2, -1), (3, -1)]);
        assert!((golden.embed().re - 1.618_033_988_749_895).abs() < 1e-12);
        assert_eq!(golden.char_poly(), RationalPoly::from_ints(&[-1, -1, 1]).pow(2));
        assert!(golden.is_algebraic_integer());
        assert!(!golden.scale(&q(1, 2)).is_algebraic_integer());
        for x in [
            golden.clone(),
            golden.scale(&q(1, 2)),
            c.clone(),
            CycloNum::from_ratio(1, 2),
        ] {
            assert_eq!(x.char_poly_is_integral(), x.is_algebraic_integer());
        }
    }

    #[test]
    fn root_of_unity_examples() {
        let one = CycloNum::from_int(1).as_root_of_unity().unwrap();
        assert_eq!(one.order, 1);
        let r = (-CycloNum::zeta(8, 1)).as_root_of_unity().unwrap();
        assert_eq!(r.order, 8);
        assert_eq!(r.exponent, 5);
        let minus_one = CycloNum::from_int(-1).as_root_of_unity().unwrap();
        assert_eq!((minus_one.base, minus_one.exponent, minus_one.order), (2, 1, 2));
        let neg_z5 = (-CycloNum::zeta(5, 1)).as_root_of_unity().unwrap();
        assert_eq!(neg_z5.order, 10);
        let not = &CycloNum::one(4) + &CycloNum::zeta(4, 1);
        assert!(not.as_root_of_unity().is_none());
        assert!((not.embed().norm() - 2f64.sqrt()).abs() < 1e-12);
        assert!(CycloNum::zero(3).as_root_of_unity().is_none());
    }

    #[test]
    fn embed_examples() {
        assert!(close(CycloNum::zeta(4, 1).embed(), Complex64::new(0.0, 1.0), 1e-12));
        let c = CycloNum::from_int_terms(5, &[(1, 1), (4, 1)]);
        assert!((c.embed().re - 0.618_033_988_7).abs() < 1e-10);
        assert_eq!(CycloNum::from_int(-1).embed(), Complex64::new(-1.0, 0.0));
    }

    #[test]
    fn lift_and_galois() {
        let a = CycloNum::from_int_terms(6, &[(1, 3), (2, -2)]);
        let up = a.lift(30).unwrap();
        assert_eq!(up, a);
        assert!(a.lift(9).is_err());
        let sqrt2 = CycloNum::from_int_terms(8, &[(1, 1), (7, 1)]);
        assert_eq!(sqrt2.galois(3), -&sqrt2);
        assert_eq!(sqrt2.conj(), sqrt2);
    }

    #[test]
    fn serde_round_trip_is_exact() {
        let a = CycloNum::from_terms(5, &[(1, q(3, 7)), (3, q(-2, 1))]);
        let json = serde_json::to_string(&a).unwrap();
        assert_eq!(json, r#"{"conductor":5,"coeffs":["0","3/7","0","-2"]}"#);
        let back: CycloNum = serde_json::from_str(&json).unwrap();
        assert_eq!(serde_json::to_string(&back).unwrap(), json);
        let short = serde_json::from_str::<CycloNum>(r#"{"conductor":5,"coeffs":["1"]}"#);
        assert!(short.is_err());
        let extra = serde_json::from_str::<CycloNum>(r#"{"conductor":1,"coeffs":["1"],"x":0}"#);
        assert!(extra.is_err());
        let garbage = serde_json::from_str::<CycloNum>(r#"{"conductor":1,"coeffs":["1/0x"]}"#);
        assert!(garbage.is_err());
    }
}
