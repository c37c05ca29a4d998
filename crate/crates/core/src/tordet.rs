//! Determinants of automorphisms valued in the torsion part of 𝔸⊗_ℤℂ*.
//!
//! A root of unity `e^{2πik/m}` raised to an algebraic-integer power `a` is
//! the element `e^{2πik/m} ⊗ a`, which the torsion part identifies with the
//! class of `k·a/m` in `(𝔸⊗ℚ)/𝔸`. A [`TorsionDetValue`] stores such a
//! representative; two values are equal iff their representatives differ by
//! an algebraic integer. Only semisimple objects are modelled: an
//! automorphism is a family of invertible matrices, one per simple
//! constituent, acting on the multiplicity spaces.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::One;
use thiserror::Error;

use crate::cyclotomic::{CycloNum, RootOfUnity};
use crate::fusion_ring::{DimensionFunction, FusionRing};
use crate::linalg::{self, Matrix};

pub use crate::fusion_ring::DimensionKind;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum TorDetError {
    #[error("exponent {0} is not an algebraic integer")]
    NonIntegralPower(CycloNum),
    #[error("determinant {det} on simple {simple} is not a root of unity; only the torsion part is modelled")]
    UnsupportedValue { simple: usize, det: CycloNum },
    #[error("block for simple {simple} is singular")]
    Singular { simple: usize },
    #[error("block for simple {simple} is not square")]
    NotSquare { simple: usize },
    #[error("simple {simple} appears twice in one automorphism")]
    DuplicateSimple { simple: usize },
    #[error("automorphisms act on different objects")]
    ObjectMismatch,
    #[error("dimension function has no value for simple {simple}")]
    MissingDimension { simple: usize },
    #[error("root order must be positive")]
    ZeroOrder,
}

/// Class in `(𝔸⊗ℚ)/𝔸` standing for a product of roots of unity raised to
/// algebraic-integer powers.
#[derive(Debug, Clone)]
pub struct TorsionDetValue {
    rep: CycloNum,
}

impl TorsionDetValue {
    pub fn identity() -> Self {
        Self {
            rep: CycloNum::from_int(0),
        }
    }

    /// `(ζ_m^k)^a` for an algebraic integer `a`; representative `k·a/m`.
    pub fn torsion_value(root_order: u64, root_exponent: i64, power: &CycloNum) -> Result<Self, TorDetError> {
        if root_order == 0 {
            return Err(TorDetError::ZeroOrder);
        }
        if !power.is_algebraic_integer() {
            return Err(TorDetError::NonIntegralPower(power.clone()));
        }
        let q = BigRational::new(BigInt::from(root_exponent), BigInt::from(root_order));
        Ok(Self { rep: power.scale(&q) })
    }

    /// `r^a` for a detected root of unity `r`.
    pub fn from_root(root: RootOfUnity, power: &CycloNum) -> Result<Self, TorDetError> {
        Self::torsion_value(root.base, root.exponent as i64, power)
    }

    /// Wraps a raw class representative.
    pub fn from_rep(rep: CycloNum) -> Self {
        Self { rep }
    }

    pub fn rep(&self) -> &CycloNum {
        &self.rep
    }

    /// Group law: representatives add.
    pub fn combine(&self, other: &Self) -> Self {
        Self {
            rep: &self.rep + &other.rep,
        }
    }

    pub fn inverse(&self) -> Self {
        Self { rep: -&self.rep }
    }

    /// Module action of an algebraic integer: representatives scale.
    pub fn power(&self, a: &CycloNum) -> Result<Self, TorDetError> {
        if !a.is_algebraic_integer() {
            return Err(TorDetError::NonIntegralPower(a.clone()));
        }
        Ok(Self { rep: &self.rep * a })
    }

    pub fn is_identity(&self) -> bool {
        self.rep.is_algebraic_integer()
    }

    /// Smallest positive integer `m` with `m·rep` integral coefficientwise;
    /// the value is then `ζ_m` raised to the algebraic integer `m·rep`.
    pub fn denominator(&self) -> BigInt {
        self.rep
            .coeffs()
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
    }
}

impl PartialEq for TorsionDetValue {
    fn eq(&self, other: &Self) -> bool {
        (&self.rep - &other.rep).is_algebraic_integer()
    }
}

impl fmt::Display for TorsionDetValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = self.denominator();
        let exponent = self.rep.scale(&BigRational::from_integer(m.clone()));
        write!(f, "ζ{m}^1 with exponent {exponent}")
    }
}

/// Automorphism of a semisimple object `⊕ Z^{m_Z}`, given blockwise on the
/// multiplicity spaces `Hom(Z, X)`.
#[derive(Debug, Clone, PartialEq)]
pub struct BlockAutomorphism {
    blocks: Vec<(usize, Matrix<CycloNum>)>,
}

impl BlockAutomorphism {
    pub fn new(mut blocks: Vec<(usize, Matrix<CycloNum>)>) -> Result<Self, TorDetError> {
        blocks.sort_by_key(|(z, _)| *z);
        for w in blocks.windows(2) {
            if w[0].0 == w[1].0 {
                return Err(TorDetError::DuplicateSimple { simple: w[0].0 });
            }
        }
        for (z, m) in &blocks {
            if !m.is_square() || m.rows() == 0 {
                return Err(TorDetError::NotSquare { simple: *z });
            }
        }
        Ok(Self { blocks })
    }

    /// The scalar `λ` on the object with the given `(simple, multiplicity)`
    /// constituents.
    pub fn scalar(object: &[(usize, usize)], lambda: &CycloNum) -> Result<Self, TorDetError> {
        let blocks = object
            .iter()
            .filter(|(_, m)| *m > 0)
            .map(|&(z, m)| {
                let zero = CycloNum::zero(lambda.conductor());
                (
                    z,
                    Matrix::from_fn(m, m, |i, j| if i == j { lambda.clone() } else { zero.clone() }),
                )
            })
            .collect();
        Self::new(blocks)
    }

    /// Scalar `λ_Z` on each isotypic component.
    pub fn block_scalar(parts: &[(usize, usize, CycloNum)]) -> Result<Self, TorDetError> {
        let blocks = parts
            .iter()
            .filter(|(_, m, _)| *m > 0)
            .map(|(z, m, lambda)| {
                let zero = CycloNum::zero(lambda.conductor());
                (
                    *z,
                    Matrix::from_fn(*m, *m, |i, j| if i == j { lambda.clone() } else { zero.clone() }),
                )
            })
            .collect();
        Self::new(blocks)
    }

    pub fn blocks(&self) -> &[(usize, Matrix<CycloNum>)] {
        &self.blocks
    }

    /// `(simple, multiplicity)` pairs of the underlying object.
    pub fn object(&self) -> Vec<(usize, usize)> {
        self.blocks.iter().map(|(z, m)| (*z, m.rows())).collect()
    }

    /// Composition `self ∘ other` on the same object.
    pub fn compose(&self, other: &Self) -> Result<Self, TorDetError> {
        if self.object() != other.object() {
            return Err(TorDetError::ObjectMismatch);
        }
        let blocks = self
            .blocks
            .iter()
            .zip(&other.blocks)
            .map(|((z, a), (_, b))| (*z, a.mul(b)))
            .collect();
        Ok(Self { blocks })
    }

    /// Automorphism of `X ⊕ Y` acting by `self` on `X` and `other` on `Y`.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut blocks: Vec<(usize, Matrix<CycloNum>)> = Vec::new();
        let mut zs: Vec<usize> = self.blocks.iter().chain(&other.blocks).map(|(z, _)| *z).collect();
        zs.sort_unstable();
        zs.dedup();
        for z in zs {
            let a = self.blocks.iter().find(|(w, _)| *w == z).map(|(_, m)| m);
            let b = other.blocks.iter().find(|(w, _)| *w == z).map(|(_, m)| m);
            let block = match (a, b) {
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (Some(a), Some(b)) => {
                    let (p, q) = (a.rows(), b.rows());
                    let zero = CycloNum::from_int(0);
                    Matrix::from_fn(p + q, p + q, |i, j| match (i < p, j < p) {
                        (true, true) => a[(i, j)].clone(),
                        (false, false) => b[(i - p, j - p)].clone(),
                        _ => zero.clone(),
                    })
                }
                (None, None) => unreachable!(),
            };
            blocks.push((z, block));
        }
        Self { blocks }
    }
}

/// `det(a) = Π_Z det(a|Hom(Z, X))^{d(Z)}` in the torsion model.
pub fn det_automorphism(a: &BlockAutomorphism, d: &DimensionFunction) -> Result<TorsionDetValue, TorDetError> {
    let mut acc = TorsionDetValue::identity();
    for (z, block) in a.blocks() {
        let dz = d.values.get(*z).ok_or(TorDetError::MissingDimension { simple: *z })?;
        let det = linalg::determinant(block);
        if det.is_zero() {
            return Err(TorDetError::Singular { simple: *z });
        }
        let root = det.as_root_of_unity().ok_or_else(|| TorDetError::UnsupportedValue {
            simple: *z,
            det: det.clone(),
        })?;
        acc = acc.combine(&TorsionDetValue::from_root(root, dz)?);
    }
    Ok(acc)
}

/// Decomposition of `x ⊗ (⊕ Z^{m_Z})` into simples, using the fusion rules.
pub fn tensor_object(ring: &FusionRing, x: usize, object: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let mut mult = vec![0usize; ring.rank()];
    for &(y, m) in object {
        for (z, n) in ring.product(x, y) {
            mult[z] += m * n as usize;
        }
    }
    mult.into_iter().enumerate().filter(|(_, m)| *m > 0).collect()
}
