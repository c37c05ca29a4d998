//! Finite ℤ₊-rings with a distinguished basis.
//!
//! A [`FusionRing`] stores the structure constants `N[a][b][c]`, the
//! coefficient of basis element `c` in the product `a·b`. Besides the axiom
//! checks this module computes Frobenius-Perron dimensions numerically and
//! checks exact dimension functions.

pub mod perron;

use std::fmt;

use thiserror::Error;

use crate::cyclotomic::CycloNum;
pub use perron::{perron, PerronError, PerronOptions, PerronResult};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FusionError {
    #[error("ring must have at least one basis element")]
    Empty,
    #[error("unit index {unit} out of range for rank {rank}")]
    UnitOutOfRange { unit: usize, rank: usize },
    #[error("structure constant tensor has {got} entries, expected {expected}")]
    TensorShape { expected: usize, got: usize },
    #[error("dual table has length {got}, expected {expected}")]
    DualLength { expected: usize, got: usize },
    #[error("dual index {index} out of range")]
    DualOutOfRange { index: usize },
    #[error("ring axioms fail: {}", .0.iter().map(ToString::to_string).collect::<Vec<_>>().join("; "))]
    Axioms(Vec<Violation>),
    #[error("ring is not transitive: {0}")]
    NotTransitive(String),
    #[error("Perron iteration for {what}: {source}")]
    Perron {
        what: String,
        #[source]
        source: PerronError,
    },
    #[error("homomorphism residual {residual:e} exceeds tolerance {tolerance:e}")]
    Residual { residual: f64, tolerance: f64 },
    #[error("regular element {regular:?} does not match dimensions {dims:?}")]
    Normalization { regular: Vec<f64>, dims: Vec<f64> },
}

/// A single failed ring axiom, naming the indices involved.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    Associativity {
        a: usize,
        b: usize,
        c: usize,
        d: usize,
        left: u64,
        right: u64,
    },
    LeftUnit {
        a: usize,
        b: usize,
        value: u32,
    },
    RightUnit {
        a: usize,
        b: usize,
        value: u32,
    },
    DualNotInvolution {
        a: usize,
    },
    DualPairing {
        a: usize,
        b: usize,
        value: u32,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Violation::Associativity {
                a,
                b,
                c,
                d,
                left,
                right,
            } => write!(
                f,
                "associativity ({a}·{b})·{c} vs {a}·({b}·{c}) at {d}: {left} != {right}"
            ),
            Violation::LeftUnit { a, b, value } => {
                write!(
                    f,
                    "left unit: N[unit][{a}][{b}] = {value}, expected {}",
                    u32::from(a == b)
                )
            }
            Violation::RightUnit { a, b, value } => {
                write!(
                    f,
                    "right unit: N[{a}][unit][{b}] = {value}, expected {}",
                    u32::from(a == b)
                )
            }
            Violation::DualNotInvolution { a } => write!(f, "dual is not an involution at {a}"),
            Violation::DualPairing { a, b, value } => write!(
                f,
                "duality: N[{a}][{b}][unit] = {value}, expected {}",
                u32::from(value == 0)
            ),
        }
    }
}

/// Finite ℤ₊-ring with distinguished basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FusionRing {
    names: Vec<String>,
    unit: usize,
    tensor: Vec<u32>,
    dual: Option<Vec<usize>>,
}

impl FusionRing {
    /// Builds a ring from a dense `rank³` tensor in `[a][b][c]` order. Only
    /// shapes are checked here; see [`verify_axioms`] for the ring axioms.
    pub fn new(
        names: Vec<String>,
        unit: usize,
        tensor: Vec<u32>,
        dual: Option<Vec<usize>>,
    ) -> Result<Self, FusionError> {
        let n = names.len();
        if n == 0 {
            return Err(FusionError::Empty);
        }
        if unit >= n {
            return Err(FusionError::UnitOutOfRange { unit, rank: n });
        }
        if tensor.len() != n * n * n {
            return Err(FusionError::TensorShape {
                expected: n * n * n,
                got: tensor.len(),
            });
        }
        if let Some(d) = &dual {
            if d.len() != n {
                return Err(FusionError::DualLength {
                    expected: n,
                    got: d.len(),
                });
            }
            if let Some(&index) = d.iter().find(|&&i| i >= n) {
                return Err(FusionError::DualOutOfRange { index });
            }
        }
        Ok(Self {
            names,
            unit,
            tensor,
            dual,
        })
    }

    /// Builds a ring from a rule `(a, b) -> [(c, N)]`.
    pub fn from_rule(
        names: Vec<String>,
        unit: usize,
        dual: Option<Vec<usize>>,
        mut rule: impl FnMut(usize, usize) -> Vec<(usize, u32)>,
    ) -> Result<Self, FusionError> {
        let n = names.len();
        let mut tensor = vec![0; n * n * n];
        for a in 0..n {
            for b in 0..n {
                for (c, m) in rule(a, b) {
                    tensor[(a * n + b) * n + c] += m;
                }
            }
        }
        Self::new(names, unit, tensor, dual)
    }

    /// Group ring of the cyclic group ℤ_n, basis `g^0 .. g^{n-1}`.
    pub fn cyclic_group(n: usize) -> Self {
        let names = (0..n).map(|i| format!("g{i}")).collect();
        let dual = (0..n).map(|i| (n - i) % n).collect();
        Self::from_rule(names, 0, Some(dual), |a, b| vec![((a + b) % n, 1)]).expect("valid shape")
    }

    pub fn rank(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    pub fn dual_table(&self) -> Option<&[usize]> {
        self.dual.as_deref()
    }

    /// Structure constant `N[a][b][c]`.
    pub fn n(&self, a: usize, b: usize, c: usize) -> u32 {
        let r = self.rank();
        self.tensor[(a * r + b) * r + c]
    }

    pub fn tensor(&self) -> &[u32] {
        &self.tensor
    }

    /// Product `a·b` as `(c, N[a][b][c])` pairs with nonzero multiplicity.
    pub fn product(&self, a: usize, b: usize) -> impl Iterator<Item = (usize, u32)> + '_ {
        (0..self.rank())
            .map(move |c| (c, self.n(a, b, c)))
            .filter(|&(_, m)| m > 0)
    }

    /// Dual of `a`: the stored table if present, otherwise the unique `b`
    /// with `N[a][b][unit] = 1`.
    pub fn dual(&self, a: usize) -> Option<usize> {
        match &self.dual {
            Some(d) => Some(d[a]),
            None => {
                let mut hits = (0..self.rank()).filter(|&b| self.n(a, b, self.unit) > 0);
                let b = hits.next()?;
                (hits.next().is_none() && self.n(a, b, self.unit) == 1).then_some(b)
            }
        }
    }

    pub fn is_commutative(&self) -> bool {
        let r = self.rank();
        (0..r).all(|a| (0..r).all(|b| (0..r).all(|c| self.n(a, b, c) == self.n(b, a, c))))
    }

    /// Sparse `[a, b, c, N]` listing of the nonzero structure constants in
    /// lexicographic order.
    pub fn sparse(&self) -> Vec<[u64; 4]> {
        let r = self.rank();
        let mut out = Vec::new();
        for a in 0..r {
            for b in 0..r {
                for c in 0..r {
                    let m = self.n(a, b, c);
                    if m > 0 {
                        out.push([a as u64, b as u64, c as u64, u64::from(m)]);
                    }
                }
            }
        }
        out
    }

    /// Matrix of left multiplication by `x` acting on coefficient vectors:
    /// entry `[z][y] = N[x][y][z]`.
    pub fn left_action(&self, x: usize) -> Vec<Vec<f64>> {
        let r = self.rank();
        (0..r)
            .map(|z| (0..r).map(|y| f64::from(self.n(x, y, z))).collect())
            .collect()
    }

    /// Matrix of right multiplication by the sum of all basis elements acting
    /// on coefficient vectors: entry `[z][y] = Σ_x N[y][x][z]`.
    pub fn right_sum_action(&self) -> Vec<Vec<f64>> {
        let r = self.rank();
        (0..r)
            .map(|z| {
                (0..r)
                    .map(|y| (0..r).map(|x| f64::from(self.n(y, x, z))).sum())
                    .collect()
            })
            .collect()
    }
}

/// Every violated ring axiom; empty iff the ring is a valid ℤ₊-ring with
/// unit (and with duality, when a dual table is present).
pub fn verify_axioms(ring: &FusionRing) -> Vec<Violation> {
    let r = ring.rank();
    let u = ring.unit();
    let mut out = Vec::new();
    for a in 0..r {
        for b in 0..r {
            let expected = u32::from(a == b);
            let left = ring.n(u, a, b);
            if left != expected {
                out.push(Violation::LeftUnit { a, b, value: left });
            }
            let right = ring.n(a, u, b);
            if right != expected {
                out.push(Violation::RightUnit { a, b, value: right });
            }
        }
    }
    for a in 0..r {
        for b in 0..r {
            for c in 0..r {
                for d in 0..r {
                    let left: u64 = (0..r)
                        .map(|e| u64::from(ring.n(a, b, e)) * u64::from(ring.n(e, c, d)))
                        .sum();
                    let right: u64 = (0..r)
                        .map(|f| u64::from(ring.n(b, c, f)) * u64::from(ring.n(a, f, d)))
                        .sum();
                    if left != right {
                        out.push(Violation::Associativity {
                            a,
                            b,
                            c,
                            d,
                            left,
                            right,
                        });
                    }
                }
            }
        }
    }
    if let Some(dual) = ring.dual_table() {
        for a in 0..r {
            if dual[dual[a]] != a {
                out.push(Violation::DualNotInvolution { a });
            }
            for b in 0..r {
                let value = ring.n(a, b, u);
                let expected = u32::from(b == dual[a]);
                if value != expected {
                    out.push(Violation::DualPairing { a, b, value });
                }
            }
        }
    }
    out
}

/// Both transitivity conditions: for every `x, z` some `y₁` has `z` in
/// `x·y₁` and some `y₂` has `z` in `y₂·x`. Rings failing the axioms are
/// rejected first.
pub fn is_transitive(ring: &FusionRing) -> Result<bool, FusionError> {
    let violations = verify_axioms(ring);
    if !violations.is_empty() {
        return Err(FusionError::Axioms(violations));
    }
    Ok(transitivity_witness(ring).is_none())
}

/// The first `(x, z, side)` for which transitivity fails.
fn transitivity_witness(ring: &FusionRing) -> Option<(usize, usize, &'static str)> {
    let r = ring.rank();
    for x in 0..r {
        for z in 0..r {
            if !(0..r).any(|y| ring.n(x, y, z) > 0) {
                return Some((x, z, "left"));
            }
            if !(0..r).any(|y| ring.n(y, x, z) > 0) {
                return Some((x, z, "right"));
            }
        }
    }
    None
}

/// Numerical Frobenius-Perron data of a transitive ring.
#[derive(Debug, Clone, PartialEq)]
pub struct FPData {
    /// `d₊` on each basis element.
    pub dims: Vec<f64>,
    /// Coefficients of the regular element, scaled so the unit coefficient is 1.
    pub regular: Vec<f64>,
    /// Perron root of right multiplication by the sum of the basis.
    pub perron_eigenvalue: f64,
    /// `d₊(R) = Σ regular[i]·dims[i]`; equals `Σ dims[i]²` under the
    /// semisimple normalization.
    pub fp_dim_category: f64,
    /// `max |d(x)d(y) − Σ N[x][y][z] d(z)|`.
    pub residual: f64,
    /// Whether `regular` coincides with `dims` within tolerance.
    pub semisimple_normalization: bool,
}

/// Frobenius-Perron dimensions of a transitive ring.
///
/// Each `dims[x]` is the Perron root of the left action of `x`; the regular
/// element is the Perron vector of right multiplication by the sum of the
/// basis, which is strictly positive for transitive rings. For rings with a
/// duality the regular element must equal `Σ d₊(x)·x`; that is enforced.
pub fn fp_dims(ring: &FusionRing, opts: &PerronOptions) -> Result<FPData, FusionError> {
    if !is_transitive(ring)? {
        let (x, z, side) = transitivity_witness(ring).expect("non-transitive ring has a witness");
        return Err(FusionError::NotTransitive(format!(
            "{} never occurs in a {side} product with {}",
            ring.names[z], ring.names[x]
        )));
    }
    let r = ring.rank();
    let ones = vec![1.0; r];
    let perron_of =
        |m: Vec<Vec<f64>>, what: String| perron(&m, &ones, opts).map_err(|source| FusionError::Perron { what, source });

    let dims = (0..r)
        .map(|x| perron_of(ring.left_action(x), format!("d+({})", ring.names[x])).map(|p| p.eigenvalue))
        .collect::<Result<Vec<_>, _>>()?;

    let reg = perron_of(ring.right_sum_action(), "regular element".into())?;
    let scale = reg.vector[ring.unit()];
    let regular: Vec<f64> = reg.vector.iter().map(|v| v / scale).collect();

    let residual = homomorphism_residual(ring, &dims);
    if residual.is_nan() || residual >= opts.tolerance {
        return Err(FusionError::Residual {
            residual,
            tolerance: opts.tolerance,
        });
    }
    let scale_tol = opts.tolerance * dims.iter().cloned().fold(1.0, f64::max);
    let semisimple_normalization = regular.iter().zip(&dims).all(|(a, b)| (a - b).abs() <= scale_tol);
    if ring.dual_table().is_some() && !semisimple_normalization {
        return Err(FusionError::Normalization { regular, dims });
    }
    let fp_dim_category = regular.iter().zip(&dims).map(|(a, b)| a * b).sum();
    Ok(FPData {
        dims,
        regular,
        perron_eigenvalue: reg.eigenvalue,
        fp_dim_category,
        residual,
        semisimple_normalization,
    })
}

pub fn homomorphism_residual(ring: &FusionRing, dims: &[f64]) -> f64 {
    let r = ring.rank();
    let mut worst: f64 = 0.0;
    for x in 0..r {
        for y in 0..r {
            let rhs: f64 = (0..r).map(|z| f64::from(ring.n(x, y, z)) * dims[z]).sum();
            worst = worst.max((dims[x] * dims[y] - rhs).abs());
        }
    }
    worst
}

/// Checks `x·R = d₊(x)·R` and `R·y = d₊(y)·R` entrywise.
pub fn regular_check(ring: &FusionRing, fp: &FPData, tolerance: f64) -> bool {
    let r = ring.rank();
    let reg = &fp.regular;
    for x in 0..r {
        for z in 0..r {
            let left: f64 = (0..r).map(|y| f64::from(ring.n(x, y, z)) * reg[y]).sum();
            if (left - fp.dims[x] * reg[z]).abs() > tolerance * (1.0 + left.abs()) {
                return false;
            }
            let right: f64 = (0..r).map(|y| f64::from(ring.n(y, x, z)) * reg[y]).sum();
            if (right - fp.dims[x] * reg[z]).abs() > tolerance * (1.0 + right.abs()) {
                return false;
            }
        }
    }
    true
}

/// Which dimension function a [`DimensionFunction`] represents.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DimensionKind {
    Categorical,
    FrobeniusPerron,
    Custom(String),
}

impl fmt::Display for DimensionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DimensionKind::Categorical => write!(f, "categorical"),
            DimensionKind::FrobeniusPerron => write!(f, "frobenius-perron"),
            DimensionKind::Custom(s) => write!(f, "{s}"),
        }
    }
}

/// Exact ring homomorphism `K₀ → ℂ`, given by its values on the basis.
#[derive(Debug, Clone, PartialEq)]
pub struct DimensionFunction {
    pub kind: DimensionKind,
    pub values: Vec<CycloNum>,
}

impl DimensionFunction {
    pub fn new(kind: DimensionKind, values: Vec<CycloNum>) -> Self {
        Self { kind, values }
    }

    /// `Σ d(x)²`, the dimension of the regular element `Σ d(x)·x`.
    pub fn regular_dimension(&self) -> CycloNum {
        self.values.iter().map(|d| d * d).sum()
    }
}

/// Exact check that `d` is a nonzero unital ring homomorphism.
pub fn dimension_function_check(ring: &FusionRing, d: &DimensionFunction) -> bool {
    let r = ring.rank();
    if d.values.len() != r || !d.values[ring.unit()].is_one() {
        return false;
    }
    if d.values.iter().all(CycloNum::is_zero) {
        return false;
    }
    (0..r).all(|x| {
        (0..r).all(|y| {
            let lhs = &d.values[x] * &d.values[y];
            let rhs: CycloNum = ring
                .product(x, y)
                .map(|(z, m)| d.values[z].scale(&num_rational::BigRational::from_integer(m.into())))
                .sum();
            lhs == rhs
        })
    })
}
