//! Modular data and the verifications built on it.
//!
//! The s-matrix is stored unnormalized: `S̃ = √D·S` with `S̃[0][0] = 1` and
//! `S̃[0][i] = d(Xᵢ)`, so every entry stays in ℚ(ζ_M). The normalized
//! relations `S² = C` and `(ST)³ = C·e^{πic/4}` then read
//! `S̃² = D·C` and `(S̃T)³ = p⁺·S̃²`, using `p⁺ = √D·e^{πic/4}`.
//!
//! Twists are integers `tᵢ` mod the conductor `M`, `θᵢ = ζ_M^{tᵢ}`.
//!
//! Braiding eigenvalues: on the `Z`-isotypic part of `X ⊗ Y` the twist of
//! the product acts by `θ_Z`, and `θ_{X⊗Y} = (θ_X ⊗ θ_Y)β⁻²_{XY}` gives
//! `β²_{XY}|_Z = θ_Z / (θ_X θ_Y)`, i.e. the exponent `t_Z − t_X − t_Y`
//! with multiplicity `N[X][Y][Z]`. In the semisimple case this turns
//! quasiunipotence of β² and of the Casimir `z = θ²` into statements about
//! finite orders of roots of unity.
//!
//! Statements about `D^{1/2}` and `D^{5/2}` are tested after squaring: 𝔸
//! is integrally closed, so a root of the monic `x² − β` with `β ∈ 𝔸` lies
//! in 𝔸.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use thiserror::Error;

use crate::cyclotomic::{lcm, CycloNum};
use crate::fusion_ring::{
    dimension_function_check, verify_axioms, DimensionFunction, DimensionKind, FPData, FusionRing, Violation,
};
use crate::linalg::Matrix;
use crate::report::Check;
use crate::tordet::{det_automorphism, BlockAutomorphism, TorDetError, TorsionDetValue};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ModularError {
    #[error("malformed modular data: {0}")]
    Shape(String),
    #[error("non-modular input: {0}")]
    Degenerate(String),
    #[error("no s-matrix column has all-positive character values")]
    NoPositiveColumn,
    #[error(transparent)]
    TorDet(#[from] TorDetError),
}

#[derive(Debug, Clone, PartialEq)]
pub struct ModularData {
    name: String,
    conductor: u64,
    ring: FusionRing,
    twists: Vec<i64>,
    smat: Matrix<CycloNum>,
}

impl ModularData {
    pub fn new(
        name: impl Into<String>,
        conductor: u64,
        ring: FusionRing,
        twists: Vec<i64>,
        smat: Matrix<CycloNum>,
    ) -> Result<Self, ModularError> {
        let n = ring.rank();
        if conductor == 0 {
            return Err(ModularError::Shape("conductor must be positive".into()));
        }
        if twists.len() != n {
            return Err(ModularError::Shape(format!(
                "twists has {} entries for {n} simples",
                twists.len()
            )));
        }
        if smat.rows() != n || smat.cols() != n {
            return Err(ModularError::Shape(format!(
                "smat is {}x{} for {n} simples",
                smat.rows(),
                smat.cols()
            )));
        }
        Ok(Self {
            name: name.into(),
            conductor,
            ring,
            twists,
            smat,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn ring(&self) -> &FusionRing {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.ring.rank()
    }

    /// Twist exponents exactly as stored.
    pub fn twists(&self) -> &[i64] {
        &self.twists
    }

    pub fn smat(&self) -> &Matrix<CycloNum> {
        &self.smat
    }

    /// `tᵢ mod M` in `[0, M)`.
    pub fn twist_exponent(&self, i: usize) -> u64 {
        self.twists[i].rem_euclid(self.conductor as i64) as u64
    }

    pub fn theta(&self, i: usize) -> CycloNum {
        CycloNum::zeta(self.conductor, self.twists[i])
    }

    pub fn t_matrix(&self) -> Matrix<CycloNum> {
        let n = self.rank();
        let zero = CycloNum::zero(self.conductor);
        Matrix::from_fn(n, n, |i, j| if i == j { self.theta(i) } else { zero.clone() })
    }

    /// Categorical dimensions, the first row of `S̃`.
    pub fn categorical_dims(&self) -> DimensionFunction {
        DimensionFunction::new(DimensionKind::Categorical, self.smat.row(0).to_vec())
    }

    pub fn with_twist(&self, i: usize, t: i64) -> Self {
        let mut out = self.clone();
        out.twists[i] = t;
        out
    }

    pub fn with_smat_entry(&self, i: usize, j: usize, value: CycloNum) -> Self {
        let mut out = self.clone();
        out.smat[(i, j)] = value;
        out
    }

    /// Image of the data under ζ ↦ ζ^a on `S̃` and `T`; `a` must be a unit
    /// modulo the conductor of every entry.
    pub fn galois_conjugate(&self, a: i64) -> Self {
        let m = self.conductor as i64;
        let smat = Matrix::from_fn(self.rank(), self.rank(), |i, j| {
            let e = &self.smat[(i, j)];
            e.lift(lcm(e.conductor(), self.conductor))
                .expect("lcm is a multiple")
                .galois(a)
        });
        let twists = self.twists.iter().map(|t| (t * a).rem_euclid(m)).collect();
        Self {
            name: format!("{} (galois {a})", self.name),
            conductor: self.conductor,
            ring: self.ring.clone(),
            twists,
            smat,
        }
    }
}

/// One failed modular-data invariant, carrying the exact cells involved.
#[derive(Debug, Clone, PartialEq)]
pub enum ModularViolation {
    RingAxioms(Vec<Violation>),
    UnitTwist {
        exponent: i64,
    },
    UnitEntry {
        value: CycloNum,
    },
    Asymmetric {
        i: usize,
        j: usize,
    },
    Degenerate(String),
    NoDual {
        simple: usize,
    },
    SquareRelation {
        i: usize,
        j: usize,
        got: CycloNum,
        expected: CycloNum,
    },
    CubeRelation {
        i: usize,
        j: usize,
        got: CycloNum,
        expected: CycloNum,
    },
    Verlinde {
        a: usize,
        b: usize,
        c: usize,
        got: CycloNum,
        expected: u32,
    },
    FrobeniusSchur {
        simple: usize,
        got: CycloNum,
        self_dual: bool,
    },
}

impl fmt::Display for ModularViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModularViolation::RingAxioms(v) => {
                write!(f, "fusion ring axioms: ")?;
                let parts: Vec<_> = v.iter().map(ToString::to_string).collect();
                write!(f, "{}", parts.join("; "))
            }
            ModularViolation::UnitTwist { exponent } => {
                write!(f, "twist of the unit has exponent {exponent}, expected 0")
            }
            ModularViolation::UnitEntry { value } => write!(f, "S̃[0][0] = {value}, expected 1"),
            ModularViolation::Asymmetric { i, j } => write!(f, "S̃[{i}][{j}] != S̃[{j}][{i}]"),
            ModularViolation::Degenerate(s) => write!(f, "non-modular input: {s}"),
            ModularViolation::NoDual { simple } => write!(f, "simple {simple} has no dual"),
            ModularViolation::SquareRelation { i, j, got, expected } => {
                write!(f, "(S̃²)[{i}][{j}] = {got}, expected (D·C)[{i}][{j}] = {expected}")
            }
            ModularViolation::CubeRelation { i, j, got, expected } => {
                write!(f, "((S̃T)³)[{i}][{j}] = {got}, expected (p⁺·S̃²)[{i}][{j}] = {expected}")
            }
            ModularViolation::Verlinde { a, b, c, got, expected } => {
                write!(f, "Verlinde N[{a}][{b}][{c}] = {got}, fusion table has {expected}")
            }
            ModularViolation::FrobeniusSchur { simple, got, self_dual } => {
                let want = if *self_dual { "±1" } else { "0" };
                write!(f, "Frobenius-Schur indicator ν₂({simple}) = {got}, expected {want}")
            }
        }
    }
}

/// Every violated invariant of the modular data; empty iff valid.
pub fn verify_modular(md: &ModularData) -> Vec<ModularViolation> {
    let mut out = Vec::new();
    let ring = md.ring();
    let n = md.rank();
    let axioms = verify_axioms(ring);
    if !axioms.is_empty() {
        out.push(ModularViolation::RingAxioms(axioms));
    }
    let u = ring.unit();
    if md.twist_exponent(u) != 0 {
        out.push(ModularViolation::UnitTwist {
            exponent: md.twists()[u],
        });
    }
    let s = md.smat();
    if !s[(u, u)].is_one() {
        out.push(ModularViolation::UnitEntry {
            value: s[(u, u)].clone(),
        });
    }
    for i in 0..n {
        for j in i + 1..n {
            if s[(i, j)] != s[(j, i)] {
                out.push(ModularViolation::Asymmetric { i, j });
            }
        }
    }

    let d = global_dimension_value(md);
    if d.is_zero() {
        out.push(ModularViolation::Degenerate("global dimension is zero".into()));
        return out;
    }
    let duals: Vec<Option<usize>> = (0..n).map(|a| ring.dual(a)).collect();
    for (a, du) in duals.iter().enumerate() {
        if du.is_none() {
            out.push(ModularViolation::NoDual { simple: a });
        }
    }

    let s2 = s.mul(s);
    let zero = CycloNum::from_int(0);
    for i in 0..n {
        for j in 0..n {
            let expected = if duals[i] == Some(j) { d.clone() } else { zero.clone() };
            if s2[(i, j)] != expected {
                out.push(ModularViolation::SquareRelation {
                    i,
                    j,
                    got: s2[(i, j)].clone(),
                    expected,
                });
            }
        }
    }

    let p_plus = gauss_sum(md, 1);
    if p_plus.is_zero() {
        out.push(ModularViolation::Degenerate("Gauss sum p⁺ vanishes".into()));
    } else {
        let st = Matrix::from_fn(n, n, |i, j| &s[(i, j)] * &md.theta(j));
        let st3 = st.mul(&st).mul(&st);
        for i in 0..n {
            for j in 0..n {
                let expected = &p_plus * &s2[(i, j)];
                if st3[(i, j)] != expected {
                    out.push(ModularViolation::CubeRelation {
                        i,
                        j,
                        got: st3[(i, j)].clone(),
                        expected,
                    });
                }
            }
        }
    }

    match verlinde_fusion(md) {
        Ok(table) => {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        let got = &table[(a * n + b) * n + c];
                        let expected = ring.n(a, b, c);
                        if *got != CycloNum::from_int(i64::from(expected)) {
                            out.push(ModularViolation::Verlinde {
                                a,
                                b,
                                c,
                                got: got.clone(),
                                expected,
                            });
                        }
                    }
                }
            }
        }
        Err(e) => out.push(ModularViolation::Degenerate(e)),
    }

    for (k, du) in duals.iter().enumerate() {
        let nu = frobenius_schur(md, k, &d);
        let self_dual = *du == Some(k);
        let ok = if self_dual {
            nu.is_one() || (-&nu).is_one()
        } else {
            nu.is_zero()
        };
        if !ok {
            out.push(ModularViolation::FrobeniusSchur {
                simple: k,
                got: nu,
                self_dual,
            });
        }
    }
    out
}

/// Second Frobenius-Schur indicator
/// `ν₂(k) = D⁻¹ Σ_{i,j} N[i][j][k]·dᵢ·dⱼ·(θᵢ/θⱼ)²`.
pub fn frobenius_schur(md: &ModularData, k: usize, dimension: &CycloNum) -> CycloNum {
    let n = md.rank();
    let u = md.ring().unit();
    let s = md.smat();
    let t = md.twists();
    let mut sum = CycloNum::zero(md.conductor());
    for i in 0..n {
        for j in 0..n {
            let m = md.ring().n(i, j, k);
            if m == 0 {
                continue;
            }
            let term = &(&s[(u, i)] * &s[(u, j)]) * &CycloNum::zeta(md.conductor(), 2 * (t[i] - t[j]));
            sum = &sum + &term.scale(&BigRational::from_integer(m.into()));
        }
    }
    sum.checked_div(dimension).unwrap_or(sum)
}

/// Fusion coefficients reconstructed from `S̃`:
/// `N[a][b][c] = Σ_x S̃[a][x]·S̃[b][x]·S̃[c*][x] / (D·S̃[0][x])`.
pub fn verlinde_fusion(md: &ModularData) -> Result<Vec<CycloNum>, String> {
    let n = md.rank();
    let s = md.smat();
    let u = md.ring().unit();
    let d = global_dimension_value(md);
    let inv: Vec<CycloNum> = (0..n)
        .map(|x| {
            (&d * &s[(u, x)])
                .inverse()
                .map_err(|_| format!("D·S̃[0][{x}] vanishes; Verlinde formula undefined"))
        })
        .collect::<Result<_, _>>()?;
    let duals: Vec<usize> = (0..n)
        .map(|c| md.ring().dual(c).ok_or_else(|| format!("simple {c} has no dual")))
        .collect::<Result<_, _>>()?;
    let mut out = Vec::with_capacity(n * n * n);
    for a in 0..n {
        for b in 0..n {
            let ab: Vec<CycloNum> = (0..n).map(|x| &(&s[(a, x)] * &s[(b, x)]) * &inv[x]).collect();
            for &cd in duals.iter() {
                out.push((0..n).map(|x| &ab[x] * &s[(cd, x)]).sum());
            }
        }
    }
    Ok(out)
}

fn global_dimension_value(md: &ModularData) -> CycloNum {
    md.smat().row(md.ring().unit()).iter().map(|d| d * d).sum()
}

#[derive(Debug, Clone, PartialEq)]
pub struct GlobalDimension {
    pub value: CycloNum,
    pub numeric: f64,
    pub algebraic_integer: bool,
    /// Every complex embedding is real and positive (numerically).
    pub totally_positive: bool,
}

/// `D = Σ d(Xᵢ)²`, with the integrality and total positivity checks.
pub fn global_dimension(md: &ModularData) -> GlobalDimension {
    let value = global_dimension_value(md);
    let numeric = value.embed().re;
    let algebraic_integer = value.is_algebraic_integer();
    let totally_positive = value
        .embeddings()
        .iter()
        .all(|(_, z)| z.re > 0.0 && z.im.abs() <= 1e-9 * (1.0 + z.re.abs()));
    GlobalDimension {
        value,
        numeric,
        algebraic_integer,
        totally_positive,
    }
}

/// `Σ d(Xᵢ)²·θᵢ^{sign}`.
fn gauss_sum(md: &ModularData, sign: i64) -> CycloNum {
    let u = md.ring().unit();
    (0..md.rank())
        .map(|i| {
            let d = &md.smat()[(u, i)];
            &(d * d) * &CycloNum::zeta(md.conductor(), sign * md.twists()[i])
        })
        .sum()
}

#[derive(Debug, Clone, PartialEq)]
pub struct GaussSums {
    pub plus: CycloNum,
    pub minus: CycloNum,
    /// Whether `p⁺·p⁻ = D` holds exactly.
    pub product_is_dimension: bool,
}

pub fn gauss_sums(md: &ModularData) -> Result<GaussSums, ModularError> {
    let plus = gauss_sum(md, 1);
    if plus.is_zero() {
        return Err(ModularError::Degenerate("Gauss sum p⁺ vanishes".into()));
    }
    let minus = gauss_sum(md, -1);
    let product_is_dimension = &plus * &minus == global_dimension_value(md);
    Ok(GaussSums {
        plus,
        minus,
        product_is_dimension,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChargeMethod {
    /// `√D` found exactly in a cyclotomic lift; the positive root picked by embedding.
    ExactSqrt,
    /// `c mod 4` exact, the mod-8 lift from the numerical argument of `p⁺`.
    Mod4PlusNumeric,
}

impl fmt::Display for ChargeMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ChargeMethod::ExactSqrt => "exact_sqrt",
            ChargeMethod::Mod4PlusNumeric => "mod4_plus_numeric",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CentralCharge {
    /// Representative of `c mod 8` in `[0, 8)`.
    pub c_mod_8: BigRational,
    pub method: ChargeMethod,
    /// The positive square root of `D`, when found exactly.
    pub sqrt_dimension: Option<CycloNum>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ChargeOptions {
    /// Largest conductor the exact square-root lift may use before falling
    /// back to the numerical mod-8 resolution.
    pub max_sqrt_conductor: u64,
}

impl Default for ChargeOptions {
    fn default() -> Self {
        Self {
            max_sqrt_conductor: 4096,
        }
    }
}

pub fn central_charge(md: &ModularData) -> Result<CentralCharge, ModularError> {
    central_charge_with(md, &ChargeOptions::default())
}

/// Central charge from `e^{πic/4} = p⁺/√D`, √D > 0.
///
/// `p⁺²/D = e^{πic/2}` is an exact root of unity and fixes `c mod 4`. For
/// `w = e^{πic₀/4}` one of its square roots, `p⁺/w` is an exact square root
/// of D inside ℚ(ζ_{lcm(M, 2m)}); its sign in the standard embedding decides
/// between `c₀` and `c₀ + 4`.
pub fn central_charge_with(md: &ModularData, opts: &ChargeOptions) -> Result<CentralCharge, ModularError> {
    let p = gauss_sum(md, 1);
    if p.is_zero() {
        return Err(ModularError::Degenerate("Gauss sum p⁺ vanishes".into()));
    }
    let d = global_dimension_value(md);
    let ratio = (&p * &p)
        .checked_div(&d)
        .map_err(|_| ModularError::Degenerate("global dimension is zero".into()))?;
    let root = ratio
        .as_root_of_unity()
        .ok_or_else(|| ModularError::Degenerate(format!("p⁺²/D = {ratio} is not a root of unity")))?;
    let (k, m) = root.turn_fraction();
    // c₀ = 4k/m in [0, 4)
    let c0 = BigRational::new(BigInt::from(4 * k), BigInt::from(m));
    let four = BigRational::from_integer(4.into());
    let lifted = lcm(p.conductor(), 2 * m);

    if lifted <= opts.max_sqrt_conductor {
        let s = &p * &CycloNum::zeta(2 * m, -(k as i64));
        if &s * &s != d || s.conj() != s {
            return Err(ModularError::Degenerate(format!(
                "p⁺·e^(-πic/4) = {s} is not a real square root of D"
            )));
        }
        let positive = s.embed().re > 0.0;
        let (c, sqrt) = if positive { (c0, s) } else { (c0 + four, -s) };
        return Ok(CentralCharge {
            c_mod_8: c,
            method: ChargeMethod::ExactSqrt,
            sqrt_dimension: Some(sqrt),
        });
    }

    let arg = p.embed().arg();
    let c_numeric = (arg / (std::f64::consts::PI / 4.0)).rem_euclid(8.0);
    let c0f = c0.to_f64().unwrap_or(0.0);
    let dist = |x: f64| {
        let r = (x - c_numeric).rem_euclid(8.0);
        r.min(8.0 - r)
    };
    let c = if dist(c0f) <= dist(c0f + 4.0) { c0 } else { c0 + four };
    Ok(CentralCharge {
        c_mod_8: c,
        method: ChargeMethod::Mod4PlusNumeric,
        sqrt_dimension: None,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistOrders {
    pub per_simple: Vec<u64>,
    pub lcm: u64,
}

/// Order of each `θᵢ = ζ_M^{tᵢ}` and their lcm.
pub fn twist_orders(md: &ModularData) -> TwistOrders {
    let m = md.conductor();
    let per_simple: Vec<u64> = (0..md.rank()).map(|i| m / m.gcd(&md.twist_exponent(i))).collect();
    let l = per_simple.iter().fold(1, |acc, &x| lcm(acc, x));
    TwistOrders { per_simple, lcm: l }
}

/// Orders of the Casimir values `zᵢ = θᵢ²`.
pub fn casimir_orders(md: &ModularData) -> Vec<u64> {
    twist_orders(md).per_simple.iter().map(|&n| n / n.gcd(&2)).collect()
}

fn name(md: &ModularData, i: usize) -> &str {
    &md.ring().names()[i]
}

/// `D⁵/n²` for an integer `n`; algebraic iff `n | D^{5/2}`.
pub fn vafa_quotient(md: &ModularData, n: u64) -> CycloNum {
    global_dimension_value(md)
        .pow(5)
        .scale(&BigRational::new(BigInt::one(), BigInt::from(n) * BigInt::from(n)))
}

/// Whether the twist order divides `D^{5/2}`, for the lcm and per simple.
pub fn vafa_divisibility(md: &ModularData) -> Vec<Check> {
    let orders = twist_orders(md);
    let mut out = Vec::new();
    let q = vafa_quotient(md, orders.lcm);
    out.push(Check::from_bool(
        "vafa: lcm twist order divides D^(5/2)",
        q.is_algebraic_integer(),
        format!("n = {}, D^5/n^2 = {q}", orders.lcm),
    ));
    for (i, &ni) in orders.per_simple.iter().enumerate() {
        let q = vafa_quotient(md, ni);
        out.push(Check::from_bool(
            format!("vafa: ord(θ[{}]) divides D^(5/2)", name(md, i)),
            q.is_algebraic_integer(),
            format!("n = {ni}, D^5/n^2 = {q}"),
        ));
    }
    out
}

/// Whether each categorical dimension divides `D^{1/2}`, via `D/d² ∈ 𝔸`.
pub fn dim_divisibility(md: &ModularData) -> Vec<Check> {
    let d = global_dimension_value(md);
    let u = md.ring().unit();
    (0..md.rank())
        .map(|i| {
            let label = format!("d({}) divides D^(1/2)", name(md, i));
            let di = &md.smat()[(u, i)];
            match d.checked_div(&(di * di)) {
                Ok(q) => Check::from_bool(label, q.is_algebraic_integer(), format!("D/d^2 = {q}")),
                Err(_) => Check::fail(label, "invalid data: d = 0"),
            }
        })
        .collect()
}

fn integral_dims(d: &DimensionFunction) -> Option<usize> {
    d.values.iter().position(|v| !v.is_algebraic_integer())
}

/// `θ_X^{d(X)·D_d²} = 1` and `z_X^{d(X)·D_d²} = 1` in the torsion model,
/// where `D_d = Σ d(Z)²` is the dimension of the regular element for `d`.
pub fn theta_power_identity(md: &ModularData, d: &DimensionFunction) -> Vec<Check> {
    let tag = d.kind.to_string();
    if let Some(bad) = integral_dims(d) {
        return vec![Check::unsupported(
            format!("theta power identity [{tag}]"),
            format!("d({}) = {} is not an algebraic integer", name(md, bad), d.values[bad]),
        )];
    }
    let dr = d.regular_dimension();
    let dr2 = &dr * &dr;
    let mut out = Vec::new();
    for i in 0..md.rank() {
        let power = &d.values[i] * &dr2;
        for (label, exp) in [("θ", md.twists()[i]), ("z", 2 * md.twists()[i])] {
            let check = format!("{label}[{}]^(d·D^2) = 1 [{tag}]", name(md, i));
            match TorsionDetValue::torsion_value(md.conductor(), exp, &power) {
                Ok(v) => out.push(Check::from_bool(check, v.is_identity(), v.to_string())),
                Err(e) => out.push(Check::unsupported(check, e.to_string())),
            }
        }
    }
    out
}

/// One eigenvalue `ζ_M^{exponent}` of β²_{XY}, on the `source`-isotypic part.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BraidingEigenvalue {
    pub exponent: u64,
    pub multiplicity: u32,
    pub source: usize,
}

pub fn braiding_spectrum(md: &ModularData, x: usize, y: usize) -> Vec<BraidingEigenvalue> {
    let m = md.conductor() as i64;
    let t = md.twists();
    md.ring()
        .product(x, y)
        .map(|(z, mult)| BraidingEigenvalue {
            exponent: (t[z] - t[x] - t[y]).rem_euclid(m) as u64,
            multiplicity: mult,
            source: z,
        })
        .collect()
}

/// β²_{XY} as a block-scalar automorphism of `X ⊗ Y`.
pub fn braiding_square(md: &ModularData, x: usize, y: usize) -> Result<BlockAutomorphism, TorDetError> {
    let parts: Vec<_> = braiding_spectrum(md, x, y)
        .into_iter()
        .map(|e| {
            (
                e.source,
                e.multiplicity as usize,
                CycloNum::zeta(md.conductor(), e.exponent as i64),
            )
        })
        .collect();
    BlockAutomorphism::block_scalar(&parts)
}

/// `det(β²_{XY})^{D_d} = 1` for every pair, in the torsion model.
pub fn det_beta_identity(md: &ModularData, d: &DimensionFunction) -> Vec<Check> {
    let tag = d.kind.to_string();
    if let Some(bad) = integral_dims(d) {
        return vec![Check::unsupported(
            format!("det(β²)^D = 1 [{tag}]"),
            format!("d({}) = {} is not an algebraic integer", name(md, bad), d.values[bad]),
        )];
    }
    let dr = d.regular_dimension();
    let mut out = Vec::new();
    for x in 0..md.rank() {
        for y in 0..md.rank() {
            let check = format!("det(β²[{},{}])^D = 1 [{tag}]", name(md, x), name(md, y));
            let v = braiding_square(md, x, y)
                .and_then(|b| det_automorphism(&b, d))
                .and_then(|v| v.power(&dr));
            match v {
                Ok(v) => out.push(Check::from_bool(check, v.is_identity(), v.to_string())),
                Err(e) => out.push(Check::unsupported(check, e.to_string())),
            }
        }
    }
    out
}

/// Smallest `N` with `(β²)^N = 1`: the lcm of the orders of all braiding
/// eigenvalues `θ_Z/(θ_Xθ_Y)` over admissible triples.
pub fn exponent(md: &ModularData) -> u64 {
    let m = md.conductor();
    let n = md.rank();
    let mut acc = 1;
    for x in 0..n {
        for y in 0..n {
            for e in braiding_spectrum(md, x, y) {
                acc = lcm(acc, m / m.gcd(&e.exponent));
            }
        }
    }
    acc
}

/// All braiding eigenvalues as exact field elements.
fn braiding_eigenvalues(md: &ModularData) -> Vec<CycloNum> {
    let n = md.rank();
    let mut exps: Vec<u64> = (0..n)
        .flat_map(|x| (0..n).flat_map(move |y| braiding_spectrum(md, x, y)))
        .map(|e| e.exponent)
        .collect();
    exps.sort_unstable();
    exps.dedup();
    exps.into_iter()
        .map(|e| CycloNum::zeta(md.conductor(), e as i64))
        .collect()
}

/// Exact check that every braiding eigenvalue raised to `e` is 1 and that no
/// proper divisor of `e` has this property.
pub fn exponent_minimality(md: &ModularData, e: u64) -> Check {
    let eigen = braiding_eigenvalues(md);
    let kills = |k: u64| eigen.iter().all(|v| v.pow(k).is_one());
    let label = "exponent: (β²)^N = 1 with N minimal";
    if !kills(e) {
        return Check::fail(label, format!("some braiding eigenvalue to the power {e} is not 1"));
    }
    if let Some(k) = (1..e).find(|k| e.is_multiple_of(*k) && kills(*k)) {
        return Check::fail(label, format!("proper divisor {k} of {e} already kills β²"));
    }
    Check::pass_with(label, format!("N = {e}"))
}

fn c_as_root(c: &BigRational, n: usize) -> CycloNum {
    // e^{πicN} = ζ_{2q}^{pN} for c = p/q
    let p = c.numer().to_i64().expect("small numerator");
    let q = c.denom().to_u64().expect("small denominator");
    CycloNum::zeta(2 * q, p * n as i64)
}

/// `det(T)^12 = e^{πicN}` as an equality of exact roots of unity.
#[allow(non_snake_case)]
pub fn detT_identity(md: &ModularData, c: &CentralCharge) -> Check {
    let sum: i64 = md.twists().iter().sum();
    let det_t = CycloNum::zeta(md.conductor(), sum);
    let lhs = det_t.pow(12);
    let rhs = c_as_root(&c.c_mod_8, md.rank());
    let show = |x: &CycloNum| match x.as_root_of_unity() {
        Some(r) => r.to_string(),
        None => x.to_string(),
    };
    Check::from_bool(
        "det(T)^12 = e^(πicN)",
        lhs == rhs,
        format!(
            "det(T) = {}, det(T)^12 = {}, e^(πicN) = {}",
            show(&det_t),
            show(&lhs),
            show(&rhs)
        ),
    )
}

/// `(cN/2)²·D⁵`; algebraic iff `cND^{5/2}/2` is.
pub fn charge_integrality_square(md: &ModularData, c: &BigRational) -> CycloNum {
    let half_cn = c * BigRational::new(BigInt::from(md.rank()), BigInt::from(2));
    global_dimension_value(md).pow(5).scale(&(&half_cn * &half_cn))
}

/// `cND^{5/2}/2` exactly, when the positive `√D` is known.
pub fn charge_integrality_value(md: &ModularData, c: &CentralCharge) -> Option<CycloNum> {
    let s = c.sqrt_dimension.as_ref()?;
    let half_cn = &c.c_mod_8 * BigRational::new(BigInt::from(md.rank()), BigInt::from(2));
    Some((&global_dimension_value(md).pow(2) * s).scale(&half_cn))
}

pub fn charge_integrality(md: &ModularData, c: &CentralCharge) -> Check {
    let sq = charge_integrality_square(md, &c.c_mod_8);
    let witness = match charge_integrality_value(md, c) {
        Some(v) => format!("c = {}, cND^(5/2)/2 = {v}, squared = {sq}", c.c_mod_8),
        None => format!("c = {}, (cND^(5/2)/2)^2 = {sq}", c.c_mod_8),
    };
    Check::from_bool(
        "cND^(5/2)/2 is an algebraic integer",
        sq.is_algebraic_integer(),
        witness,
    )
}

/// The exact Frobenius-Perron dimension function: the unique character
/// `i ↦ S̃[i][j]/S̃[0][j]` whose values are all positive reals.
pub fn fp_exact(md: &ModularData) -> Result<DimensionFunction, ModularError> {
    let n = md.rank();
    let u = md.ring().unit();
    let s = md.smat();
    for j in 0..n {
        let Ok(inv) = s[(u, j)].inverse() else { continue };
        let values: Vec<CycloNum> = (0..n).map(|i| &s[(i, j)] * &inv).collect();
        let positive = values.iter().all(|v| {
            let z = v.embed();
            z.re > 0.0 && z.im.abs() <= 1e-9 * (1.0 + z.re)
        });
        if !positive {
            continue;
        }
        let d = DimensionFunction::new(DimensionKind::FrobeniusPerron, values);
        if dimension_function_check(md.ring(), &d) {
            return Ok(d);
        }
    }
    Err(ModularError::NoPositiveColumn)
}

/// Agreement of [`fp_exact`] with the numerical Perron dimensions.
pub fn fp_exact_check(md: &ModularData, fp: &FPData, tolerance: f64) -> Check {
    let label = "exact FP dimensions match Perron iteration";
    match fp_exact(md) {
        Ok(d) => {
            let worst = d
                .values
                .iter()
                .zip(&fp.dims)
                .map(|(v, x)| (v.embed().re - x).abs())
                .fold(0.0, f64::max);
            Check::from_bool(label, worst <= tolerance, format!("max deviation {worst:e}"))
        }
        Err(e) => Check::fail(label, e.to_string()),
    }
}
