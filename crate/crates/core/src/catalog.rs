//! Exact generators for standard modular data.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_rational::BigRational;
use thiserror::Error;

use crate::cyclotomic::CycloNum;
use crate::fusion_ring::FusionRing;
use crate::linalg::Matrix;
use crate::modular::ModularData;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("invalid catalog parameter: {0}")]
    InvalidParameter(String),
    #[error("degenerate quadratic form on Z{order} with exponent {form}: {reason}")]
    DegenerateForm { order: u64, form: i64, reason: String },
    #[error("unknown catalog family `{0}`")]
    UnknownFamily(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CatalogFamily {
    Trivial,
    Semion,
    /// `θ_τ = ζ₅^twist`, twist 2 or 3.
    Fibonacci {
        twist: i64,
    },
    Ising,
    ToricCode,
    Su2 {
        level: u32,
    },
    /// ℤ_n with `θ_a = ζ_{2n}^{form·a²}`.
    Pointed {
        order: u64,
        form: i64,
    },
}

impl CatalogFamily {
    /// ℤ_n with the default form: exponent 2 for odd `n`, 1 for even `n`.
    pub fn pointed(order: u64) -> Self {
        let form = if order % 2 == 1 { 2 } else { 1 };
        CatalogFamily::Pointed { order, form }
    }

    pub fn fibonacci() -> Self {
        CatalogFamily::Fibonacci { twist: 2 }
    }

    /// Every family used by the built-in batteries.
    pub fn standard() -> Vec<Self> {
        let mut out = vec![
            CatalogFamily::Trivial,
            CatalogFamily::Semion,
            CatalogFamily::fibonacci(),
            CatalogFamily::Ising,
            CatalogFamily::ToricCode,
        ];
        out.extend((1..=6).map(|level| CatalogFamily::Su2 { level }));
        out.push(CatalogFamily::pointed(3));
        out.push(CatalogFamily::pointed(4));
        out
    }
}

impl fmt::Display for CatalogFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CatalogFamily::Trivial => write!(f, "trivial"),
            CatalogFamily::Semion => write!(f, "semion"),
            CatalogFamily::Fibonacci { twist } => write!(f, "fibonacci:{twist}"),
            CatalogFamily::Ising => write!(f, "ising"),
            CatalogFamily::ToricCode => write!(f, "toric_code"),
            CatalogFamily::Su2 { level } => write!(f, "su2:{level}"),
            CatalogFamily::Pointed { order, form } => write!(f, "pointed:{order}:{form}"),
        }
    }
}

fn parse_param<T: FromStr>(family: &str, what: &str, s: &str) -> Result<T, CatalogError> {
    s.parse()
        .map_err(|_| CatalogError::InvalidParameter(format!("{family}: {what} `{s}` is not an integer")))
}

/// Accepts `trivial`, `semion`, `fibonacci[:twist]`, `ising`, `toric_code`,
/// `su2:k` and `pointed:n[:form]`.
impl FromStr for CatalogFamily {
    type Err = CatalogError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.trim().split(':').collect();
        let family = parts[0].to_ascii_lowercase().replace('-', "_");
        let arity = |max: usize| {
            if parts.len() > max + 1 {
                Err(CatalogError::InvalidParameter(format!(
                    "{family}: too many parameters in `{s}`"
                )))
            } else {
                Ok(())
            }
        };
        match family.as_str() {
            "trivial" => arity(0).map(|_| CatalogFamily::Trivial),
            "semion" => arity(0).map(|_| CatalogFamily::Semion),
            "ising" => arity(0).map(|_| CatalogFamily::Ising),
            "toric_code" | "toric" => arity(0).map(|_| CatalogFamily::ToricCode),
            "fibonacci" => {
                arity(1)?;
                let twist = match parts.get(1) {
                    Some(t) => parse_param(&family, "twist", t)?,
                    None => 2,
                };
                Ok(CatalogFamily::Fibonacci { twist })
            }
            "su2" | "su2_level_k" => {
                arity(1)?;
                let level = parts
                    .get(1)
                    .ok_or_else(|| CatalogError::InvalidParameter("su2 needs a level, e.g. su2:3".into()))?;
                Ok(CatalogFamily::Su2 {
                    level: parse_param(&family, "level", level)?,
                })
            }
            "pointed" | "pointed_zn" => {
                arity(2)?;
                let order = parts
                    .get(1)
                    .ok_or_else(|| CatalogError::InvalidParameter("pointed needs an order, e.g. pointed:3".into()))?;
                let order: u64 = parse_param(&family, "order", order)?;
                match parts.get(2) {
                    Some(k) => Ok(CatalogFamily::Pointed {
                        order,
                        form: parse_param(&family, "form", k)?,
                    }),
                    None => Ok(CatalogFamily::pointed(order)),
                }
            }
            _ => Err(CatalogError::UnknownFamily(parts[0].to_string())),
        }
    }
}

/// Known invariants of a catalog entry.
#[derive(Debug, Clone, PartialEq)]
pub struct Expected {
    pub dimension: f64,
    pub c_mod_8: BigRational,
    pub twist_orders: Option<Vec<u64>>,
    pub exponent: Option<u64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CatalogEntry {
    pub family: CatalogFamily,
    pub expected: Option<Expected>,
}

impl CatalogEntry {
    pub fn new(family: CatalogFamily) -> Self {
        Self {
            family,
            expected: expected(&family),
        }
    }

    pub fn generate(&self) -> Result<ModularData, CatalogError> {
        generate(&self.family)
    }
}

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn expected(family: &CatalogFamily) -> Option<Expected> {
    let golden = (5.0 + 5f64.sqrt()) / 2.0;
    Some(match *family {
        CatalogFamily::Trivial => Expected {
            dimension: 1.0,
            c_mod_8: q(0, 1),
            twist_orders: Some(vec![1]),
            exponent: Some(1),
        },
        CatalogFamily::Semion => Expected {
            dimension: 2.0,
            c_mod_8: q(1, 1),
            twist_orders: Some(vec![1, 4]),
            exponent: Some(2),
        },
        CatalogFamily::Fibonacci { twist: 2 } => Expected {
            dimension: golden,
            c_mod_8: q(14, 5),
            twist_orders: Some(vec![1, 5]),
            exponent: Some(5),
        },
        CatalogFamily::Fibonacci { twist: 3 } => Expected {
            dimension: golden,
            c_mod_8: q(26, 5),
            twist_orders: Some(vec![1, 5]),
            exponent: Some(5),
        },
        CatalogFamily::Ising => Expected {
            dimension: 4.0,
            c_mod_8: q(1, 2),
            twist_orders: Some(vec![1, 16, 2]),
            exponent: Some(8),
        },
        CatalogFamily::ToricCode => Expected {
            dimension: 4.0,
            c_mod_8: q(0, 1),
            twist_orders: Some(vec![1, 1, 1, 2]),
            exponent: Some(2),
        },
        CatalogFamily::Su2 { level } => {
            let k = f64::from(level);
            let s = (std::f64::consts::PI / (k + 2.0)).sin();
            let c = q(3 * i64::from(level), i64::from(level) + 2);
            Expected {
                dimension: (k + 2.0) / (2.0 * s * s),
                c_mod_8: c,
                twist_orders: None,
                exponent: None,
            }
        }
        CatalogFamily::Pointed { order: 3, form: 2 } => Expected {
            dimension: 3.0,
            c_mod_8: q(2, 1),
            twist_orders: Some(vec![1, 3, 3]),
            exponent: Some(3),
        },
        CatalogFamily::Pointed { order: 4, form: 1 } => Expected {
            dimension: 4.0,
            c_mod_8: q(1, 1),
            twist_orders: Some(vec![1, 8, 2, 8]),
            exponent: Some(4),
        },
        _ => return None,
    })
}

fn names(list: &[&str]) -> Vec<String> {
    list.iter().map(|s| s.to_string()).collect()
}

/// Unnormalized s-matrix from twists and dimensions:
/// `S̃[a][b] = θ_a⁻¹ θ_b⁻¹ Σ_c N[a*][b][c] θ_c d_c`.
pub fn smat_from_twists(ring: &FusionRing, conductor: u64, twists: &[i64], dims: &[CycloNum]) -> Matrix<CycloNum> {
    let n = ring.rank();
    let theta = |i: usize, sign: i64| CycloNum::zeta(conductor, sign * twists[i]);
    Matrix::from_fn(n, n, |a, b| {
        let ad = ring.dual(a).expect("catalog rings carry duals");
        let sum: CycloNum = ring
            .product(ad, b)
            .map(|(c, m)| (&theta(c, 1) * &dims[c]).scale(&q(i64::from(m), 1)))
            .fold(CycloNum::zero(conductor), |acc, x| &acc + &x);
        &(&sum * &theta(a, -1)) * &theta(b, -1)
    })
}

/// Exact modular data for a catalog family.
pub fn generate(family: &CatalogFamily) -> Result<ModularData, CatalogError> {
    let one = |m: u64| CycloNum::one(m);
    let (name, conductor, ring, twists, dims) = match *family {
        CatalogFamily::Trivial => {
            let ring = FusionRing::from_rule(names(&["1"]), 0, Some(vec![0]), |_, _| vec![(0, 1)]).expect("shape");
            ("trivial".to_string(), 1, ring, vec![0], vec![one(1)])
        }
        CatalogFamily::Semion => {
            let ring = renamed(FusionRing::cyclic_group(2), &["1", "s"]);
            ("semion".to_string(), 4, ring, vec![0, 1], vec![one(4), one(4)])
        }
        CatalogFamily::Fibonacci { twist } => {
            if twist != 2 && twist != 3 {
                return Err(CatalogError::InvalidParameter(format!(
                    "fibonacci twist exponent must be 2 or 3, got {twist}"
                )));
            }
            let ring = FusionRing::from_rule(names(&["1", "tau"]), 0, Some(vec![0, 1]), |a, b| match (a, b) {
                (1, 1) => vec![(0, 1), (1, 1)],
                _ => vec![(a + b, 1)],
            })
            .expect("shape");
            let phi = CycloNum::from_int_terms(5, &[(2, -1), (3, -1)]);
            (
                format!("fibonacci ({twist})"),
                5,
                ring,
                vec![0, twist],
                vec![one(5), phi],
            )
        }
        CatalogFamily::Ising => {
            let ring = FusionRing::from_rule(names(&["1", "sigma", "psi"]), 0, Some(vec![0, 1, 2]), |a, b| {
                match (a, b) {
                    (0, x) | (x, 0) => vec![(x, 1)],
                    (1, 1) => vec![(0, 1), (2, 1)],
                    (1, 2) | (2, 1) => vec![(1, 1)],
                    _ => vec![(0, 1)],
                }
            })
            .expect("shape");
            let sqrt2 = CycloNum::from_int_terms(16, &[(2, 1), (14, 1)]);
            (
                "ising".to_string(),
                16,
                ring,
                vec![0, 1, 8],
                vec![one(16), sqrt2, one(16)],
            )
        }
        CatalogFamily::ToricCode => {
            let ring = FusionRing::from_rule(names(&["1", "e", "m", "f"]), 0, Some(vec![0, 1, 2, 3]), |a, b| {
                vec![(a ^ b, 1)]
            })
            .expect("shape");
            ("toric_code".to_string(), 2, ring, vec![0, 0, 0, 1], vec![one(2); 4])
        }
        CatalogFamily::Su2 { level } => return su2(level),
        CatalogFamily::Pointed { order, form } => return pointed(order, form),
    };
    let smat = smat_from_twists(&ring, conductor, &twists, &dims);
    Ok(ModularData::new(name, conductor, ring, twists, smat).expect("consistent shapes"))
}

fn renamed(ring: FusionRing, list: &[&str]) -> FusionRing {
    FusionRing::new(
        names(list),
        ring.unit(),
        ring.tensor().to_vec(),
        ring.dual_table().map(<[usize]>::to_vec),
    )
    .expect("same shape")
}

/// `[n]_q = (q^n − q^{−n})/(q − q^{−1}) = Σ_{j<n} q^{n−1−2j}` with
/// `q = ζ_{2(k+2)} = ζ_M²`.
fn quantum_integer(conductor: u64, n: i64) -> CycloNum {
    (0..n)
        .map(|j| CycloNum::zeta(conductor, 2 * (n - 1 - 2 * j)))
        .fold(CycloNum::zero(conductor), |acc, x| &acc + &x)
}

fn su2(level: u32) -> Result<ModularData, CatalogError> {
    if level == 0 {
        return Err(CatalogError::InvalidParameter("su2 level must be at least 1".into()));
    }
    let k = level as usize;
    let n = k + 1;
    let conductor = 4 * (k as u64 + 2);
    let names = (0..n).map(|a| a.to_string()).collect();
    let ring = FusionRing::from_rule(names, 0, Some((0..n).collect()), |a, b| {
        let hi = (a + b).min(2 * k - a - b);
        (a.abs_diff(b)..=hi)
            .filter(|c| (a + b + c) % 2 == 0)
            .map(|c| (c, 1))
            .collect()
    })
    .expect("shape");
    let twists = (0..n as i64).map(|a| a * (a + 2)).collect();
    let smat = Matrix::from_fn(n, n, |a, b| quantum_integer(conductor, ((a + 1) * (b + 1)) as i64));
    Ok(ModularData::new(format!("su2 level {level}"), conductor, ring, twists, smat).expect("consistent shapes"))
}

fn pointed(order: u64, form: i64) -> Result<ModularData, CatalogError> {
    if order == 0 {
        return Err(CatalogError::InvalidParameter(
            "pointed order must be at least 1".into(),
        ));
    }
    let n = order as i64;
    if (form * n) % 2 != 0 {
        return Err(CatalogError::DegenerateForm {
            order,
            form,
            reason: "a ↦ ζ_(2n)^(k·a²) is only well defined on Z_n when k·n is even".into(),
        });
    }
    if form.gcd(&n) != 1 {
        return Err(CatalogError::DegenerateForm {
            order,
            form,
            reason: format!(
                "gcd(k, n) = {} makes the associated bilinear form degenerate",
                form.gcd(&n)
            ),
        });
    }
    let conductor = 2 * order;
    let ring = FusionRing::cyclic_group(order as usize);
    let twists: Vec<i64> = (0..n).map(|a| (form * a * a).rem_euclid(2 * n)).collect();
    let dims = vec![CycloNum::one(conductor); order as usize];
    let smat = smat_from_twists(&ring, conductor, &twists, &dims);
    debug_assert!(!smat[(0, 0)].is_zero());
    Ok(
        ModularData::new(format!("pointed Z{order} (form {form})"), conductor, ring, twists, smat)
            .expect("consistent shapes"),
    )
}
