//! Assembles the individual verifications into reports.

use std::str::FromStr;

use num_traits::ToPrimitive;

use crate::fusion_ring::{
    fp_dims, is_transitive, regular_check, verify_axioms, DimensionFunction, FPData, FusionRing, PerronOptions,
};
use crate::io::Input;
use crate::modular::{
    braiding_spectrum, casimir_orders, central_charge_with, charge_integrality, detT_identity, det_beta_identity,
    dim_divisibility, exponent, exponent_minimality, fp_exact, fp_exact_check, gauss_sums, global_dimension,
    theta_power_identity, twist_orders, vafa_divisibility, verify_modular, CentralCharge, ChargeOptions,
    GlobalDimension, ModularData, ModularError, ModularViolation, TwistOrders,
};
use crate::report::{Check, Report};

/// Which dimension functions feed the determinant identities.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DimSelection {
    Categorical,
    FrobeniusPerron,
    #[default]
    Both,
}

impl DimSelection {
    fn categorical(self) -> bool {
        matches!(self, DimSelection::Categorical | DimSelection::Both)
    }

    fn frobenius_perron(self) -> bool {
        matches!(self, DimSelection::FrobeniusPerron | DimSelection::Both)
    }
}

impl FromStr for DimSelection {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "categorical" => Ok(DimSelection::Categorical),
            "fp" | "frobenius-perron" => Ok(DimSelection::FrobeniusPerron),
            "both" => Ok(DimSelection::Both),
            other => Err(format!("unknown dimension function `{other}` (categorical, fp, both)")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BatteryOptions {
    /// Tolerance for the floating-point checks (Perron iteration and its comparisons).
    pub tolerance: f64,
    pub dimensions: DimSelection,
    pub charge: ChargeOptions,
}

impl Default for BatteryOptions {
    fn default() -> Self {
        Self {
            tolerance: 1e-10,
            dimensions: DimSelection::Both,
            charge: ChargeOptions::default(),
        }
    }
}

impl BatteryOptions {
    fn perron(&self) -> PerronOptions {
        PerronOptions {
            tolerance: self.tolerance,
            ..PerronOptions::default()
        }
    }
}

/// Ring-level checks; returns the numerical FP data when it could be computed.
pub fn ring_checks(ring: &FusionRing, opts: &BatteryOptions) -> (Vec<Check>, Option<FPData>) {
    let mut out = Vec::new();
    let violations = verify_axioms(ring);
    if !violations.is_empty() {
        let witness: Vec<String> = violations.iter().map(ToString::to_string).collect();
        out.push(Check::fail("fusion ring axioms", witness.join("\n")));
        return (out, None);
    }
    out.push(Check::pass("fusion ring axioms"));
    match is_transitive(ring) {
        Ok(true) => out.push(Check::pass("fusion ring is transitive")),
        _ => {
            out.push(Check::fail(
                "fusion ring is transitive",
                "some basis element is unreachable",
            ));
            return (out, None);
        }
    }
    match fp_dims(ring, &opts.perron()) {
        Ok(fp) => {
            out.push(Check::pass_with(
                "FP dimensions form a ring homomorphism",
                format!("residual {:e}", fp.residual),
            ));
            out.push(Check::from_bool(
                "regular element: x·R = d₊(x)·R",
                regular_check(ring, &fp, opts.tolerance.max(1e-9)),
                format!("regular element {:?}", fp.regular),
            ));
            (out, Some(fp))
        }
        Err(e) => {
            out.push(Check::fail("FP dimensions form a ring homomorphism", e.to_string()));
            (out, None)
        }
    }
}

fn violation_checks(violations: &[ModularViolation]) -> Vec<Check> {
    type Pred = fn(&ModularViolation) -> bool;
    let groups: [(&str, Pred); 8] = [
        ("modular: unit twist is 1", |v| {
            matches!(v, ModularViolation::UnitTwist { .. })
        }),
        ("modular: S̃[0][0] = 1", |v| {
            matches!(v, ModularViolation::UnitEntry { .. })
        }),
        ("modular: S̃ is symmetric", |v| {
            matches!(v, ModularViolation::Asymmetric { .. })
        }),
        ("modular: data is nondegenerate", |v| {
            matches!(v, ModularViolation::Degenerate(_) | ModularViolation::NoDual { .. })
        }),
        ("modular: S̃² = D·C", |v| {
            matches!(v, ModularViolation::SquareRelation { .. })
        }),
        ("modular: (S̃T)³ = p⁺·S̃²", |v| {
            matches!(v, ModularViolation::CubeRelation { .. })
        }),
        ("modular: Verlinde formula reproduces the fusion rules", |v| {
            matches!(v, ModularViolation::Verlinde { .. })
        }),
        ("modular: Frobenius-Schur indicators", |v| {
            matches!(v, ModularViolation::FrobeniusSchur { .. })
        }),
    ];
    groups
        .iter()
        .map(|(name, pred)| {
            let hits: Vec<String> = violations.iter().filter(|v| pred(v)).map(ToString::to_string).collect();
            if hits.is_empty() {
                Check::pass(*name)
            } else {
                Check::fail(*name, hits.join("\n"))
            }
        })
        .collect()
}

/// Everything the divisibility theorems and their corollaries assert.
#[derive(Debug, Clone, PartialEq)]
pub struct VafaReport {
    pub twist_orders: TwistOrders,
    pub global_dimension: GlobalDimension,
    pub central_charge: Result<CentralCharge, ModularError>,
    pub exponent: u64,
    pub casimir_orders: Vec<u64>,
    pub checks: Vec<Check>,
}

fn dimension_functions(md: &ModularData, sel: DimSelection) -> Vec<Result<DimensionFunction, String>> {
    let mut out = Vec::new();
    if sel.categorical() {
        out.push(Ok(md.categorical_dims()));
    }
    if sel.frobenius_perron() {
        out.push(fp_exact(md).map_err(|e| e.to_string()));
    }
    out
}

pub fn vafa_report(md: &ModularData, opts: &BatteryOptions) -> VafaReport {
    let orders = twist_orders(md);
    let gd = global_dimension(md);
    let mut checks = vec![Check::from_bool(
        "D is a totally positive algebraic integer",
        gd.algebraic_integer && gd.totally_positive,
        format!(
            "D = {} ≈ {}, integral: {}, totally positive: {}",
            gd.value, gd.numeric, gd.algebraic_integer, gd.totally_positive
        ),
    )];
    checks.extend(vafa_divisibility(md));
    checks.extend(dim_divisibility(md));
    for d in dimension_functions(md, opts.dimensions) {
        match d {
            Ok(d) => {
                checks.extend(theta_power_identity(md, &d));
                checks.extend(det_beta_identity(md, &d));
            }
            Err(e) => checks.push(Check::unsupported("determinant identities [frobenius-perron]", e)),
        }
    }
    let c = central_charge_with(md, &opts.charge);
    match &c {
        Ok(c) => {
            checks.push(detT_identity(md, c));
            checks.push(charge_integrality(md, c));
        }
        Err(e) => {
            checks.push(Check::fail("det(T)^12 = e^(πicN)", e.to_string()));
            checks.push(Check::fail("cND^(5/2)/2 is an algebraic integer", e.to_string()));
        }
    }
    let e = exponent(md);
    checks.push(exponent_minimality(md, e));
    let casimir = casimir_orders(md);
    VafaReport {
        twist_orders: orders,
        global_dimension: gd,
        central_charge: c,
        exponent: e,
        casimir_orders: casimir,
        checks,
    }
}

fn charge_info(report: &mut Report, c: &Result<CentralCharge, ModularError>) {
    match c {
        Ok(c) => {
            report.info("c mod 8", c.c_mod_8.to_string());
            report.info("c numeric", c.c_mod_8.to_f64().unwrap_or(f64::NAN));
            report.info("c method", c.method.to_string());
            report.info("c convention", "positive square root of D");
        }
        Err(e) => report.info("c mod 8", format!("unavailable: {e}")),
    }
}

/// Modular checks shared by `check` and `report`.
fn modular_checks(md: &ModularData, fp: Option<&FPData>, opts: &BatteryOptions) -> (Vec<Check>, VafaReport) {
    let violations: Vec<ModularViolation> = verify_modular(md)
        .into_iter()
        .filter(|v| !matches!(v, ModularViolation::RingAxioms(_)))
        .collect();
    let mut checks = violation_checks(&violations);
    match gauss_sums(md) {
        Ok(g) => checks.push(Check::from_bool(
            "p⁺·p⁻ = D",
            g.product_is_dimension,
            format!("p⁺ = {}, p⁻ = {}", g.plus, g.minus),
        )),
        Err(e) => checks.push(Check::fail("p⁺·p⁻ = D", e.to_string())),
    }
    if let Some(fp) = fp {
        checks.push(fp_exact_check(md, fp, 1e-8));
    }
    let vafa = vafa_report(md, opts);
    checks.extend(vafa.checks.iter().cloned());
    (checks, vafa)
}

/// `check`: every ring and modular verification.
pub fn check_report(input: &Input, opts: &BatteryOptions) -> Report {
    let mut report = Report::new(input.name());
    let (rc, fp) = ring_checks(input.ring(), opts);
    report.info("simples", input.ring().rank());
    report.extend(rc);
    if let Input::Modular(md) = input {
        report.info("conductor", md.conductor());
        let (mc, vafa) = modular_checks(md, fp.as_ref(), opts);
        charge_info(&mut report, &vafa.central_charge);
        report.extend(mc);
    }
    report
}

/// `fpdim`: numerical FP data plus the exact identification when available.
pub fn fpdim_report(input: &Input, opts: &BatteryOptions) -> Report {
    let mut report = Report::new(input.name());
    let (rc, fp) = ring_checks(input.ring(), opts);
    report.extend(rc);
    if let Some(fp) = &fp {
        let names = input.ring().names();
        for (name, d) in names.iter().zip(&fp.dims) {
            report.info(format!("d+({name})"), d);
        }
        report.info("regular element", &fp.regular);
        report.info("FPdim", fp.fp_dim_category);
        report.info("semisimple normalization", fp.semisimple_normalization);
        if let Input::Modular(md) = input {
            if let Ok(d) = fp_exact(md) {
                for (name, v) in names.iter().zip(&d.values) {
                    report.info(format!("d+({name}) exact"), v.to_string());
                }
            }
            report.push(fp_exact_check(md, fp, 1e-8));
        }
    }
    report
}

/// `vafa`: twist orders against the global dimension.
pub fn vafa_verb_report(md: &ModularData, opts: &BatteryOptions) -> Report {
    let mut report = Report::new(md.name());
    let v = vafa_report(md, opts);
    report.info("n", v.twist_orders.lcm);
    report.info("twist orders", &v.twist_orders.per_simple);
    report.info("D", v.global_dimension.value.to_string());
    report.info("D numeric", v.global_dimension.numeric);
    charge_info(&mut report, &v.central_charge);
    report.extend(v.checks);
    report
}

/// `exponent`: braiding spectrum, exponent and Casimir orders.
pub fn exponent_report(md: &ModularData) -> Report {
    let mut report = Report::new(md.name());
    let e = exponent(md);
    report.info("exponent", e);
    report.info("casimir orders", casimir_orders(md));
    let names = md.ring().names();
    for x in 0..md.rank() {
        for y in x..md.rank() {
            let spec: Vec<String> = braiding_spectrum(md, x, y)
                .iter()
                .map(|b| {
                    format!(
                        "ζ{}^{} x{} on {}",
                        md.conductor(),
                        b.exponent,
                        b.multiplicity,
                        names[b.source]
                    )
                })
                .collect();
            report.info(format!("β²({},{})", names[x], names[y]), spec.join(", "));
        }
    }
    report.push(exponent_minimality(md, e));
    report
}

/// `report`: all checks and all computed invariants.
pub fn full_report(input: &Input, opts: &BatteryOptions) -> Report {
    let mut report = check_report(input, opts);
    if let Input::Modular(md) = input {
        let v = vafa_report(md, opts);
        report.info("D", v.global_dimension.value.to_string());
        report.info("D numeric", v.global_dimension.numeric);
        report.info("twist orders", &v.twist_orders.per_simple);
        report.info("n", v.twist_orders.lcm);
        report.info("exponent", v.exponent);
        report.info("casimir orders", &v.casimir_orders);
        if let Ok(d) = fp_exact(md) {
            let dims: Vec<String> = d.values.iter().map(ToString::to_string).collect();
            report.info("FP dimensions", dims);
        }
    }
    report
}
