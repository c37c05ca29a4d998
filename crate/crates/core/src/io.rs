//! JSON files for fusion rings and modular data.
//!
//! Parsing is strict: unknown fields, out-of-range indices and repeated
//! fusion triples are rejected. Serialization is hand-laid-out so that
//! parse → serialize reproduces generated files byte for byte.

use std::collections::HashSet;

use serde::Deserialize;
use thiserror::Error;

use crate::cyclotomic::CycloNum;
use crate::fusion_ring::{FusionError, FusionRing};
use crate::linalg::Matrix;
use crate::modular::{ModularData, ModularError};

#[derive(Debug, Error)]
pub enum IoError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("field `{field}`: {message}")]
    Field { field: String, message: String },
}

fn field_err(field: impl Into<String>, message: impl Into<String>) -> IoError {
    IoError::Field {
        field: field.into(),
        message: message.into(),
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RingFile {
    #[serde(default)]
    name: Option<String>,
    simples: Vec<String>,
    unit: usize,
    fusion: Vec<[u64; 4]>,
    #[serde(default)]
    dual: Option<Vec<usize>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ModularFile {
    name: String,
    conductor: u64,
    simples: Vec<String>,
    unit: usize,
    fusion: Vec<[u64; 4]>,
    #[serde(default)]
    dual: Option<Vec<usize>>,
    twists: Vec<i64>,
    smat: Vec<Vec<CycloNum>>,
}

/// Contents of an input file: a bare fusion ring or full modular data.
#[derive(Debug, Clone, PartialEq)]
pub enum Input {
    Ring { name: String, ring: FusionRing },
    Modular(ModularData),
}

impl Input {
    pub fn ring(&self) -> &FusionRing {
        match self {
            Input::Ring { ring, .. } => ring,
            Input::Modular(md) => md.ring(),
        }
    }

    pub fn name(&self) -> &str {
        match self {
            Input::Ring { name, .. } => name,
            Input::Modular(md) => md.name(),
        }
    }
}

fn build_ring(
    simples: Vec<String>,
    unit: usize,
    fusion: &[[u64; 4]],
    dual: Option<Vec<usize>>,
) -> Result<FusionRing, IoError> {
    let n = simples.len();
    if n == 0 {
        return Err(field_err("simples", "at least one simple is required"));
    }
    if unit >= n {
        return Err(field_err("unit", format!("index {unit} out of range for {n} simples")));
    }
    let mut seen = HashSet::new();
    let mut tensor = vec![0u32; n * n * n];
    for (i, &[a, b, c, m]) in fusion.iter().enumerate() {
        let field = format!("fusion[{i}]");
        for x in [a, b, c] {
            if x as usize >= n {
                return Err(field_err(&field, format!("index {x} out of range for {n} simples")));
            }
        }
        if !seen.insert((a, b, c)) {
            return Err(field_err(&field, format!("triple ({a}, {b}, {c}) repeated")));
        }
        let m = u32::try_from(m).map_err(|_| field_err(&field, format!("multiplicity {m} too large")))?;
        tensor[((a as usize) * n + b as usize) * n + c as usize] = m;
    }
    FusionRing::new(simples, unit, tensor, dual).map_err(|e| match e {
        FusionError::DualLength { .. } | FusionError::DualOutOfRange { .. } => field_err("dual", e.to_string()),
        other => field_err("fusion", other.to_string()),
    })
}

pub fn parse_ring(text: &str) -> Result<(String, FusionRing), IoError> {
    let f: RingFile = serde_json::from_str(text)?;
    let ring = build_ring(f.simples, f.unit, &f.fusion, f.dual)?;
    Ok((f.name.unwrap_or_default(), ring))
}

pub fn parse_modular(text: &str) -> Result<ModularData, IoError> {
    let f: ModularFile = serde_json::from_str(text)?;
    if f.conductor == 0 {
        return Err(field_err("conductor", "must be positive"));
    }
    let n = f.simples.len();
    let ring = build_ring(f.simples, f.unit, &f.fusion, f.dual)?;
    if f.twists.len() != n {
        return Err(field_err(
            "twists",
            format!("{} entries for {n} simples", f.twists.len()),
        ));
    }
    if f.smat.len() != n {
        return Err(field_err("smat", format!("{} rows for {n} simples", f.smat.len())));
    }
    if let Some(i) = f.smat.iter().position(|r| r.len() != n) {
        return Err(field_err(
            format!("smat[{i}]"),
            format!("{} entries for {n} simples", f.smat[i].len()),
        ));
    }
    let smat = Matrix::from_rows(f.smat);
    ModularData::new(f.name, f.conductor, ring, f.twists, smat).map_err(|e| match e {
        ModularError::Shape(m) => field_err("smat", m),
        other => field_err("smat", other.to_string()),
    })
}

/// Parses either file kind; presence of `twists` selects modular data.
pub fn parse_input(text: &str) -> Result<Input, IoError> {
    let value: serde_json::Value = serde_json::from_str(text)?;
    if value.get("twists").is_some() || value.get("smat").is_some() {
        parse_modular(text).map(Input::Modular)
    } else {
        let (name, ring) = parse_ring(text)?;
        Ok(Input::Ring { name, ring })
    }
}

fn json<T: serde::Serialize + ?Sized>(v: &T) -> String {
    serde_json::to_string(v).expect("plain data serializes")
}

fn ring_section(out: &mut String, ring: &FusionRing) {
    out.push_str(&format!("  \"simples\": {},\n", json(ring.names())));
    out.push_str(&format!("  \"unit\": {},\n", ring.unit()));
    let rows: Vec<String> = ring.sparse().iter().map(|q| format!("    {}", json(q))).collect();
    if rows.is_empty() {
        out.push_str("  \"fusion\": [],\n");
    } else {
        out.push_str(&format!("  \"fusion\": [\n{}\n  ],\n", rows.join(",\n")));
    }
    if let Some(d) = ring.dual_table() {
        out.push_str(&format!("  \"dual\": {},\n", json(d)));
    }
}

pub fn ring_to_json(name: &str, ring: &FusionRing) -> String {
    let mut out = String::from("{\n");
    out.push_str(&format!("  \"name\": {},\n", json(name)));
    ring_section(&mut out, ring);
    // drop the trailing comma of the last section
    out.truncate(out.len() - 2);
    out.push_str("\n}\n");
    out
}

/// Deterministic layout: one fusion quadruple and one s-matrix row per line.
pub fn modular_to_json(md: &ModularData) -> String {
    let mut out = String::from("{\n");
    out.push_str(&format!("  \"name\": {},\n", json(md.name())));
    out.push_str(&format!("  \"conductor\": {},\n", md.conductor()));
    ring_section(&mut out, md.ring());
    out.push_str(&format!("  \"twists\": {},\n", json(md.twists())));
    let rows: Vec<String> = md.smat().to_rows().iter().map(|r| format!("    {}", json(r))).collect();
    out.push_str(&format!("  \"smat\": [\n{}\n  ]\n}}\n", rows.join(",\n")));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{generate, CatalogFamily};

    #[test]
    fn round_trip_is_byte_identical() {
        for f in CatalogFamily::standard() {
            let md = generate(&f).unwrap();
            let text = modular_to_json(&md);
            let back = parse_modular(&text).unwrap();
            assert_eq!(back, md);
            assert_eq!(modular_to_json(&back), text);
        }
    }

    #[test]
    fn ring_round_trip() {
        let md = generate(&CatalogFamily::Ising).unwrap();
        let text = ring_to_json("ising", md.ring());
        let (name, ring) = parse_ring(&text).unwrap();
        assert_eq!((name.as_str(), &ring), ("ising", md.ring()));
        assert!(matches!(parse_input(&text).unwrap(), Input::Ring { .. }));
        assert_eq!(ring_to_json(&name, &ring), text);
    }

    fn semion_text() -> String {
        modular_to_json(&generate(&CatalogFamily::Semion).unwrap())
    }

    fn err_field(text: &str) -> String {
        match parse_input(text).unwrap_err() {
            IoError::Field { field, .. } => field,
            IoError::Json(e) => format!("json: {e}"),
        }
    }

    #[test]
    fn rejects_unknown_field() {
        let text = semion_text().replacen("\"name\"", "\"extra\": 1,\n  \"name\"", 1);
        let e = err_field(&text);
        assert!(e.contains("unknown field `extra`"), "{e}");
    }

    #[test]
    fn rejects_bad_indices_and_repeats() {
        let text = semion_text().replace("[1, 1, 0, 1]", "[1, 1, 5, 1]");
        let text = text.replace("[1,1,0,1]", "[1,1,5,1]");
        assert!(err_field(&text).starts_with("fusion["));
        let dup = semion_text().replacen("[0,0,0,1]", "[0,0,0,1],\n    [0,0,0,1]", 1);
        assert!(err_field(&dup).starts_with("fusion["));
        let unit = semion_text().replace("\"unit\": 0", "\"unit\": 7");
        assert_eq!(err_field(&unit), "unit");
    }

    #[test]
    fn rejects_shape_errors() {
        let text = semion_text().replace("\"twists\": [0,1]", "\"twists\": [0]");
        assert_eq!(err_field(&text), "twists");
        let md = generate(&CatalogFamily::Semion).unwrap();
        let bad = modular_to_json(&md).replace("\"coeffs\":[\"1\",\"0\"]", "\"coeffs\":[\"1\"]");
        assert!(err_field(&bad).starts_with("json"));
    }
}
