//! JSON and CSV file formats.
//!
//! - complex: `{"facets": [["a","b","c"], ...]}`, written canonically (sorted within and across
//!   facets);
//! - cochain: `{"dim": i, "faces": [["a","b"], ...]}`;
//! - generators: `{"degree": m, "generators": [[image list], ...]}`;
//! - points: see [`PointConfig`].

use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::Value as Json;

use crate::cochain::{Cochain, ExpansionReport};
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::generators::Permutation;
pub use crate::overlap::PointConfig;
use crate::report::Value;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexFile {
    pub facets: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CochainFile {
    pub dim: isize,
    pub faces: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorFile {
    pub degree: usize,
    pub generators: Vec<Permutation>,
}

pub fn read_text(path: impl AsRef<Path>) -> Result<String> {
    let path = path.as_ref();
    std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

pub fn write_text(path: impl AsRef<Path>, text: &str) -> Result<()> {
    let path = path.as_ref();
    std::fs::write(path, text).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

/// Pretty JSON with a trailing newline.
pub fn to_json_string<T: Serialize + ?Sized>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serialisable");
    s.push('\n');
    s
}

pub fn complex_from_json(s: &str) -> Result<SimplicialComplex> {
    let f: ComplexFile = serde_json::from_str(s)?;
    SimplicialComplex::build_from_facets(&f.facets)
}

pub fn complex_to_json(x: &SimplicialComplex) -> String {
    to_json_string(&ComplexFile { facets: x.canonical_facets() })
}

pub fn read_complex(path: impl AsRef<Path>) -> Result<SimplicialComplex> {
    complex_from_json(&read_text(path)?)
}

pub fn cochain_from_json(x: &SimplicialComplex, s: &str) -> Result<Cochain> {
    let f: CochainFile = serde_json::from_str(s)?;
    Cochain::from_labels(x, f.dim, &f.faces)
}

pub fn cochain_to_json(x: &SimplicialComplex, alpha: &Cochain) -> String {
    let mut faces = alpha.face_labels(x);
    for f in &mut faces {
        f.sort();
    }
    faces.sort();
    to_json_string(&CochainFile { dim: alpha.dim(), faces })
}

pub fn read_cochain(x: &SimplicialComplex, path: impl AsRef<Path>) -> Result<Cochain> {
    cochain_from_json(x, &read_text(path)?)
}

pub fn generators_from_json(s: &str) -> Result<GeneratorFile> {
    let f: GeneratorFile = serde_json::from_str(s)?;
    if let Some(g) = f.generators.iter().find(|g| g.len() != f.degree) {
        return Err(Error::LengthMismatch { expected: f.degree, got: g.len() });
    }
    Ok(f)
}

pub fn read_points(path: impl AsRef<Path>) -> Result<PointConfig> {
    PointConfig::from_json(&read_text(path)?)
}

fn csv_string(header: &[&str], rows: &[Vec<String>]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header)?;
    for r in rows {
        w.write_record(r)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Io(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Io(e.to_string()))
}

/// One row per quantity: `i, quantity, value, decimal, exactness`. Undefined constants are
/// written with empty value cells.
pub fn expansion_report_csv(r: &ExpansionReport) -> Result<String> {
    let mut rows = Vec::new();
    let mut push = |i: String, name: &str, v: Option<Value>| {
        let (value, decimal, ex) = v.map_or((String::new(), String::new(), String::new()), |v| (v.value, v.decimal, v.exactness.into()));
        rows.push(vec![i, name.to_string(), value, decimal, ex]);
    };
    for (i, h) in r.cohomology.iter().enumerate() {
        push(i.to_string(), "dim_h", Some(Value::int(*h as i64)));
    }
    for (c, s) in r.constants.iter().zip(&r.systoles) {
        let i = c.i.to_string();
        push(i.clone(), "epsilon", c.epsilon.as_ref().map(Value::exact));
        push(i.clone(), "epsilon_tilde", c.epsilon_tilde.as_ref().map(Value::exact));
        push(i.clone(), "mu", c.mu.as_ref().map(Value::exact));
        push(i, "systole", s.as_ref().map(|s| Value::exact(&s.norm)));
    }
    if let Some(sp) = &r.spectral {
        push(String::new(), "laplacian_gap", sp.laplacian_gap.map(Value::float));
    }
    csv_string(&["i", "quantity", "value", "decimal", "exactness"], &rows)
}

/// Flattens a JSON array of objects into CSV: nested values are written as compact JSON, and
/// tagged numbers (`{"value", "decimal", "exactness"}`) as their `value`.
pub fn records_csv(columns: &[&str], records: &[Json]) -> Result<String> {
    let cell = |v: Option<&Json>| -> String {
        match v {
            None | Some(Json::Null) => String::new(),
            Some(Json::String(s)) => s.clone(),
            Some(Json::Object(o)) if o.contains_key("value") && o.contains_key("exactness") => {
                o["value"].as_str().unwrap_or_default().to_string()
            }
            Some(other) => other.to_string(),
        }
    };
    let rows: Vec<Vec<String>> = records.iter().map(|r| columns.iter().map(|c| cell(r.get(*c))).collect()).collect();
    csv_string(columns, &rows)
}
