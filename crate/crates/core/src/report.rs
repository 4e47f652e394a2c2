//! JSON renderings of computed results.
//!
//! Every number in a report is a [`Value`] that says whether it is an exact rational or a
//! floating-point quantity carrying the spectral tolerance.

use serde::Serialize;
use serde_json::{json, Value as Json};

use crate::cochain::{DimCertificate, ExpansionConstants, ExpansionReport, GromovCertificate, Norms, Systole};
use crate::complex::SimplicialComplex;
use crate::rational::{to_decimal, Rational};
use crate::spectral::SpectralSummary;

/// Digits after the decimal point in decimal renderings.
pub const DIGITS: usize = 12;

pub const EXACT: &str = "rational";
pub const FLOAT: &str = "float±1e-9";

/// A tagged number.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Value {
    /// `"p/q"` for exact values, a fixed-point decimal for floats.
    pub value: String,
    /// Rounded decimal rendering of `value`.
    pub decimal: String,
    pub exactness: &'static str,
}

impl Value {
    pub fn exact(r: &Rational) -> Self {
        Self { value: r.to_string(), decimal: to_decimal(r, DIGITS), exactness: EXACT }
    }

    pub fn int(n: i64) -> Self {
        Self { value: n.to_string(), decimal: format!("{n}.{}", "0".repeat(DIGITS)), exactness: EXACT }
    }

    pub fn float(x: f64) -> Self {
        let s = fmt_float(x);
        Self { value: s.clone(), decimal: s, exactness: FLOAT }
    }
}

/// Fixed-point rendering; negative zero prints as zero.
pub fn fmt_float(x: f64) -> String {
    let s = format!("{x:.DIGITS$}");
    if s.starts_with('-') && s[1..].chars().all(|c| c == '0' || c == '.') {
        s[1..].to_string()
    } else {
        s
    }
}

fn opt_exact(r: &Option<Rational>) -> Json {
    r.as_ref().map_or(Json::Null, |r| json!(Value::exact(r)))
}

pub fn systole_json(x: &SimplicialComplex, s: &Option<Systole>) -> Json {
    match s {
        None => Json::Null,
        Some(s) => json!({
            "norm": Value::exact(&s.norm),
            "support_size": s.support_size,
            "witness": s.witness.face_labels(x),
        }),
    }
}

pub fn constants_json(c: &ExpansionConstants) -> Json {
    json!({
        "i": c.i,
        "epsilon": opt_exact(&c.epsilon),
        "epsilon_zero_by_convention": c.epsilon_zero_by_convention(),
        "epsilon_tilde": opt_exact(&c.epsilon_tilde),
        "mu": opt_exact(&c.mu),
        "dim_h": c.dim_h,
    })
}

pub fn spectral_json(s: &SpectralSummary) -> Json {
    json!({
        "vertices": s.vertices,
        "edges": s.edges,
        "regular_degree": s.regular_degree,
        "components": s.components,
        "adjacency_spectrum": s.adjacency_spectrum.iter().map(|&l| Value::float(l)).collect::<Vec<_>>(),
        "laplacian_gap": s.laplacian_gap.map(Value::float),
        "ramanujan": s.ramanujan,
    })
}

pub fn expansion_report_json(x: &SimplicialComplex, r: &ExpansionReport) -> Json {
    json!({
        "dim": r.dim,
        "f_vector": r.f_vector,
        "cohomology": r.cohomology,
        "constants": r.constants.iter().map(constants_json).collect::<Vec<_>>(),
        "systoles": r.constants.iter().zip(&r.systoles).map(|(c, s)| json!({"i": c.i, "systole": systole_json(x, s)})).collect::<Vec<_>>(),
        "spectral": r.spectral.as_ref().map(spectral_json),
    })
}

pub fn norms_json(n: &Norms) -> Json {
    json!({
        "support_size": n.support_size,
        "norm": Value::exact(&n.norm),
        "class_norm": Value::exact(&n.class_norm),
        "cocycle_coset_norm": Value::exact(&n.cocycle_coset_norm),
    })
}

fn dim_certificate_json(x: &SimplicialComplex, d: &DimCertificate) -> Json {
    json!({
        "i": d.i,
        "mu_i": opt_exact(&d.mu_i),
        "condition1": d.condition1,
        "systole": systole_json(x, &d.systole),
        "condition2": d.condition2,
    })
}

pub fn certificate_json(x: &SimplicialComplex, c: &GromovCertificate) -> Json {
    json!({
        "mu": Value::exact(&c.mu),
        "eta": Value::exact(&c.eta),
        "condition1": c.condition1(),
        "condition2": c.condition2(),
        "passes": c.passes(),
        "dims": c.dims.iter().map(|d| dim_certificate_json(x, d)).collect::<Vec<_>>(),
    })
}
