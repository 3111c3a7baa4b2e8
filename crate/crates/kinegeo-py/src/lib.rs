//! Python module `kinegeo`: catalog queries, spec parsing and verification.

use pyo3::exceptions::{PyKeyError, PyValueError};
use pyo3::prelude::*;

use kinegeo::catalog::{ALGEBRAS, DUALITY_PAIRS, GEOMETRY_NAMES};
use kinegeo::exactnum::DEFAULT_SEED;
use kinegeo::speccli::{self, Selection, Suite, Workspace};

/// Names of the catalog algebras, in catalog order.
#[pyfunction]
fn algebra_names() -> Vec<&'static str> {
    ALGEBRAS.iter().map(|r| r.name).collect()
}

/// Names of the catalog geometries, in catalog order.
#[pyfunction]
fn geometry_names() -> Vec<&'static str> {
    GEOMETRY_NAMES.to_vec()
}

/// `(left, right, g_sign, h_sign)` for every duality pair.
#[pyfunction]
fn duality_pairs() -> Vec<(&'static str, &'static str, i8, i8)> {
    DUALITY_PAIRS.iter().map(|p| (p.left, p.right, p.g_sign, p.h_sign)).collect()
}

fn workspace(specs: &[String]) -> PyResult<Workspace> {
    let mut ws = Workspace::builtin();
    for (i, text) in specs.iter().enumerate() {
        ws.load_spec(&format!("<spec {}>", i), text).map_err(|e| PyValueError::new_err(e.to_string()))?;
    }
    Ok(ws)
}

/// Basis of an algebra as ten 4-component lists of polynomial strings.
#[pyfunction]
fn algebra_basis(name: &str) -> PyResult<Vec<Vec<String>>> {
    let a = kinegeo::catalog::build_algebra(name).map_err(|e| PyKeyError::new_err(e.to_string()))?;
    Ok(a.basis.iter().map(|x| x.comps.iter().map(|p| p.to_string()).collect()).collect())
}

/// Normalized components of a geometry or algebra as text.
#[pyfunction]
#[pyo3(signature = (kind, name, specs = Vec::new()))]
fn show(kind: &str, name: &str, specs: Vec<String>) -> PyResult<String> {
    let ws = workspace(&specs)?;
    let text = match kind {
        "algebra" => speccli::show_algebra(&ws, name),
        "geometry" => speccli::show_geometry(&ws, name),
        _ => return Err(PyValueError::new_err("kind must be 'algebra' or 'geometry'")),
    };
    text.ok_or_else(|| PyKeyError::new_err(name.to_string()))
}

/// Parse a spec document and return its canonical text.
#[pyfunction]
fn format_spec(text: &str) -> PyResult<String> {
    speccli::parse_spec(text).map(|d| d.to_string()).map_err(|e| PyValueError::new_err(e.to_string()))
}

/// Run verification suites; returns the JSON report.
#[pyfunction]
#[pyo3(signature = (suite = "all", only = None, seed = DEFAULT_SEED, specs = Vec::new()))]
fn verify(suite: &str, only: Option<&str>, seed: u64, specs: Vec<String>) -> PyResult<String> {
    let ws = workspace(&specs)?;
    let suites = Suite::parse(suite).ok_or_else(|| PyValueError::new_err(format!("unknown suite {:?}", suite)))?;
    let only = match only {
        None => None,
        Some(n) => Some(ws.resolve(n).ok_or_else(|| PyKeyError::new_err(n.to_string()))?.0),
    };
    let report = speccli::run_verification(&ws, &Selection { suites, only, seed, timings: false });
    Ok(speccli::emit_json(&report))
}

#[pymodule]
#[pyo3(name = "kinegeo")]
fn kinegeo_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("DEFAULT_SEED", DEFAULT_SEED)?;
    m.add_function(wrap_pyfunction!(algebra_names, m)?)?;
    m.add_function(wrap_pyfunction!(geometry_names, m)?)?;
    m.add_function(wrap_pyfunction!(duality_pairs, m)?)?;
    m.add_function(wrap_pyfunction!(algebra_basis, m)?)?;
    m.add_function(wrap_pyfunction!(show, m)?)?;
    m.add_function(wrap_pyfunction!(format_spec, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}
