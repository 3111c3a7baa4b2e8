//! Canonical serializations of the workspace catalog.

use std::fmt::Write as _;

use serde_json::{json, Value};

use crate::contraction::{ContractionRecipe, Subject};
use crate::exactnum::qfmt;
use crate::geometry::{Geometry, TensorField};
use crate::liefields::AlgebraPresentation;

use super::workspace::Workspace;

/// Why the catalog carries 22 algebras.
pub const CATALOG_NOTE: &str = "22 algebras: the generator-set table has 24 rows, of which the two static algebras \
(s, s2) are excluded because they are only meaningful with a central extension";

fn components(t: &TensorField) -> Vec<(String, String)> {
    t.indices()
        .into_iter()
        .filter_map(|idx| {
            let v = t.get(&idx);
            (!v.is_zero()).then(|| (idx.iter().map(|i| format!("[{}]", i)).collect(), v.to_string()))
        })
        .collect()
}

fn tensor_json(t: &TensorField) -> Value {
    Value::Object(components(t).into_iter().map(|(k, v)| (k, Value::String(v))).collect())
}

fn algebra_json(a: &AlgebraPresentation, kinematical: bool) -> Value {
    let basis: Vec<Value> = a
        .basis
        .iter()
        .enumerate()
        .map(|(i, x)| json!({ "slot": a.slot_label(i), "components": x.comps.iter().map(|p| p.to_string()).collect::<Vec<_>>() }))
        .collect();
    json!({
        "name": a.name,
        "title": a.title,
        "symbols": a.symbols,
        "kinematical": kinematical,
        "basis": basis,
    })
}

fn geometry_json(g: &Geometry) -> Value {
    json!({
        "name": g.name,
        "title": g.title,
        "algebra": g.algebra,
        "ranks": [g.ranks.0, g.ranks.1],
        "signature": g.signature.to_string(),
        "curvature": format!("{} l^-2", qfmt(&g.curvature)),
        "domain": g.domain.iter().map(|d| d.to_string()).collect::<Vec<_>>(),
        "free_parameters": g.free_parameters.iter().map(|f| f.to_string()).collect::<Vec<_>>(),
        "g": tensor_json(&g.g),
        "h": tensor_json(&g.h),
        "gamma": tensor_json(&g.conn.as_tensor()),
    })
}

fn recipe_json(r: &ContractionRecipe) -> Value {
    let scales = match r.subject {
        Subject::Algebra => r.generator_scales.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
        Subject::Geometry => r.tensor_scales.iter().map(|s| s.to_string()).collect(),
    };
    json!({
        "source": r.source,
        "target": r.target,
        "rule": r.rule,
        "subject": r.subject,
        "scales": scales,
        "pre_involution": r.pre_involution.map(|k| format!("{:?}", k)),
        "expected": r.expected,
    })
}

/// The whole workspace as pretty JSON.
pub fn dump_json(ws: &Workspace) -> String {
    let v = json!({
        "schema": 1,
        "catalog_version": super::verify::catalog_version(ws),
        "note": CATALOG_NOTE,
        "algebras": ws.algebras.iter().map(|e| algebra_json(&e.algebra, e.kinematical)).collect::<Vec<_>>(),
        "geometries": ws.geometries.iter().map(|e| geometry_json(&e.geometry)).collect::<Vec<_>>(),
        "contractions": ws.recipes.iter().map(recipe_json).collect::<Vec<_>>(),
        "dualities": ws.dualities.iter().map(|d| json!({
            "left": d.left, "right": d.right, "g_sign": d.g_sign, "h_sign": d.h_sign,
        })).collect::<Vec<_>>(),
    });
    let mut s = serde_json::to_string_pretty(&v).expect("json");
    s.push('\n');
    s
}

fn algebra_text(out: &mut String, a: &AlgebraPresentation) {
    let _ = writeln!(out, "algebra {} ({}): {}", a.name, a.title, a.symbols.join(", "));
    for (i, x) in a.basis.iter().enumerate() {
        let _ = writeln!(out, "  {:<5} = {}", a.slot_label(i), x);
    }
}

fn geometry_text(out: &mut String, g: &Geometry) {
    let _ = writeln!(out, "geometry {} ({})", g.name, g.title);
    let _ = writeln!(out, "  algebra    {}", g.algebra);
    let _ = writeln!(out, "  ranks      ({}, {})", g.ranks.0, g.ranks.1);
    let _ = writeln!(out, "  signature  {}", g.signature);
    let _ = writeln!(out, "  curvature  k = {} l^-2", qfmt(&g.curvature));
    for d in &g.domain {
        let _ = writeln!(out, "  domain     {}", d);
    }
    for f in &g.free_parameters {
        let _ = writeln!(out, "  free       {}", f);
    }
    for (name, t) in [("g", &g.g), ("h", &g.h), ("gamma", &g.conn.as_tensor())] {
        for (idx, v) in components(t) {
            let _ = writeln!(out, "  {}{} = {}", name, idx, v);
        }
    }
}

/// Normalized basis of one algebra.
pub fn show_algebra(ws: &Workspace, name: &str) -> Option<String> {
    let e = ws.algebra_entry(name)?;
    let mut out = String::new();
    algebra_text(&mut out, &e.algebra);
    Some(out)
}

/// Normalized components of one geometry.
pub fn show_geometry(ws: &Workspace, name: &str) -> Option<String> {
    let e = ws.geometry_entry(name)?;
    let mut out = String::new();
    geometry_text(&mut out, &e.geometry);
    Some(out)
}

/// The whole workspace as text.
pub fn dump_text(ws: &Workspace) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "# {}", super::verify::catalog_version(ws));
    let _ = writeln!(out, "# {}", CATALOG_NOTE);
    for e in &ws.algebras {
        out.push('\n');
        algebra_text(&mut out, &e.algebra);
    }
    for e in &ws.geometries {
        out.push('\n');
        geometry_text(&mut out, &e.geometry);
    }
    out.push('\n');
    for r in &ws.recipes {
        let _ = writeln!(out, "contract {} ({:?})", r.label(), r.expected);
    }
    out.push('\n');
    for d in &ws.dualities {
        let _ = writeln!(out, "dual {} (g sign {}, h sign {})", d.label(), d.g_sign, d.h_sign);
    }
    out
}
