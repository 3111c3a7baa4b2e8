//! Suite execution: every check is independent, runs in parallel and is
//! collected back in a fixed order.

use std::collections::BTreeSet;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::catalog::{
    algebra_recipes, combinatory_basis, finite_maps, signature_class, spatial_curvature_sign, verify_additivity,
    verify_contrast_row, verify_duality, verify_genuine_row, verify_invariance, KinematicsClass,
    ADDITIVITY_TRIPLES, COMBINATORY, GENUINE_KINEMATICS, TIME_SPACE_CONTRAST,
};
use crate::contraction::{contract_algebra, run_recipe, ContractionRecipe, Resolver};
use crate::exactnum::qfmt;
use crate::geometry::{
    compat_failure, curvature_failure, degenerate_structure_failure, nondegenerate_failure, sample_domain,
    signature_rank, Geometry, KillingCache,
};
use crate::liefields::{closure, is_automorphism, jacobi_violation, rotations_close_as_so3, Involution, DIM};

use super::report::{CheckResult, Status, VerificationReport};
use super::workspace::{DualityEntry, Workspace};

/// Independent groups of checks.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Suite {
    Closure,
    Geometry,
    Contraction,
    Duality,
    Additivity,
    Contrast,
    Kinematics,
    Finite,
    Combinatory,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Closure,
        Suite::Geometry,
        Suite::Contraction,
        Suite::Duality,
        Suite::Additivity,
        Suite::Contrast,
        Suite::Kinematics,
        Suite::Finite,
        Suite::Combinatory,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Closure => "closure",
            Suite::Geometry => "geometry",
            Suite::Contraction => "contraction",
            Suite::Duality => "duality",
            Suite::Additivity => "additivity",
            Suite::Contrast => "contrast",
            Suite::Kinematics => "kinematics",
            Suite::Finite => "finite",
            Suite::Combinatory => "combinatory",
        }
    }

    /// `all` expands to every suite.
    pub fn parse(s: &str) -> Option<Vec<Suite>> {
        if s == "all" {
            return Some(Suite::ALL.to_vec());
        }
        Suite::ALL.iter().copied().find(|x| x.name() == s).map(|x| vec![x])
    }
}

/// What to run.
#[derive(Clone, Debug)]
pub struct Selection {
    pub suites: Vec<Suite>,
    /// Restrict to checks involving this algebra or geometry (canonical name).
    pub only: Option<String>,
    pub seed: u64,
    pub timings: bool,
}

impl Selection {
    pub fn all(seed: u64) -> Selection {
        Selection { suites: Suite::ALL.to_vec(), only: None, seed, timings: false }
    }
}

/// Sample points used for rank and signature.
pub const SIGNATURE_POINTS: usize = 5;

/// A deferred check: suite, kind, subject, the names it involves, and the work.
struct Task<'a> {
    suite: Suite,
    check: &'static str,
    subject: String,
    involves: Vec<String>,
    run: Box<dyn Fn() -> Outcome + Send + Sync + 'a>,
}

enum Outcome {
    Pass(String),
    Fail(String),
    Skipped(String),
}

fn outcome(r: Result<String, String>) -> Outcome {
    match r {
        Ok(s) => Outcome::Pass(s),
        Err(s) => Outcome::Fail(s),
    }
}

fn task<'a>(
    suite: Suite,
    check: &'static str,
    subject: impl Into<String>,
    involves: Vec<String>,
    run: impl Fn() -> Outcome + Send + Sync + 'a,
) -> Task<'a> {
    Task { suite, check, subject: subject.into(), involves, run: Box::new(run) }
}

/// Execute the selected suites against a workspace.
pub fn run_verification(ws: &Workspace, sel: &Selection) -> VerificationReport {
    let suites: BTreeSet<Suite> = sel.suites.iter().copied().collect();
    let mut tasks = Vec::new();
    for &s in &suites {
        match s {
            Suite::Closure => closure_tasks(ws, &mut tasks),
            Suite::Geometry => geometry_tasks(ws, sel.seed, &mut tasks),
            Suite::Contraction => contraction_tasks(ws, sel.seed, &mut tasks),
            Suite::Duality => duality_tasks(ws, sel.seed, &mut tasks),
            Suite::Additivity => additivity_tasks(ws, &mut tasks),
            Suite::Contrast => contrast_tasks(ws, &mut tasks),
            Suite::Kinematics => kinematics_tasks(ws, &mut tasks),
            Suite::Finite => finite_tasks(ws, &mut tasks),
            Suite::Combinatory => combinatory_tasks(ws, &mut tasks),
        }
    }
    if let Some(only) = &sel.only {
        tasks.retain(|t| t.involves.iter().any(|n| n == only));
    }
    let checks: Vec<CheckResult> = tasks
        .par_iter()
        .map(|t| {
            let start = Instant::now();
            let out = (t.run)();
            let ms = start.elapsed().as_secs_f64() * 1e3;
            let (status, detail) = match out {
                Outcome::Pass(d) => (Status::Pass, d),
                Outcome::Fail(d) => (Status::Fail, d),
                Outcome::Skipped(d) => (Status::Skipped, d),
            };
            CheckResult {
                suite: t.suite,
                check: t.check.to_string(),
                subject: t.subject.clone(),
                status,
                detail,
                time_ms: sel.timings.then_some((ms * 1e3).round() / 1e3),
            }
        })
        .collect();
    let mut warnings = Vec::new();
    if suites.contains(&Suite::Contraction) && ws.recipes.is_empty() {
        warnings.push("no contraction recipes: vacuous pass".to_string());
    }
    warnings.extend(ws.corruptions.iter().map(|c| format!("fault injected: {}", c)));
    VerificationReport {
        schema: 1,
        catalog_version: catalog_version(ws),
        seed: format!("{:#x}", sel.seed),
        suites: suites.iter().map(|s| s.name().to_string()).collect(),
        only: sel.only.clone(),
        checks,
        warnings,
    }
}

/// Version string of the checked catalog.
pub fn catalog_version(ws: &Workspace) -> String {
    let mut v = format!("kinegeo-{}", env!("CARGO_PKG_VERSION"));
    if ws.user_declarations > 0 {
        v.push_str(&format!("+{}user", ws.user_declarations));
    }
    v
}

fn closure_tasks<'a>(ws: &'a Workspace, out: &mut Vec<Task<'a>>) {
    for e in &ws.algebras {
        let alg = &e.algebra;
        let kinematical = e.kinematical;
        let run = move || {
            let sc = match closure(&alg.basis) {
                Ok(sc) => sc,
                Err(err) => return Outcome::Fail(format!("{}: {}", alg.name, err)),
            };
            if let Some((a, b, c, k)) = jacobi_violation(&sc) {
                return Outcome::Fail(format!(
                    "Jacobi fails for ({}, {}, {}) in component {}",
                    alg.slot_label(a),
                    alg.slot_label(b),
                    alg.slot_label(c),
                    alg.slot_label(k)
                ));
            }
            if !rotations_close_as_so3(&sc) {
                return Outcome::Fail("rotations do not close as so(3)".into());
            }
            Outcome::Pass(format!("dim {}, Jacobi holds, [J, J] = J", DIM))
        };
        out.push(task(Suite::Closure, "closure", &alg.name, vec![alg.name.clone()], run));
        let run = move || {
            let sc = match closure(&alg.basis) {
                Ok(sc) => sc,
                Err(_) => return Outcome::Skipped("basis does not close".into()),
            };
            let mut names = Vec::new();
            for (inv, label) in
                [(Involution::parity(), "Pi"), (Involution::time_reversal(), "Theta"), (Involution::composite(), "PiTheta")]
            {
                if !is_automorphism(&sc, &inv) {
                    if kinematical {
                        return Outcome::Fail(format!("{} is not an automorphism", label));
                    }
                    return Outcome::Skipped(format!("{} is not an automorphism of a non-kinematical algebra", label));
                }
                names.push(label);
            }
            Outcome::Pass(format!("{} are automorphisms", names.join(", ")))
        };
        out.push(task(Suite::Closure, "involutions", &alg.name, vec![alg.name.clone()], run));
    }
}

fn mismatch<T>(r: Result<T, crate::geometry::Mismatch>) -> Result<T, String> {
    r.map_err(|m| m.to_string())
}

fn geometry_tasks<'a>(ws: &'a Workspace, seed: u64, out: &mut Vec<Task<'a>>) {
    for e in &ws.geometries {
        let geo = &e.geometry;
        let inv = vec![geo.name.clone(), geo.algebra.clone()];
        let own = vec![geo.name.clone()];
        out.push(task(Suite::Geometry, "compatibility", &geo.name, own.clone(), move || {
            outcome(mismatch(compat_failure(geo)).map(|_| "nabla g = 0, nabla h = 0".to_string()))
        }));
        out.push(task(Suite::Geometry, "killing", &geo.name, inv.clone(), move || outcome(killing(ws, geo))));
        out.push(task(Suite::Geometry, "algebra-link", &geo.name, inv, move || outcome(algebra_link(ws, geo))));
        out.push(task(Suite::Geometry, "curvature", &geo.name, own.clone(), move || {
            outcome(mismatch(curvature_failure(geo)).map(|_| {
                format!("R = k(delta g - delta g) with k = {} l^-2, Weyl projective = 0", qfmt(&geo.curvature))
            }))
        }));
        out.push(task(Suite::Geometry, "structure", &geo.name, own.clone(), move || {
            if geo.is_nondegenerate() {
                outcome(mismatch(nondegenerate_failure(geo)).map(|_| "g h = 1, Gamma = Levi-Civita(g)".to_string()))
            } else {
                outcome(mismatch(degenerate_structure_failure(geo)).map(|_| {
                    format!(
                        "h annihilates {} free parameter(s), g annihilates {} kernel field(s)",
                        geo.free_parameters.len(),
                        geo.g_kernel.len()
                    )
                }))
            }
        }));
        out.push(task(Suite::Geometry, "signature", &geo.name, own, move || outcome(signature(geo, seed))));
    }
}

/// `ℒ_ξ (g, h, Γ) = 0` for all ten generators of the linked algebra.
fn killing(ws: &Workspace, geo: &Geometry) -> Result<String, String> {
    let alg = ws.algebra(&geo.algebra).ok_or_else(|| format!("unknown algebra {:?}", geo.algebra))?;
    let cache = KillingCache::new(geo);
    for (i, xi) in alg.basis.iter().enumerate() {
        cache.check(xi, &alg.slot_label(i)).map_err(|m| m.to_string())?;
    }
    Ok(format!("all {} generators of {} leave (g, h, Gamma) invariant", alg.basis.len(), alg.name))
}

/// No other algebra of the workspace leaves the triple invariant.
fn algebra_link(ws: &Workspace, geo: &Geometry) -> Result<String, String> {
    let cache = KillingCache::new(geo);
    let others: Vec<&str> = ws
        .algebras
        .iter()
        .map(|e| &e.algebra)
        .filter(|a| a.name != geo.algebra && a.basis.iter().all(|x| cache.check(x, "x").is_ok()))
        .map(|a| a.name.as_str())
        .collect();
    if !others.is_empty() {
        return Err(format!("also invariant under {}", others.join(", ")));
    }
    Ok(format!("{} is the only one of {} algebras leaving it invariant", geo.algebra, ws.algebras.len()))
}

fn signature(geo: &Geometry, seed: u64) -> Result<String, String> {
    let pts = sample_domain(geo, seed, SIGNATURE_POINTS).map_err(|e| e.to_string())?;
    let (ranks, sig) = signature_rank(geo, &pts).map_err(|e| e.to_string())?;
    if ranks != geo.ranks {
        return Err(format!("ranks {:?} measured, {:?} declared", ranks, geo.ranks));
    }
    if !sig.same_inertia(&geo.signature) {
        return Err(format!("signature {} measured, {} declared", sig, geo.signature));
    }
    Ok(format!("ranks ({}, {}), signature {} at {} points", ranks.0, ranks.1, geo.signature, pts.len()))
}

fn contraction_tasks<'a>(ws: &'a Workspace, seed: u64, out: &mut Vec<Task<'a>>) {
    for r in &ws.recipes {
        let involves = vec![r.source.clone(), r.target.clone()];
        out.push(task(Suite::Contraction, "edge", r.label(), involves, move || {
            outcome(run_recipe(r, ws, seed).map_err(|e| e.to_string()))
        }));
    }
}

fn duality_tasks<'a>(ws: &'a Workspace, seed: u64, out: &mut Vec<Task<'a>>) {
    for d in &ws.dualities {
        let involves = vec![d.left.clone(), d.right.clone()];
        out.push(task(Suite::Duality, "pair", d.label(), involves, move || outcome(duality(ws, d, seed))));
    }
}

fn duality(ws: &Workspace, d: &DualityEntry, seed: u64) -> Result<String, String> {
    let left = ws.geometry(&d.left).ok_or_else(|| format!("unknown geometry {:?}", d.left))?;
    let right = ws.geometry(&d.right).ok_or_else(|| format!("unknown geometry {:?}", d.right))?;
    verify_duality(&left, &right, d.g_sign, d.h_sign, seed)?;
    let signs = match (d.g_sign, d.h_sign) {
        (1, 1) => String::new(),
        (g, h) => format!(" up to signs (g: {}, h: {})", g, h),
    };
    Ok(if d.left == d.right {
        format!("self-dual{}", signs)
    } else {
        format!("pullback exchanges the pair{}", signs)
    })
}

fn geometry_or_err(ws: &Workspace, name: &str) -> Result<Geometry, String> {
    ws.geometry(name).ok_or_else(|| format!("unknown geometry {:?}", name))
}

fn additivity_tasks<'a>(ws: &'a Workspace, out: &mut Vec<Task<'a>>) {
    for t in ADDITIVITY_TRIPLES.iter() {
        let subject = format!("h[{}] + h[{}] = h[{}]", t.left, t.right, t.sum);
        let involves = vec![t.left.to_string(), t.right.to_string(), t.sum.to_string()];
        out.push(task(Suite::Additivity, "sum", subject, involves, move || {
            outcome((|| {
                let (a, b, c) = (geometry_or_err(ws, t.left)?, geometry_or_err(ws, t.right)?, geometry_or_err(ws, t.sum)?);
                verify_additivity(&a, &b, &c)?;
                Ok("exact; shared Gamma and g up to sign".to_string())
            })())
        }));
    }
}

fn contrast_tasks<'a>(ws: &'a Workspace, out: &mut Vec<Task<'a>>) {
    for row in TIME_SPACE_CONTRAST.iter() {
        out.push(task(Suite::Contrast, "factorization", row.geometry, vec![row.geometry.to_string()], move || {
            outcome((|| {
                let geo = geometry_or_err(ws, row.geometry)?;
                verify_contrast_row(row, &geo)?;
                Ok(format!("{:?}, conformal factor {}", row.kind, row.conformal_factor()))
            })())
        }));
    }
}

fn class_name(c: KinematicsClass) -> &'static str {
    match c {
        KinematicsClass::Relativistic => "relativistic",
        KinematicsClass::AbsoluteTime => "absolute time",
        KinematicsClass::AbsoluteSpace => "absolute space",
    }
}

fn kinematics_tasks<'a>(ws: &'a Workspace, out: &mut Vec<Task<'a>>) {
    for row in GENUINE_KINEMATICS.iter() {
        out.push(task(Suite::Kinematics, "cell", row.geometry, vec![row.geometry.to_string()], move || {
            outcome((|| {
                let geo = geometry_or_err(ws, row.geometry)?;
                verify_genuine_row(row, &geo)?;
                Ok(format!("{}, curvature sign {}", class_name(row.class), row.curvature_sign))
            })())
        }));
    }
    let involves = GENUINE_KINEMATICS.iter().map(|r| r.geometry.to_string()).collect();
    out.push(task(Suite::Kinematics, "selection", "table", involves, move || outcome(selection(ws))));
}

/// Exactly the nine table entries are signature-pattern candidates with
/// table membership, one per (class, curvature sign) cell.
fn selection(ws: &Workspace) -> Result<String, String> {
    let members: BTreeSet<&str> = GENUINE_KINEMATICS.iter().map(|r| r.geometry).collect();
    let mut cells = BTreeSet::new();
    let mut candidates = 0;
    for e in ws.geometries.iter().filter(|e| e.builtin) {
        let g = &e.geometry;
        let Some(class) = signature_class(g) else { continue };
        candidates += 1;
        if !members.contains(g.name.as_str()) {
            continue;
        }
        let sign = spatial_curvature_sign(g).ok_or_else(|| format!("{}: no curvature sign", g.name))?;
        if !cells.insert((class_name(class), sign)) {
            return Err(format!("{}: cell ({}, {}) filled twice", g.name, class_name(class), sign));
        }
    }
    if cells.len() != GENUINE_KINEMATICS.len() {
        return Err(format!("{} of {} cells filled", cells.len(), GENUINE_KINEMATICS.len()));
    }
    Ok(format!("{} cells filled uniquely from {} signature candidates", cells.len(), candidates))
}

fn finite_tasks<'a>(ws: &'a Workspace, out: &mut Vec<Task<'a>>) {
    for m in finite_maps() {
        let subject = format!("{}: {}", m.geometry, m.name);
        let involves = vec![m.geometry.to_string()];
        out.push(task(Suite::Finite, "invariance", subject, involves, move || {
            outcome((|| {
                let geo = geometry_or_err(ws, m.geometry)?;
                if !m.map.inverse_holds() {
                    return Err("map and inverse do not compose to the identity".to_string());
                }
                verify_invariance(&m.map, &geo)?;
                Ok("pullback leaves (g, h, Gamma) unchanged".to_string())
            })())
        }));
    }
}

fn combinatory_tasks<'a>(ws: &'a Workspace, out: &mut Vec<Task<'a>>) {
    let recipes: Vec<ContractionRecipe> = algebra_recipes();
    for row in COMBINATORY.iter() {
        let rec = recipes.iter().find(|r| r.source == row.via && r.target == row.algebra).cloned();
        let involves = vec![row.algebra.to_string(), row.via.to_string()];
        out.push(task(Suite::Combinatory, "basis", row.algebra, involves, move || {
            let Some(rec) = rec.clone() else {
                return Outcome::Skipped(format!("no recipe {} -> {}", row.via, row.algebra));
            };
            outcome((|| {
                let combo = combinatory_basis(row);
                let target = ws.algebra(row.algebra).ok_or_else(|| format!("unknown algebra {:?}", row.algebra))?;
                let source = ws.algebra(row.via).ok_or_else(|| format!("unknown algebra {:?}", row.via))?;
                let limit = contract_algebra(&rec, &source, &target).map_err(|e| e.to_string())?;
                for (i, (a, b)) in combo.iter().zip(&limit.basis).enumerate() {
                    if a != b {
                        return Err(format!("slot {} differs: {} vs {}", target.slot_label(i), a, b));
                    }
                }
                Ok(format!("combination basis equals the {} limit slot by slot", rec.label()))
            })())
        }));
    }
}
