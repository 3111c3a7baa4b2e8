//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

use std::collections::BTreeSet;
use std::process::{Command, Output};
use std::time::{Duration, Instant};

use kinegeo::catalog::*;
use kinegeo::contraction::{
    contract_geometry, run_recipe, verify_contraction_graph, CatalogResolver, ContractionRecipe, Expectation,
    GeometryOutcome, RuleKind, Scale, Subject,
};
use kinegeo::exactnum::{RationalFn, DEFAULT_SEED};
use kinegeo::geometry::{
    compat_failure, curvature_failure, ricci, riemann, sample_domain, signature_rank, weyl_projective, Geometry,
    KillingCache,
};
use kinegeo::liefields::{closure, is_automorphism, jacobi_check, Involution, StructureConstants, DIM};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn geo(name: &str) -> Result<Geometry, String> {
    build_geometry(name).map_err(|e| e.to_string())
}

/// The static algebra has only the rotation brackets; it admits no transitive
/// realization on spacetime and is absent from the catalog, so its constants
/// are taken from the `J` rows of the Poincaré table.
fn static_constants() -> Result<StructureConstants, String> {
    let p = closure(&build_algebra("p").map_err(|e| e.to_string())?.basis).map_err(|e| e.to_string())?;
    let mut s = StructureConstants::zero();
    for a in 0..DIM {
        for b in 0..DIM {
            if a >= 7 || b >= 7 {
                for k in 0..DIM {
                    s.set(a, b, k, p.get(a, b, k).clone());
                }
            }
        }
    }
    Ok(s)
}

fn criterion_1() -> Outcome {
    let involutions = [Involution::parity(), Involution::time_reversal(), Involution::composite()];
    let mut bll = 0;
    for row in ALGEBRAS.iter() {
        let alg = build_algebra(row.name).map_err(|e| e.to_string())?;
        ensure(alg.basis.len() == DIM, || format!("{}: dimension {}", row.name, alg.basis.len()))?;
        let sc = closure(&alg.basis).map_err(|e| format!("{}: {}", row.name, e))?;
        ensure(jacobi_check(&sc), || format!("{}: Jacobi", row.name))?;
        for inv in &involutions {
            ensure(is_automorphism(&sc, inv), || format!("{}: {:?} not an automorphism", row.name, inv.kind))?;
        }
        bll += row.bll as usize;
    }
    let s = static_constants()?;
    ensure(jacobi_check(&s), || "static: Jacobi".into())?;
    for inv in &involutions {
        ensure(is_automorphism(&s, inv), || format!("static: {:?} not an automorphism", inv.kind))?;
    }
    bll += 1;
    ensure(ALGEBRAS.len() == 22, || format!("{} algebras", ALGEBRAS.len()))?;
    ensure(bll == 11, || format!("{} BLL algebras", bll))?;
    Ok(format!("22 algebras closed, {} BLL algebras with parity/time-reversal automorphisms", bll))
}

fn criterion_2() -> Outcome {
    let mut triples = 0;
    ensure(GEOMETRY_NAMES.len() == 45, || format!("{} geometries", GEOMETRY_NAMES.len()))?;
    for name in GEOMETRY_NAMES {
        let g = geo(name)?;
        compat_failure(&g).map_err(|m| format!("{name}: {m}"))?;
        let alg = build_algebra(&g.algebra).map_err(|e| e.to_string())?;
        let cache = KillingCache::new(&g);
        for (i, xi) in alg.basis.iter().enumerate() {
            cache.check(xi, &alg.slot_label(i)).map_err(|m| format!("{name}: {m}"))?;
            triples += 1;
        }
        curvature_failure(&g).map_err(|m| format!("{name}: {m}"))?;
        let riem = riemann(&g.conn);
        ensure(weyl_projective(&riem, &ricci(&riem)).is_zero(), || format!("{name}: Weyl projective"))?;
    }
    ensure(triples == 450, || format!("{triples} Killing triples"))?;
    let k = |n: &str| geo(n).map(|g| g.curvature_fn());
    ensure(k("P_2+")? == RationalFn::int(1).div(&kinegeo::exactnum::rf("l^2")).unwrap(), || "P_2+ curvature".into())?;
    ensure(k("E_2")? == kinegeo::exactnum::rf("-1/l^2"), || "E_2 curvature".into())?;
    Ok(format!("45 geometries compatible, {triples} Killing triples, constant curvature, Weyl projective zero"))
}

fn criterion_3() -> Outcome {
    for name in GEOMETRY_NAMES {
        let g = geo(name)?;
        let pts = sample_domain(&g, DEFAULT_SEED, 5).map_err(|e| format!("{name}: {e}"))?;
        ensure(pts.len() >= 5, || format!("{name}: {} points", pts.len()))?;
        let (ranks, sig) = signature_rank(&g, &pts).map_err(|e| format!("{name}: {e}"))?;
        ensure(ranks == g.ranks, || format!("{name}: ranks {:?} vs {:?}", ranks, g.ranks))?;
        ensure(sig.same_inertia(&g.signature), || format!("{name}: signature {} vs {}", sig, g.signature))?;
    }
    let mut sum3 = BTreeSet::new();
    for name in GEOMETRY_NAMES {
        let g = geo(name)?;
        if g.ranks.0 + g.ranks.1 == 3 {
            sum3.insert(name.to_string());
        }
    }
    let want: BTreeSet<String> = ["G_2", "EG_2", "G_2'", "EG_2'"].map(String::from).into();
    ensure(sum3 == want, || format!("rank-sum-3 rows {:?}", sum3))?;
    Ok("45 rank/signature rows at 5 sample points; rank sum 3 exactly for G_2, EG_2, G_2', EG_2'".into())
}

fn criterion_4() -> Outcome {
    let recipes = builtin_recipes();
    let report = verify_contraction_graph(&recipes, &CatalogResolver, DEFAULT_SEED);
    if let Some(e) = report.edges.iter().find(|e| !e.passed) {
        return Err(format!("{}: {}", e.edge, e.detail));
    }
    ensure(report.edges.len() == recipes.len(), || "edge count".into())?;
    // Prefactor bookkeeping: l²/l_r², l_r⁴/l⁴ (dS -> P_2+), c_r²/c² (Min -> G, Min -> C),
    // ν²/ν_r² (dS -> NH_+). Each edge passes with its scales and fails without them.
    for (src, dst) in [("dS", "P_2+"), ("Min", "G"), ("Min", "C"), ("dS", "NH_+")] {
        let r = recipes.iter().find(|r| r.source == src && r.target == dst).ok_or(format!("no {src} -> {dst}"))?;
        ensure(r.tensor_scales[..2] != [Scale::ONE, Scale::ONE], || format!("{}: no prefactor", r.label()))?;
        let mut bare = r.clone();
        bare.tensor_scales = [Scale::ONE; 3];
        ensure(run_recipe(&bare, &CatalogResolver, DEFAULT_SEED).is_err(), || format!("{}: passes without prefactor", r.label()))?;
    }
    let blocked = |src: &str, dst: &str, rule: RuleKind| -> Result<(), String> {
        let r = recipes
            .iter()
            .find(|r| r.source == src && r.target == dst && r.rule == rule && r.expected == Expectation::NotContractible)
            .ok_or(format!("{src} -> {dst} [{rule}] not encoded as blocked"))?;
        match contract_geometry(r, &geo(src)?, &geo(dst)?, DEFAULT_SEED).map_err(|e| e.to_string())? {
            GeometryOutcome::NotContractible(_) => Ok(()),
            GeometryOutcome::Contracted(_) => Err(format!("{src} -> {dst} contracted")),
        }
    };
    blocked("LBdS", "Euc", RuleKind::LToInf)?;
    // The combined l_r → ∞, c_r → 0 limit.
    blocked("DTdS", "C", RuleKind::NuZeroLInf)?;
    let n_blocked = recipes.iter().filter(|r| r.expected == Expectation::NotContractible).count();
    let n_geo = recipes.iter().filter(|r| r.subject == Subject::Geometry).count();
    // A blocked edge forced to contract is an error.
    let forced = ContractionRecipe::geometry("LBdS", "Euc", RuleKind::LToInf, [Scale::ONE; 3]);
    ensure(run_recipe(&forced, &CatalogResolver, DEFAULT_SEED).is_err(), || "forced LBdS contraction accepted".into())?;
    Ok(format!("{} edges reproduced ({} geometric, {} not contractible)", recipes.len(), n_geo, n_blocked))
}

fn criterion_5() -> Outcome {
    let m = duality_map();
    let twice = m.after(&m).map_err(|e| e.to_string())?;
    ensure(twice.forward == kinegeo::geometry::RationalMap::identity().forward, || "map is not an involution".into())?;
    for p in DUALITY_PAIRS.iter() {
        verify_duality_pair(p, &geo(p.left)?, &geo(p.right)?, DEFAULT_SEED)
            .map_err(|e| format!("{} <-> {}: {}", p.left, p.right, e))?;
    }
    let fixed: BTreeSet<&str> = DUALITY_PAIRS.iter().filter(|p| p.left == p.right).map(|p| p.left).collect();
    let want: BTreeSet<&str> = ["NH_-", "ENH_-", "ENH_2", "DTNH_2"].into();
    ensure(fixed == want, || format!("self-dual {:?}", fixed))?;
    Ok(format!("{} pairs, {} self-dual fixed points", DUALITY_PAIRS.len(), fixed.len()))
}

fn criterion_6() -> Outcome {
    let got: BTreeSet<(&str, &str, &str)> = ADDITIVITY_TRIPLES.iter().map(|t| (t.left, t.right, t.sum)).collect();
    let want: BTreeSet<(&str, &str, &str)> = [("G_2", "G_2'", "NH_2"), ("EG_2", "EG_2'", "ENH_2")].into();
    ensure(got == want, || format!("triples {:?}", got))?;
    for t in ADDITIVITY_TRIPLES.iter() {
        let (l, r, s) = (geo(t.left)?, geo(t.right)?, geo(t.sum)?);
        ensure(l.h.add(&r.h).sub(&s.h).is_zero(), || format!("h_{} + h_{} != h_{}", t.left, t.right, t.sum))?;
        verify_additivity(&l, &r, &s).map_err(|e| format!("{}: {}", t.sum, e))?;
    }
    Ok("h_G_2 + h_G_2' = h_NH_2 and h_EG_2 + h_EG_2' = h_ENH_2".into())
}

fn criterion_7() -> Outcome {
    let recipes = algebra_recipes();
    let covered: BTreeSet<&str> = COMBINATORY.iter().map(|r| r.algebra).collect();
    for a in ["p", "e", "n_+", "n_-", "h_+", "h_-", "g", "c", "g'"] {
        ensure(covered.contains(a), || format!("no combinatory basis for {a}"))?;
    }
    for row in COMBINATORY.iter() {
        let comb = combinatory_basis(row);
        let target = build_algebra(row.algebra).map_err(|e| e.to_string())?;
        let r = recipes
            .iter()
            .find(|r| r.source == row.via && r.target == row.algebra)
            .ok_or(format!("no edge {} -> {}", row.via, row.algebra))?;
        let src = build_algebra(row.via).map_err(|e| e.to_string())?;
        let lim = kinegeo::contraction::contract_algebra(r, &src, &target).map_err(|e| e.to_string())?;
        for (slot, (a, b)) in comb.iter().zip(&lim.basis).enumerate() {
            ensure(a == b, || format!("{} slot {}", row.algebra, target.slot_label(slot)))?;
        }
    }
    Ok(format!("{} combinatory bases equal their contraction limits slot by slot", COMBINATORY.len()))
}

fn criterion_8() -> Outcome {
    let maps = finite_maps();
    let count = |g: &str| maps.iter().filter(|m| m.geometry == g).count();
    ensure(count("E_2") >= 2, || format!("{} maps for E_2", count("E_2")))?;
    ensure(count("P_2+") + count("P_2-") >= 1, || "no Lorentz maps".into())?;
    for m in &maps {
        ensure(m.map.inverse_holds(), || format!("{}: inverse", m.name))?;
        verify_invariance(&m.map, &geo(m.geometry)?).map_err(|e| format!("{}: {}", m.name, e))?;
    }
    Ok(format!("{} fractional-linear maps leave g, h and Gamma invariant", maps.len()))
}

fn kinegeo(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kinegeo")).args(args).output().expect("run kinegeo")
}

fn criterion_9() -> Outcome {
    let pristine = kinegeo(&["verify", "--suite", "all", "--format", "json"]);
    ensure(pristine.status.code() == Some(0), || format!("pristine exit {:?}", pristine.status.code()))?;
    let again = kinegeo(&["verify", "--suite", "all", "--format", "json"]);
    ensure(pristine.stdout == again.stdout, || "JSON differs between runs".into())?;
    let v: serde_json::Value = serde_json::from_slice(&pristine.stdout).map_err(|e| e.to_string())?;
    let keys: Vec<&str> = v.as_object().ok_or("report is not an object")?.keys().map(String::as_str).collect();
    ensure(keys == ["schema", "catalog_version", "seed", "suites", "checks", "warnings", "summary"], || {
        format!("keys {:?}", keys)
    })?;
    ensure(v["schema"] == 1, || "schema".into())?;
    for check in v["checks"].as_array().ok_or("checks")? {
        let k: Vec<&str> = check.as_object().ok_or("check")?.keys().map(String::as_str).collect();
        ensure(k == ["suite", "check", "subject", "status", "detail"], || format!("check keys {:?}", k))?;
    }
    let n_checks = v["checks"].as_array().map_or(0, Vec::len);
    for (fault, needle) in [
        ("algebra:p", "closure/"),
        ("geometry:dS", "geometry/compatibility dS"),
        ("recipe:dS->Min", "contraction/edge dS -> "),
        ("duality:Min", "duality/pair Min <-> P'"),
    ] {
        let out = kinegeo(&["verify", "--suite", "all", "--inject", fault]);
        let stderr = String::from_utf8_lossy(&out.stderr);
        ensure(out.status.code() == Some(1), || format!("{fault}: exit {:?}", out.status.code()))?;
        ensure(stderr.contains(needle), || format!("{fault}: diagnostic {:?}", stderr))?;
    }
    Ok(format!("pristine run exits 0 with {n_checks} checks; 4 injected faults exit 1; JSON byte-identical"))
}

fn main() {
    let criteria: [(fn() -> Outcome, u64); 9] = [
        (criterion_1, 10),
        (criterion_2, 120),
        (criterion_3, 30),
        (criterion_4, 120),
        (criterion_5, 30),
        (criterion_6, 5),
        (criterion_7, 10),
        (criterion_8, 10),
        (criterion_9, 300),
    ];
    let mut failed = 0;
    for (i, (run, budget)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(msg) if elapsed > Duration::from_secs(*budget) => {
                Err(format!("{msg}; took {:.1}s, budget {budget}s", elapsed.as_secs_f64()))
            }
            other => other,
        };
        match outcome {
            Ok(msg) => println!("criterion {}: PASS ({:.2}s) {}", i + 1, elapsed.as_secs_f64(), msg),
            Err(msg) => {
                failed += 1;
                println!("criterion {}: FAIL ({:.2}s) {}", i + 1, elapsed.as_secs_f64(), msg);
            }
        }
    }
    println!("acceptance: {}/9 criteria passed", 9 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
