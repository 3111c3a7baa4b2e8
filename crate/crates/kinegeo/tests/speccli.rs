use std::fmt::Write as _;
use std::sync::OnceLock;

use kinegeo::catalog::{build_algebra, build_geometry, GEOMETRY_NAMES};
use kinegeo::contraction::Subject;
use kinegeo::exactnum::DEFAULT_SEED;
use kinegeo::geometry::Geometry;
use kinegeo::speccli::*;
use proptest::prelude::*;

fn full_report() -> &'static VerificationReport {
    static REPORT: OnceLock<VerificationReport> = OnceLock::new();
    REPORT.get_or_init(|| run_verification(&Workspace::builtin(), &Selection::all(DEFAULT_SEED)))
}

fn select(suite: &str, only: Option<&str>) -> Selection {
    Selection { suites: Suite::parse(suite).unwrap(), only: only.map(String::from), seed: DEFAULT_SEED, timings: false }
}

fn single_algebra(text: &str, names: &NameTable) -> AlgebraDecl {
    let doc = parse_spec_with(text, names).unwrap();
    match doc.declarations.as_slice() {
        [Declaration::Algebra(a)] => a.clone(),
        other => panic!("expected one algebra, got {:?}", other),
    }
}

#[test]
fn empty_and_comment_only_files_are_empty_documents() {
    assert_eq!(parse_spec("").unwrap(), SpecDocument::default());
    assert_eq!(parse_spec("  # nothing here\n\n# still nothing\n").unwrap(), SpecDocument::default());
}

#[test]
fn unknown_generator_symbol() {
    match parse_spec("algebra bad { time Q }") {
        Err(SpecError::UnknownSymbol { symbol, line, .. }) => {
            assert_eq!(symbol, "Q");
            assert_eq!(line, 1);
        }
        other => panic!("{:?}", other),
    }
}

#[test]
fn poincare_declaration_builds_the_catalog_algebra() {
    let text = "algebra p { time H; trans P; boost K; rot J }";
    let decl = single_algebra(text, &NameTable::empty());
    let built = build_user_algebra(&decl);
    assert_eq!(built.basis, build_algebra("p").unwrap().basis);
    // Against the catalog names the same text redeclares p.
    assert!(matches!(parse_spec(text), Err(SpecError::DuplicateName { ref name, .. }) if name == "p"));
}

#[test]
fn inline_generators_and_aliases() {
    let text = "algebra mine {\n  time expr(c, 0, 0, 0)\n  trans P\n  boost Kg\n  rot J\n}\ncontract d+ -> mine { rule cc_over_l_fixed_inf; expect contracts }\n";
    let doc = parse_spec(text).unwrap();
    let Declaration::Algebra(a) = &doc.declarations[0] else { panic!() };
    assert_eq!(build_user_algebra(a).basis, build_algebra("g").unwrap().basis);
    let Declaration::Contract(c) = &doc.declarations[1] else { panic!() };
    assert_eq!(c.source, "d_+");
    assert_eq!(c.subject, Subject::Algebra);
}

#[test]
fn parse_errors_carry_positions() {
    let cases = [
        ("algebra x { time H; trans P; boost K }", "syntax"),
        ("algebra x { time H; trans expr(1,0,0,0); boost K; rot J }", "syntax"),
        ("geometry y { algebra p; g[0][0] = eps }", "unknown"),
        ("contract later -> p { rule l_to_inf }\nalgebra later { time H; trans P; boost K; rot J }", "unknown"),
        ("algebra a1 { time H; trans P; boost K; rot J }\nalgebra a1 { time H; trans P; boost K; rot J }", "duplicate"),
        ("geometry Min { algebra p }", "duplicate"),
        ("contract dS -> Min { rule l_to_inf; pre theta }", "syntax"),
        ("contract d_+ -> p { rule l_to_inf; expect blocked }", "syntax"),
        ("dual Min <-> P' sign q=-1;", "syntax"),
        ("widget w {}", "syntax"),
    ];
    for (text, kind) in cases {
        let err = parse_spec(text).unwrap_err();
        let ok = match (&err, kind) {
            (SpecError::Syntax { line, col, .. }, "syntax") => *line >= 1 && *col >= 1,
            (SpecError::UnknownSymbol { .. }, "unknown") => true,
            (SpecError::DuplicateName { .. }, "duplicate") => true,
            _ => false,
        };
        assert!(ok, "{text:?} gave {err}");
        assert!(err.to_string().contains(':'), "{err}");
    }
    match parse_spec("\n\n  bogus") {
        Err(SpecError::Syntax { line, col, .. }) => assert_eq!((line, col), (3, 3)),
        other => panic!("{:?}", other),
    }
}

/// A catalog geometry written in the spec language under a fresh name,
/// without its signature and curvature so that both are re-measured.
fn geometry_as_spec(g: &Geometry, name: &str) -> String {
    let mut s = format!("geometry {} {{\n  algebra {}\n", name, g.algebra);
    for m in 0..4 {
        for n in m..4 {
            for (kw, t) in [("g", &g.g), ("h", &g.h)] {
                let v = t.get(&[m, n]);
                if !v.is_zero() {
                    let _ = writeln!(s, "  {}[{}][{}] = {}", kw, m, n, v);
                }
            }
        }
    }
    for l in 0..4 {
        for m in 0..4 {
            for n in m..4 {
                let v = g.conn.get(l, m, n);
                if !v.is_zero() {
                    let _ = writeln!(s, "  gamma[{}][{}][{}] = {}", l, m, n, v);
                }
            }
        }
    }
    for d in &g.domain {
        let _ = writeln!(s, "  domain {}", d);
    }
    for f in &g.free_parameters {
        let _ = writeln!(s, "  free {}", f);
    }
    for k in &g.g_kernel {
        let c: Vec<String> = k.comps.iter().map(|p| p.to_string()).collect();
        let _ = writeln!(s, "  kernel expr({})", c.join(", "));
    }
    s.push_str("}\n");
    s
}

#[test]
fn every_catalog_geometry_round_trips_through_the_spec_language() {
    for name in GEOMETRY_NAMES {
        let cat = build_geometry(name).unwrap();
        let text = geometry_as_spec(&cat, "UserCopy");
        let doc = parse_spec(&text).unwrap_or_else(|e| panic!("{name}: {e}\n{text}"));
        assert_eq!(parse_spec(&doc.to_string()).unwrap(), doc, "{name}");
        let Declaration::Geometry(decl) = &doc.declarations[0] else { panic!() };
        let user = build_user_geometry(decl);
        assert_eq!(user.g, cat.g, "{name}");
        assert_eq!(user.h, cat.h, "{name}");
        assert_eq!(user.conn, cat.conn, "{name}");
        assert_eq!(user.domain, cat.domain, "{name}");
        assert_eq!(user.free_parameters, cat.free_parameters, "{name}");
        assert_eq!(user.g_kernel, cat.g_kernel, "{name}");
        assert_eq!(user.ranks, cat.ranks, "{name}");
        assert!(user.signature.same_inertia(&cat.signature), "{name}: {} vs {}", user.signature, cat.signature);
        assert_eq!(user.curvature, cat.curvature, "{name}");
    }
}

#[test]
fn user_declarations_are_verified_alongside_the_catalog() {
    let mut ws = Workspace::builtin();
    let text = geometry_as_spec(&build_geometry("dS").unwrap(), "MyDS")
        + "contract MyDS -> Min { rule l_to_inf; expect contracts }\ndual MyDS <-> MyDS;\n";
    ws.load_spec("user.kg", &text).unwrap();
    assert_eq!(catalog_version(&ws), format!("kinegeo-{}+3user", env!("CARGO_PKG_VERSION")));
    let r = run_verification(&ws, &select("all", Some("MyDS")));
    let kinds: Vec<(&str, Status)> = r.checks.iter().map(|c| (c.check.as_str(), c.status)).collect();
    assert!(kinds.contains(&("compatibility", Status::Pass)), "{:?}", kinds);
    assert!(kinds.contains(&("edge", Status::Pass)), "{:?}", kinds);
    // dS is not self-dual.
    assert!(kinds.contains(&("pair", Status::Fail)), "{:?}", kinds);
    // Redeclaring through the workspace is rejected too.
    let err = ws.load_spec("again.kg", &text).unwrap_err();
    assert!(matches!(err, WorkspaceError::Spec { error: SpecError::DuplicateName { .. }, .. }), "{err}");
}

#[test]
fn pristine_catalog_passes_every_suite() {
    let r = full_report();
    for c in r.failures() {
        eprintln!("{}/{} {}: {}", c.suite.name(), c.check, c.subject, c.detail);
    }
    assert!(r.passed());
    assert!(r.warnings.is_empty());
    let text = emit_text(r);
    assert!(text.contains("\ngeometries verified: 45/45\n"), "{text}");
    assert!(text.contains("\nalgebras verified: 22/22\n"));
    assert!(text.contains("\noverall: PASS"));
}

#[test]
fn json_report_is_stable() {
    let r = full_report();
    let json = emit_json(r);
    assert_eq!(reemit_json(&json).unwrap(), json);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["seed"], "0x4b494e");
    assert_eq!(v["summary"]["overall"], "pass");
    assert_eq!(v["checks"].as_array().unwrap().len(), r.checks.len());
    assert!(v["checks"][0].get("time_ms").is_none());
    let again = run_verification(&Workspace::builtin(), &Selection::all(DEFAULT_SEED));
    assert_eq!(emit_json(&again), json);
    assert_eq!(emit_text(&again), emit_text(r));
}

#[test]
fn single_duality_pair() {
    let r = run_verification(&Workspace::builtin(), &select("duality", Some("Min")));
    assert_eq!(r.checks.len(), 1);
    assert_eq!(r.checks[0].subject, "Min <-> P'");
    assert_eq!(r.checks[0].status, Status::Pass);
}

#[test]
fn nh2_signature_is_reported() {
    let r = run_verification(&Workspace::builtin(), &select("geometry", Some("NH_2")));
    let sig = r.checks.iter().find(|c| c.check == "signature").unwrap();
    assert_eq!(sig.status, Status::Pass);
    assert!(sig.detail.contains("(-,-;+,-)"), "{}", sig.detail);
    assert!(emit_text(&r).contains("(-,-;+,-)"));
}

fn corrupted(fault: &str, suite: &str, only: Option<&str>) -> VerificationReport {
    let mut ws = Workspace::builtin();
    ws.corrupt(&fault.parse().unwrap()).unwrap();
    run_verification(&ws, &select(suite, only))
}

#[test]
fn injected_geometry_fault_names_the_component() {
    let r = corrupted("geometry:dS", "geometry", Some("dS"));
    assert!(!r.passed());
    let f: Vec<_> = r.failures().collect();
    assert!(f.iter().any(|c| c.check == "compatibility" && c.detail.contains("[0][0][0]")), "{:?}", f);
    assert!(r.warnings.iter().any(|w| w.contains("fault injected")));
    let text = emit_text(&r);
    assert!(text.contains("FAIL geometry/compatibility dS:"), "{text}");
    assert!(emit_json(&r).contains("\"overall\": \"fail\""));
}

#[test]
fn each_injection_kind_fails_exactly_its_target() {
    for (fault, suite, subject) in [
        ("algebra:p", "closure", "p"),
        ("recipe:d_+->p", "contraction", "d_+ -> e [l_to_inf]"),
        ("recipe:LBdS->Euc", "contraction", "LBdS -> Euc [l_to_inf]"),
        ("duality:Min", "duality", "Min <-> P'"),
    ] {
        let r = corrupted(fault, suite, None);
        let failed: Vec<&str> = r.failures().map(|c| c.subject.as_str()).collect();
        assert!(!failed.is_empty() && failed.iter().all(|s| *s == subject), "{fault}: {:?}", failed);
    }
}

#[test]
fn malformed_injections_are_rejected() {
    assert!(matches!("bogus".parse::<Corruption>(), Err(WorkspaceError::BadInjection(_))));
    assert!(matches!("recipe:dS".parse::<Corruption>(), Err(WorkspaceError::BadInjection(_))));
    let mut ws = Workspace::builtin();
    assert!(matches!(ws.corrupt(&"geometry:Nope".parse().unwrap()), Err(WorkspaceError::InjectionTarget(_))));
}

#[test]
fn suite_names_parse() {
    assert_eq!(Suite::parse("all").unwrap(), Suite::ALL.to_vec());
    for s in Suite::ALL {
        assert_eq!(Suite::parse(s.name()).unwrap(), vec![s]);
    }
    assert!(Suite::parse("nonsense").is_none());
}

#[test]
fn dumps_and_shows() {
    let ws = Workspace::builtin();
    let nh2 = show_geometry(&ws, "NH2").unwrap();
    assert!(nh2.contains("  signature  (-,-;+,-)\n"));
    assert!(show_algebra(&ws, "d+").unwrap().starts_with("algebra d_+ (de Sitter)"));
    assert!(show_geometry(&ws, "nope").is_none());
    let v: serde_json::Value = serde_json::from_str(&dump_json(&ws)).unwrap();
    assert_eq!(v["algebras"].as_array().unwrap().len(), 22);
    assert_eq!(v["geometries"].as_array().unwrap().len(), 45);
}

fn expr() -> impl Strategy<Value = String> {
    let atom = prop_oneof![
        (-9i32..=9).prop_map(|k| k.to_string()),
        (0..4usize, 1u32..=3).prop_map(|(i, e)| format!("x{}^{}", i, e)),
        Just("c".to_string()),
        Just("l".to_string()),
    ];
    atom.prop_recursive(3, 12, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| format!("({} + {})", a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| format!("{} * {}", a, b)),
            (inner.clone(), inner).prop_map(|(a, b)| format!("{} - ({})", a, b)),
        ]
    })
}

fn decl() -> impl Strategy<Value = String> {
    let time = prop_oneof![Just("H"), Just("-H'"), Just("H+"), Just("H-")];
    let other = || prop_oneof![Just("P"), Just("P'"), Just("P+"), Just("-P-"), Just("K"), Just("Kg"), Just("Kc"), Just("N")];
    let algebra = (time, other(), other(), expr()).prop_map(|(t, p, b, e)| (t, p, b, e));
    let geometry = (expr(), expr(), 0..4usize, any::<bool>()).prop_map(|(a, b, i, pos)| (a, b, i, pos));
    let names = prop_oneof![Just("Min"), Just("dS"), Just("NH_2"), Just("P'"), Just("G_2")];
    prop_oneof![
        algebra.prop_map(|(t, p, b, e)| format!("algebra @ {{ time {t}; trans {p}; boost {b}; rot J }}\n# e = {e}\n")),
        geometry.prop_map(|(a, b, i, pos)| {
            format!("geometry @ {{ algebra p\n g[{i}][3] = {a}\n h[0][{i}] = {b}; domain {a} {} 0 }}\n", if pos { ">" } else { "<" })
        }),
        (names.clone(), names).prop_map(|(a, b)| format!("dual {a} <-> {b} sign h=-1;\n")),
        Just("contract dS -> NH_2 { rule nu_fixed_zero; scale g = eps^-2; scale h = -eps^4; expect contracts }\n".to_string()),
        Just("contract d_+ -> p2 { rule l_to_zero; pre pi; scale time = eps^2; scale trans = eps^2 }\n".to_string()),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn parse_print_parse_is_parse(decls in prop::collection::vec(decl(), 0..6)) {
        let text: String = decls.iter().enumerate().map(|(i, d)| d.replace('@', &format!("u{}", i))).collect();
        let doc = parse_spec(&text).unwrap();
        let printed = doc.to_string();
        let again = parse_spec(&printed).unwrap();
        prop_assert_eq!(&again, &doc);
        prop_assert_eq!(again.to_string(), printed);
    }

    #[test]
    fn report_order_is_independent_of_the_seed(seed in any::<u64>()) {
        let sel = Selection { seed, ..select("geometry", Some("Min")) };
        let r = run_verification(&Workspace::builtin(), &sel);
        prop_assert!(r.passed());
        let subjects: Vec<_> = r.checks.iter().map(|c| c.check.clone()).collect();
        prop_assert_eq!(subjects, ["compatibility", "killing", "algebra-link", "curvature", "structure", "signature"]);
    }
}
