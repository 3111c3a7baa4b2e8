use kinegeo::catalog::{algebra_recipes, build_algebra, build_geometry, builtin_recipes, generator, geometry_recipes};
use kinegeo::contraction::*;
use kinegeo::exactnum::{rf, RationalFn, DEFAULT_SEED};
use kinegeo::geometry::{compat_check, Geometry};
use kinegeo::liefields::{AlgebraPresentation, InvolutionKind};
use proptest::prelude::*;

fn recipe(src: &str, dst: &str) -> ContractionRecipe {
    builtin_recipes()
        .into_iter()
        .find(|r| r.source == src && r.target == dst)
        .unwrap_or_else(|| panic!("no recipe {src} -> {dst}"))
}

fn alg(name: &str) -> AlgebraPresentation {
    build_algebra(name).unwrap()
}

fn geo(name: &str) -> Geometry {
    build_geometry(name).unwrap()
}

fn contracted(src: &str, dst: &str) -> Geometry {
    match contract_geometry(&recipe(src, dst), &geo(src), &geo(dst), DEFAULT_SEED).unwrap() {
        GeometryOutcome::Contracted(g) => *g,
        GeometryOutcome::NotContractible(s) => panic!("{src} -> {dst} blocked: {:?}", s),
    }
}

#[test]
fn rules_fix_their_invariant_combinations() {
    let ratio = |r: RuleKind, pl: i32, pc: i32| {
        let (l, c) = r.running();
        c.pow(pc).unwrap().mul(&l.pow(pl).unwrap())
    };
    for r in [RuleKind::NuFixedInf, RuleKind::NuFixedZero] {
        assert_eq!(ratio(r, -1, 1), rf("c/l"), "{r}");
    }
    for r in [RuleKind::CcOverLFixedInf, RuleKind::CcOverLFixedZero] {
        assert_eq!(ratio(r, -1, 2), rf("c^2/l"), "{r}");
    }
    for r in [RuleKind::COverLlFixedInf, RuleKind::COverLlFixedZero] {
        assert_eq!(ratio(r, -2, 1), rf("c/l^2"), "{r}");
    }
    assert_eq!(RuleKind::LToInf.running(), (rf("l/eps"), rf("c")));
    assert_eq!(RuleKind::CToZero.running(), (rf("l"), rf("eps*c")));
    for r in RuleKind::ALL {
        assert_eq!(RuleKind::parse(r.name()), Some(r));
    }
}

#[test]
fn generator_limits() {
    let g = |s: &str, i| generator(s, i).unwrap();
    for sym in ["H+", "H-"] {
        assert_eq!(contract_generator(&g(sym, 0), RuleKind::LToInf, Scale::ONE), Ok(g("H", 0)));
    }
    for i in 1..=3 {
        assert_eq!(contract_generator(&g("P+", i), RuleKind::LToZero, Scale::new(1, 2)), Ok(g("P'", i)));
        assert_eq!(contract_generator(&g("P-", i), RuleKind::LToZero, Scale::new(-1, 2)), Ok(g("P'", i)));
        assert_eq!(contract_generator(&g("K", i), RuleKind::CToZero, Scale::new(1, 2)), Ok(g("Kc", i)));
        assert_eq!(contract_generator(&g("K", i), RuleKind::CToInf, Scale::ONE), Ok(g("Kg", i)));
    }
    // Without the prefactor the deformed translation diverges.
    assert_eq!(contract_generator(&g("P+", 1), RuleKind::LToZero, Scale::ONE), Err(-2));
}

#[test]
fn algebra_limits() {
    for (src, dst, pre) in [("d_+", "p", None), ("d_+", "n_+", None), ("l", "h_-", Some(InvolutionKind::TimeReversal)), ("r", "h_+", Some(InvolutionKind::TimeReversal))] {
        let r = recipe(src, dst);
        assert_eq!(r.pre_involution, pre);
        let out = contract_algebra(&r, &alg(src), &alg(dst)).unwrap();
        assert_eq!(out.basis, alg(dst).basis);
    }
    // Retargeting an edge yields a slot-level mismatch.
    let err = contract_algebra(&recipe("d_+", "p"), &alg("d_+"), &alg("e")).unwrap_err();
    assert!(matches!(err, ContractionError::TargetMismatch { .. }), "{err}");
}

#[test]
fn factored_limits_commute() {
    let via_p = contract_algebra(&recipe("d_+", "p"), &alg("d_+"), &alg("p")).unwrap();
    let two_step = contract_algebra(&recipe("p", "c"), &via_p, &alg("c")).unwrap();
    let direct = contract_algebra(&recipe("d_+", "c"), &alg("d_+"), &alg("c")).unwrap();
    assert_eq!(two_step.basis, direct.basis);
    let (a1, b1) = recipe("d_+", "p").rule.exponents();
    let (a2, b2) = recipe("p", "c").rule.exponents();
    assert_eq!(recipe("d_+", "c").rule.exponents(), (a1 + a2, b1 + b2));
}

#[test]
fn bacry_levy_leblond_scaling() {
    // ε = ±l_r²/l² on the deformed blocks, the rest untouched.
    let p2 = recipe("d_+", "p2");
    let eps_order = 2 * p2.rule.exponents().0 as i32;
    assert_eq!(p2.generator_scales[..3], [Scale::new(1, eps_order), Scale::new(1, eps_order), Scale::ONE]);
    let p2m = recipe("d_-", "p2");
    assert_eq!(p2m.generator_scales[..3], [Scale::new(-1, eps_order), Scale::new(-1, eps_order), Scale::ONE]);
    let n2 = recipe("d_+", "n_+2");
    let eps_order = 2 * n2.rule.exponents().0 as i32;
    assert_eq!(n2.generator_scales[..3], [Scale::ONE, Scale::new(1, eps_order), Scale::new(1, eps_order)]);
    for r in [p2, p2m, n2] {
        contract_algebra(&r, &alg(&r.source), &alg(&r.target)).unwrap();
    }
}

#[test]
fn de_sitter_flattens_to_minkowski() {
    let lim = contracted("dS", "Min");
    check_target(&lim, &geo("Min"), DEFAULT_SEED).unwrap();
}

#[test]
fn beltrami_to_degenerate_prefactors() {
    let r = recipe("dS", "P_2+");
    // l²/l_r² on g and l_r⁴/l⁴ on h with l_r = eps·l.
    assert_eq!(r.tensor_scales[0], Scale::new(1, -2));
    assert_eq!(r.tensor_scales[1], Scale::new(1, 4));
    check_target(&contracted("dS", "P_2+"), &geo("P_2+"), DEFAULT_SEED).unwrap();
}

#[test]
fn riemann_sphere_to_euclidean_newton_hooke() {
    let lim = contracted("Riem", "ENH_-");
    check_target(&lim, &geo("ENH_-"), DEFAULT_SEED).unwrap();
    let nh = geo("NH_-");
    assert!(lim.g.sub(&nh.g).is_zero());
    assert!(lim.h.add(&nh.h).is_zero());
    let (enh, nhp) = (geo("ENH_+"), geo("NH_+"));
    assert!(enh.g.sub(&nhp.g).is_zero());
    assert!(enh.h.add(&nhp.h).is_zero());
}

#[test]
fn blocked_edges_report_a_violated_inequality() {
    for (src, dst, rule) in [("LBdS", "Euc", RuleKind::LToInf), ("DTdS", "Min", RuleKind::LToInf), ("BdSL", "HN_-'", RuleKind::CToZero)] {
        let r = ContractionRecipe::blocked(src, dst, rule);
        match contract_geometry(&r, &geo(src), &geo(dst), DEFAULT_SEED).unwrap() {
            GeometryOutcome::NotContractible(s) => {
                assert!(s.iter().any(|d| d.verdict == SurvivalVerdict::Violated), "{src}")
            }
            GeometryOutcome::Contracted(_) => panic!("{src} -> {dst} contracted"),
        }
        assert!(run_recipe(&r, &CatalogResolver, DEFAULT_SEED).is_ok());
    }
    // Expecting contractibility on a blocked edge is an error.
    let wrong = ContractionRecipe::geometry("LBdS", "Euc", RuleKind::LToInf, [Scale::ONE; 3]);
    assert!(matches!(
        run_recipe(&wrong, &CatalogResolver, DEFAULT_SEED),
        Err(ContractionError::UnexpectedContractibility { .. })
    ));
}

#[test]
fn every_geometry_limit_stays_compatible() {
    for r in geometry_recipes().iter().filter(|r| r.expected == Expectation::Contracts) {
        let lim = contracted(&r.source, &r.target);
        assert!(compat_check(&lim), "{}", r.label());
    }
}

#[test]
fn full_graph_passes() {
    let report = verify_contraction_graph(&builtin_recipes(), &CatalogResolver, DEFAULT_SEED);
    for e in report.edges.iter().filter(|e| !e.passed) {
        eprintln!("{}: {}", e.edge, e.detail);
    }
    assert!(report.passed());
    assert_eq!(report.edges.len(), builtin_recipes().len());
    assert!(report.warnings.is_empty());
}

#[test]
fn corrupted_target_fails_exactly_one_edge() {
    let mut recipes = algebra_recipes();
    recipes[0].target = "e".into();
    let report = verify_contraction_graph(&recipes, &CatalogResolver, DEFAULT_SEED);
    let failed: Vec<_> = report.edges.iter().filter(|e| !e.passed).map(|e| e.edge.clone()).collect();
    assert_eq!(failed, vec![recipes[0].label()]);
}

#[test]
fn empty_graph_passes_vacuously_with_a_warning() {
    let report = verify_contraction_graph(&[], &CatalogResolver, DEFAULT_SEED);
    assert!(report.passed());
    assert!(report.edges.is_empty());
    assert_eq!(report.warnings.len(), 1);
}

#[test]
fn unknown_endpoints_are_reported() {
    let r = ContractionRecipe::algebra("d_+", "nope", RuleKind::LToInf, None, [Scale::ONE; 3]);
    assert!(matches!(run_recipe(&r, &CatalogResolver, DEFAULT_SEED), Err(ContractionError::Unknown { .. })));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn extra_eps_order_makes_a_block_vanish(idx in 0..algebra_recipes().len(), block in 0..3usize) {
        let mut r = algebra_recipes()[idx].clone();
        r.generator_scales[block].order += 1;
        let err = contract_algebra(&r, &alg(&r.source), &alg(&r.target)).unwrap_err();
        let vanished = matches!(err, ContractionError::TargetMismatch { ref detail, .. } if detail.contains("vanishes"));
        prop_assert!(vanished, "{}", err);
    }

    #[test]
    fn missing_eps_order_diverges_or_mismatches(idx in 0..algebra_recipes().len(), block in 0..3usize) {
        let mut r = algebra_recipes()[idx].clone();
        r.generator_scales[block].order -= 1;
        prop_assert!(contract_algebra(&r, &alg(&r.source), &alg(&r.target)).is_err());
    }

    #[test]
    fn running_tensor_at_eps_one_is_the_source(idx in 0..geometry_recipes().len()) {
        let r = &geometry_recipes()[idx];
        let src = geo(&r.source);
        let run = running_tensor(&src.g, r.rule);
        let one: [Option<RationalFn>; kinegeo::exactnum::NVARS] =
            std::array::from_fn(|i| (i == kinegeo::exactnum::Var::Eps.index()).then(RationalFn::one));
        let back = run.map(|f| f.compose(&one).unwrap());
        prop_assert!(back.sub(&src.g).is_zero());
    }
}
