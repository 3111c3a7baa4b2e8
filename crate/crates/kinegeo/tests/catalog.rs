use std::path::PathBuf;

use kinegeo::catalog::*;
use kinegeo::exactnum::{rf, RationalFn, Var, DEFAULT_SEED};
use kinegeo::geometry::{pullback, triple_difference, KillingCache, SignatureDescriptor};
use kinegeo::liefields::{closure, is_automorphism, Involution};
use kinegeo::speccli::{dump_json, dump_text, Workspace};

fn geo(name: &str) -> kinegeo::geometry::Geometry {
    build_geometry(name).unwrap()
}

#[test]
fn algebra_rows_follow_the_generator_table() {
    let d = build_algebra("d_+").unwrap();
    assert_eq!(d.symbols, ["H+", "P+", "K", "J"].map(String::from));
    let want: Vec<_> = ["H+", "P+", "K", "J"].iter().flat_map(|s| family(s).unwrap()).collect();
    assert_eq!(d.basis, want);
    let g = build_algebra("g'").unwrap();
    let want: Vec<_> = ["H'", "P", "Kg", "J"].iter().flat_map(|s| family(s).unwrap()).collect();
    assert_eq!(g.basis, want);
    let n = build_algebra("n_+2").unwrap();
    assert_eq!(n.symbols, ["H+", "P'", "Kc", "J"].map(String::from));
    assert_eq!(build_algebra("d+").unwrap(), d);
}

#[test]
fn static_and_unknown_algebras_are_rejected() {
    assert_eq!(build_algebra("s"), Err(CatalogError::StaticExcluded("s".into())));
    assert_eq!(build_algebra("s2"), Err(CatalogError::StaticExcluded("s2".into())));
    assert_eq!(build_algebra("q"), Err(CatalogError::UnknownAlgebra("q".into())));
    assert_eq!(build_geometry("Nope"), Err(CatalogError::UnknownGeometry("Nope".into())));
}

#[test]
fn catalog_sizes() {
    assert_eq!(ALGEBRAS.len(), 22);
    assert_eq!(GEOMETRY_NAMES.len(), 45);
    let bll: Vec<&str> = ALGEBRAS.iter().filter(|r| r.bll).map(|r| r.name).collect();
    assert_eq!(bll, ["d_+", "d_-", "p", "n_+", "n_-", "g", "c", "e'", "p'", "g'"]);
    assert_eq!(DUALITY_PAIRS.len(), 21);
    assert_eq!(TIME_SPACE_CONTRAST.len(), 12);
    assert_eq!(ADDITIVITY_TRIPLES.len(), 2);
    assert_eq!(GENUINE_KINEMATICS.len(), 9);
}

#[test]
fn geometry_row_examples() {
    let p = geo("P_2-");
    assert_eq!(p.signature, SignatureDescriptor::parse("(-,-,-;+)").unwrap());
    assert_eq!(p.domain.len(), 1);
    assert_eq!(p.domain[0].to_string(), "x0^2 - x1^2 - x2^2 - x3^2 > 0");
    let hn = geo("HN_+");
    assert_eq!(hn.signature.to_string(), "(-,-,-;+)");
    assert_eq!(hn.algebra, "h_+");
    let g2 = geo("G_2'");
    assert_eq!(g2.ranks, (2, 1));
    assert_eq!(g2.signature.to_string(), "(-,-;+)");
    // The square of l²(x·x)^(-1/2): same level sets, rational.
    assert_eq!(g2.free_parameters, vec![rf("l^4/(x1^2 + x2^2 + x3^2)")]);
    let e2 = geo("E_2");
    let r2 = rf("x0^2 + x1^2 + x2^2 + x3^2");
    for m in 0..4 {
        for n in 0..4 {
            let xm = RationalFn::var(Var::coord(m));
            let xn = RationalFn::var(Var::coord(n));
            let delta = if m == n { r2.clone() } else { RationalFn::zero() };
            let g = rf("l^2").mul(&delta.sub(&xm.mul(&xn))).div(&r2.pow(2).unwrap()).unwrap();
            assert_eq!(e2.g.get(&[m, n]), &g);
            assert_eq!(e2.h.get(&[m, n]), &rf("l^-4").mul(&r2).mul(&xm).mul(&xn));
        }
    }
}

#[test]
fn every_geometry_names_its_annihilating_algebra() {
    let algebras: Vec<_> = ALGEBRAS.iter().map(|r| build_algebra(r.name).unwrap()).collect();
    for name in GEOMETRY_NAMES {
        let g = geo(name);
        let cache = KillingCache::new(&g);
        let annihilating: Vec<&str> = algebras
            .iter()
            .filter(|a| a.basis.iter().all(|x| cache.check(x, "xi").is_ok()))
            .map(|a| a.name.as_str())
            .collect();
        assert_eq!(annihilating, vec![g.algebra.as_str()], "{name}");
    }
}

#[test]
fn parity_and_time_reversal_are_automorphisms() {
    for row in ALGEBRAS.iter() {
        let sc = closure(&build_algebra(row.name).unwrap().basis).unwrap();
        for inv in [Involution::parity(), Involution::time_reversal(), Involution::composite()] {
            assert!(is_automorphism(&sc, &inv), "{} {:?}", row.name, inv.kind);
        }
    }
}

#[test]
fn duality_map_examples() {
    let m = duality_map();
    let twice = m.after(&m).unwrap();
    assert!(twice.forward.iter().enumerate().all(|(mu, f)| *f == RationalFn::var(Var::coord(mu))));
    triple_difference(&pullback(&m, &geo("Min")).unwrap(), &geo("P'")).unwrap();
    triple_difference(&pullback(&m, &geo("NH_-")).unwrap(), &geo("NH_-")).unwrap();
    for (a, b) in [("C", "C_2"), ("HN_-", "P_2-"), ("ENH_2", "ENH_2")] {
        verify_duality(&geo(a), &geo(b), 1, 1, DEFAULT_SEED).unwrap();
    }
}

#[test]
fn duality_table() {
    let self_dual: Vec<&str> = DUALITY_PAIRS.iter().filter(|p| p.left == p.right).map(|p| p.left).collect();
    assert_eq!(self_dual, ["NH_-", "ENH_-", "ENH_2", "DTNH_2"]);
    for p in DUALITY_PAIRS.iter() {
        verify_duality_pair(p, &geo(p.left), &geo(p.right), DEFAULT_SEED)
            .unwrap_or_else(|e| panic!("{} <-> {}: {}", p.left, p.right, e));
    }
    // Dropping a recorded sign breaks the pair.
    assert!(verify_duality(&geo("G"), &geo("G'"), 1, 1, DEFAULT_SEED).is_err());
}

#[test]
fn contrast_rows_factorize() {
    for row in TIME_SPACE_CONTRAST.iter() {
        verify_contrast_row(row, &geo(row.geometry)).unwrap();
    }
    let swapped = ContrastRow { branch: -1, ..TIME_SPACE_CONTRAST[0].clone() };
    assert!(verify_contrast_row(&swapped, &geo("NH_+")).is_err());
}

#[test]
fn additivity_identities() {
    for t in ADDITIVITY_TRIPLES.iter() {
        verify_additivity(&geo(t.left), &geo(t.right), &geo(t.sum)).unwrap();
    }
    assert!(verify_additivity(&geo("G_2"), &geo("G_2"), &geo("NH_2")).is_err());
}

#[test]
fn genuine_kinematics_table() {
    for row in GENUINE_KINEMATICS.iter() {
        verify_genuine_row(row, &geo(row.geometry)).unwrap();
    }
    let mut cells: Vec<(KinematicsClass, i8)> = GENUINE_KINEMATICS.iter().map(|r| (r.class, r.curvature_sign)).collect();
    cells.sort_by_key(|c| (c.0 as u8, c.1));
    cells.dedup();
    assert_eq!(cells.len(), 9);
    assert_eq!(signature_class(&geo("E_2")), None);
}

#[test]
fn combinatory_bases_equal_contraction_limits() {
    let recipes = algebra_recipes();
    for row in COMBINATORY.iter() {
        let b = combinatory_basis(row);
        let target = build_algebra(row.algebra).unwrap();
        assert_eq!(b, target.basis, "{}", row.algebra);
        let r = recipes.iter().find(|r| r.source == row.via && r.target == row.algebra).unwrap();
        let lim = kinegeo::contraction::contract_algebra(r, &build_algebra(row.via).unwrap(), &target).unwrap();
        assert_eq!(b, lim.basis, "{}", row.algebra);
    }
}

fn golden(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)
}

fn check_golden(name: &str, actual: &str) {
    let path = golden(name);
    if std::env::var_os("KINEGEO_BLESS").is_some() {
        std::fs::create_dir_all(path.parent().unwrap()).unwrap();
        std::fs::write(&path, actual).unwrap();
    }
    let want = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {}", path.display(), e));
    if want != actual {
        let line = want.lines().zip(actual.lines()).position(|(a, b)| a != b);
        panic!("{} differs from the dump (first differing line {:?})", name, line.map(|l| l + 1));
    }
}

#[test]
fn catalog_dump_matches_golden_files() {
    let ws = Workspace::builtin();
    check_golden("catalog.txt", &dump_text(&ws));
    check_golden("catalog.json", &dump_json(&ws));
}
