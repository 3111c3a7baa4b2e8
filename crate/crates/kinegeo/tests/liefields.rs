use kinegeo::catalog::{build_algebra, family, generator, ALGEBRAS, FAMILY_SYMBOLS};
use kinegeo::exactnum::linalg::inertia;
use kinegeo::exactnum::{q, qf, rf, Point, Rational, RationalFn};
use kinegeo::liefields::*;
use proptest::prelude::*;

fn gen(sym: &str, i: usize) -> VectorField {
    generator(sym, i).unwrap_or_else(|| panic!("generator {} {}", sym, i))
}

fn constants(name: &str) -> StructureConstants {
    closure(&build_algebra(name).unwrap().basis).unwrap()
}

#[test]
fn bracket_of_field_with_itself_vanishes() {
    for sym in FAMILY_SYMBOLS {
        for x in family(sym).unwrap() {
            assert!(lie_bracket(&x, &x).is_zero(), "[{sym}, {sym}]");
        }
    }
}

#[test]
fn time_translation_with_galilean_boost_gives_translation() {
    for i in 1..=3 {
        assert_eq!(lie_bracket(&gen("H", 0), &gen("Kg", i)), gen("P", i));
    }
}

#[test]
fn rotations_follow_the_epsilon_convention() {
    // Frozen oracle: [J1, J2] - J3 = 0 and [J1, J2] + J3 ≠ 0.
    assert_eq!(lie_bracket(&gen("J", 1), &gen("J", 2)), gen("J", 3));
    assert_eq!(lie_bracket(&gen("J", 2), &gen("J", 3)), gen("J", 1));
    assert_eq!(lie_bracket(&gen("J", 3), &gen("J", 1)), gen("J", 2));
}

/// Poincaré constants `(a, b, k, value)` for `a < b`, slots `(H, P, K, J)`,
/// frozen from `python/oracles/derive.py`.
const POINCARE: [(usize, usize, usize, &str); 24] = [
    (0, 4, 1, "1"),
    (0, 5, 2, "1"),
    (0, 6, 3, "1"),
    (1, 4, 0, "c^-2"),
    (1, 8, 3, "1"),
    (1, 9, 2, "-1"),
    (2, 5, 0, "c^-2"),
    (2, 7, 3, "-1"),
    (2, 9, 1, "1"),
    (3, 6, 0, "c^-2"),
    (3, 7, 2, "1"),
    (3, 8, 1, "-1"),
    (4, 5, 9, "-1/c^2"),
    (4, 6, 8, "c^-2"),
    (4, 8, 6, "1"),
    (4, 9, 5, "-1"),
    (5, 6, 7, "-1/c^2"),
    (5, 7, 6, "-1"),
    (5, 9, 4, "1"),
    (6, 7, 5, "1"),
    (6, 8, 4, "-1"),
    (7, 8, 9, "1"),
    (7, 9, 8, "-1"),
    (8, 9, 7, "1"),
];

#[test]
fn poincare_structure_constants_match_oracle() {
    let sc = constants("p");
    for a in 0..DIM {
        for b in a + 1..DIM {
            for k in 0..DIM {
                let want = POINCARE
                    .iter()
                    .find(|e| (e.0, e.1, e.2) == (a, b, k))
                    .map_or(RationalFn::zero(), |e| rf(e.3));
                assert_eq!(sc.get(a, b, k), &want, "c[{a}][{b}][{k}]");
                assert_eq!(sc.get(b, a, k), &want.neg(), "c[{b}][{a}][{k}]");
            }
        }
    }
}

/// Killing form `B_ab = Σ c[a][k][m] c[b][m][k]` evaluated at `c = 3, l = 5`.
fn killing_inertia(sc: &StructureConstants) -> (usize, usize, usize) {
    let pt = Point::chart([q(0), q(0), q(0), q(0)], q(3), q(5));
    let m: Vec<Vec<Rational>> = (0..DIM)
        .map(|a| {
            (0..DIM)
                .map(|b| {
                    let mut s = RationalFn::zero();
                    for k in 0..DIM {
                        for n in 0..DIM {
                            s = s.add(&sc.get(a, k, n).mul(sc.get(b, n, k)));
                        }
                    }
                    s.eval(&pt).unwrap()
                })
                .collect()
        })
        .collect();
    inertia(&m)
}

#[test]
fn para_euclid_has_the_killing_form_of_iso4() {
    // iso(4): compact so(4) part (6 negative) plus a 4d abelian radical.
    assert_eq!(killing_inertia(&constants("e'")), (0, 6, 4));
    assert_eq!(killing_inertia(&constants("e")), (0, 6, 4));
    // iso(1,3) has a noncompact Levi part.
    assert_eq!(killing_inertia(&constants("p")), (3, 3, 4));
}

#[test]
fn quadratic_boost_escapes_the_span() {
    let mut basis = build_algebra("p").unwrap().basis;
    basis[4] = VectorField::new([kinegeo::catalog::poly("x1^2"), Default::default(), Default::default(), Default::default()]);
    assert!(matches!(closure(&basis), Err(ClosureError::NotClosed { .. })));
}

#[test]
fn wrong_dimension_and_dependent_bases_are_rejected() {
    let basis = build_algebra("p").unwrap().basis;
    assert_eq!(closure(&basis[..9]), Err(ClosureError::WrongDimension(9)));
    let mut dep = basis.clone();
    dep[2] = dep[1].scale(&q(2));
    assert!(matches!(closure(&dep), Err(ClosureError::DependentBasis { .. })));
}

#[test]
fn parity_and_time_reversal_on_poincare() {
    let sc = constants("p");
    assert!(is_automorphism(&sc, &Involution::parity()));
    assert!(is_automorphism(&sc, &Involution::time_reversal()));
    assert!(is_automorphism(&sc, &Involution::composite()));
    assert!(is_automorphism(&sc, &Involution::identity()));
}

#[test]
fn involutions_square_to_identity() {
    for inv in [Involution::identity(), Involution::parity(), Involution::time_reversal(), Involution::composite()] {
        assert!(inv.is_involutive(), "{:?}", inv.kind);
    }
    assert_eq!(Involution::parity().compose(&Involution::time_reversal()).signs, Involution::composite().signs);
}

#[test]
fn jacobi_on_de_sitter_and_trivial_cases() {
    let sc = constants("d_+");
    assert!(jacobi_check(&sc));
    assert!(jacobi_check(&StructureConstants::zero()));
    // Perturb [K1, K2] by +1 · P3: (K1, K2, P3) then violates Jacobi.
    let mut bad = sc.clone();
    bad.set(4, 5, 3, bad.get(4, 5, 3).add(&RationalFn::one()));
    bad.set(5, 4, 3, bad.get(5, 4, 3).sub(&RationalFn::one()));
    assert!(!jacobi_check(&bad));
    assert!(jacobi_violation(&bad).is_some());
}

#[test]
fn every_catalog_algebra_closes_with_so3_isotropy() {
    for row in ALGEBRAS.iter() {
        let alg = build_algebra(row.name).unwrap();
        assert_eq!(alg.basis.len(), DIM);
        let sc = closure(&alg.basis).unwrap_or_else(|e| panic!("{}: {}", row.name, e));
        assert!(sc.is_antisymmetric(), "{}", row.name);
        assert!(jacobi_check(&sc), "{}", row.name);
        assert!(rotations_close_as_so3(&sc), "{}", row.name);
        for x in &alg.basis {
            assert!(x.is_polynomial_in_coords() && x.coord_degree() <= 2, "{}", row.name);
        }
        for (i, x) in alg.basis.iter().enumerate() {
            for y in &alg.basis[i + 1..] {
                let b = lie_bracket(x, y);
                assert!(b.coord_degree() <= 2, "{}: bracket degree", row.name);
            }
        }
    }
}

#[test]
fn summation_identities_between_families() {
    let half = qf(1, 2);
    let avg = |a: &VectorField, b: &VectorField| a.add(b).scale(&half);
    let dif = |a: &VectorField, b: &VectorField| a.sub(b).scale(&half);
    assert_eq!(avg(&gen("H+", 0), &gen("H-", 0)), gen("H", 0));
    assert_eq!(dif(&gen("H+", 0), &gen("H-", 0)), gen("H'", 0));
    for i in 1..=3 {
        assert_eq!(avg(&gen("P+", i), &gen("P-", i)), gen("P", i));
        assert_eq!(dif(&gen("P+", i), &gen("P-", i)), gen("P'", i));
        assert_eq!(avg(&gen("K", i), &gen("N", i)), gen("Kg", i));
        assert_eq!(dif(&gen("K", i), &gen("N", i)), gen("Kc", i));
    }
}

fn catalog_field() -> impl Strategy<Value = VectorField> {
    (0..FAMILY_SYMBOLS.len(), 1..=3usize).prop_map(|(s, i)| gen(FAMILY_SYMBOLS[s], i))
}

fn small_rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| qf(n, d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn bracket_is_antisymmetric(x in catalog_field(), y in catalog_field()) {
        prop_assert_eq!(lie_bracket(&x, &y), lie_bracket(&y, &x).neg());
    }

    #[test]
    fn bracket_is_bilinear(x in catalog_field(), y in catalog_field(), z in catalog_field(), a in small_rational(), b in small_rational()) {
        let lhs = lie_bracket(&x.scale(&a).add(&y.scale(&b)), &z);
        let rhs = lie_bracket(&x, &z).scale(&a).add(&lie_bracket(&y, &z).scale(&b));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn vector_fields_satisfy_jacobi(x in catalog_field(), y in catalog_field(), z in catalog_field()) {
        prop_assert!(jacobi_fields(&x, &y, &z));
    }

    #[test]
    fn involution_image_is_still_closed(idx in 0..ALGEBRAS.len(), k in 0..3usize) {
        let alg = build_algebra(ALGEBRAS[idx].name).unwrap();
        let inv = [Involution::parity(), Involution::time_reversal(), Involution::composite()][k].clone();
        let image = apply_involution(&alg, &inv);
        prop_assert!(closure(&image.basis).is_ok());
        prop_assert_eq!(apply_involution(&image, &inv), alg);
    }
}
