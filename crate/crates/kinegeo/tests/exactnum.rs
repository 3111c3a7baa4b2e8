use kinegeo::exactnum::*;
use proptest::prelude::*;
use num_traits::Signed;

fn pt(x: [i64; 4], c: i64, l: i64) -> Point {
    Point::chart(x.map(q), q(c), q(l))
}

#[test]
fn difference_of_squares() {
    let a = rf("x1 + x2");
    let b = rf("x1 - x2");
    assert_eq!(a.mul(&b), rf("x1^2 - x2^2"));
    let p = MultiPoly::var(Var::X1).add(&MultiPoly::var(Var::X2));
    assert!(p.sub(&p).is_zero());
    assert_eq!(MultiPoly::var(Var::L).pow(2).mul(&MultiPoly::one()), MultiPoly::var(Var::L).pow(2));
}

#[test]
fn ratfn_cancellation() {
    let sigma = rf("1 + (x0^2 + x1^2)/l^2");
    assert!(sigma.recip().unwrap().mul(&sigma).is_one());
    let a = rf("x1/x0");
    assert!(a.sub(&a).is_zero());
    let r = a.div(&rf("1/x0")).unwrap();
    assert_eq!(r.as_poly(), Some(&MultiPoly::var(Var::X1)));
    assert_eq!(a.div(&RationalFn::zero()), Err(ExactError::DivisionByZeroFn));
}

#[test]
fn zero_decisions() {
    assert!(RationalFn::zero().is_zero());
    assert!(rf("(x0^2 - x0*x0)/l").is_zero());
    let sigma_e = rf("l^2 + x0^2 + x1^2 + x2^2 + x3^2");
    assert!(!sigma_e.is_zero());
    assert_eq!(sigma_e.eval(&pt([1, 0, 0, 0], 3, 5)).unwrap(), q(26));
}

#[test]
fn evaluation_oracles() {
    let sigma_e = rf("1 + (x0^2 + x1^2 + x2^2 + x3^2)/l^2");
    assert_eq!(sigma_e.eval(&pt([1, 0, 0, 0], 3, 5)).unwrap(), qf(26, 25));
    let sigma_minus = rf("1 + (x0^2 - x1^2 - x2^2 - x3^2)/l^2");
    assert_eq!(sigma_minus.eval(&pt([0, 1, 0, 0], 3, 5)).unwrap(), qf(24, 25));
    let f = rf("1/(x0 - x1)");
    assert_eq!(f.eval(&pt([2, 2, 0, 0], 1, 1)), Err(ExactError::PoleAtPoint));
    assert_eq!(rf("x0").eval(&Point::new()), Err(ExactError::UnboundVariable(Var::X0)));
}

#[test]
fn laurent_oracles() {
    // σ_r = 1 − eps² l⁻² (η x x) for l_r = l/eps.
    let f = rf("1/(1 - eps^2*(x0^2 - x1^2 - x2^2 - x3^2)/l^2)");
    let lim = laurent_limit(&f, 0);
    assert_eq!(lim.verdict, Verdict::Finite);
    assert!(lim.leading.is_one());
    let g = rf("eps^2 * (x0 + x1)/(l - x2)");
    assert_eq!(laurent_limit(&g, 0).verdict, Verdict::Zero);
    assert_eq!(laurent_limit(&g, -2).verdict, Verdict::Finite);
    let d = laurent_limit(&rf("1/eps^2"), 0);
    assert_eq!(d.verdict, Verdict::Divergent);
    assert_eq!(d.order, -2);
    assert_eq!(d.value(), Err(ExactError::DivergentLimit { order: -2 }));
    let h = laurent_limit(&rf("(eps*x0 + x1)/(eps^2 + l)"), 0);
    assert_eq!(h.leading, rf("x1/l"));
}

#[test]
fn derivative_quotient_rule() {
    let f = rf("x1/(1 - x0^2/l^2)");
    let d = f.deriv(Var::X0);
    assert_eq!(d, rf("2*x0*x1*l^2/(l^2 - x0^2)^2"));
    assert!(rf("c*l").deriv(Var::X0).is_zero());
}

#[test]
fn substitution() {
    let f = rf("l^2/(l^2 + x0^2)");
    let mut img: [Option<RationalFn>; NVARS] = Default::default();
    img[Var::L.index()] = Some(rf("l/eps"));
    let g = f.compose(&img).unwrap();
    assert_eq!(g, rf("l^2/(l^2 + eps^2*x0^2)"));
    let mut mono: [(Rational, Monomial); NVARS] = std::array::from_fn(|i| (q(1), Monomial::var(Var::from_index(i))));
    mono[Var::L.index()] = (q(1), Monomial::var(Var::L).mul(&Monomial::var_pow(Var::Eps, -1)));
    assert_eq!(f.subst_monomial(&mono), g);
}

#[test]
fn linear_algebra() {
    use kinegeo::exactnum::linalg::*;
    let m: Matrix<Rational> = vec![vec![q(2), q(1)], vec![q(1), q(3)]];
    assert_eq!(determinant(&m), q(5));
    assert_eq!(solve(&m, &[q(3), q(4)]).unwrap(), vec![q(1), q(1)]);
    let eta: Matrix<Rational> = (0..4)
        .map(|i| (0..4).map(|j| if i != j { q(0) } else if i == 0 { q(1) } else { q(-1) }).collect())
        .collect();
    assert_eq!(inertia(&eta), (1, 3, 0));
    let hyper: Matrix<Rational> = vec![vec![q(0), q(1)], vec![q(1), q(0)]];
    assert_eq!(inertia(&hyper), (1, 1, 0));
    let g: Matrix<RationalFn> = vec![vec![rf("1/(1 - x0^2/l^2)"), rf("x0")], vec![rf("x0"), rf("l")]];
    let inv = inverse(&g).unwrap();
    for i in 0..2 {
        for j in 0..2 {
            let s = (0..2).fold(RationalFn::zero(), |a, k| a.add(&g[i][k].mul(&inv[k][j])));
            assert_eq!(s, RationalFn::int((i == j) as i64));
        }
    }
}

#[test]
fn expression_errors() {
    assert_eq!(parse_expr("x0 + q").unwrap_err().offset, 5);
    assert!(parse_expr("(x0").is_err());
    assert!(parse_expr("1/(x0-x0)").is_err());
    assert_eq!(rf("x0^(-2)*x0^2"), RationalFn::one());
}

fn small_poly() -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec(((0i16..3, 0i16..3, -1i16..2, 0i16..2), -5i64..6), 1..5).prop_map(|ts| {
        MultiPoly::from_terms(
            ts.into_iter()
                .map(|((a, b, cc, d), k)| (Monomial([a, b, 0, 0, cc, d, 0]), q(k)))
                .collect(),
        )
    })
}

fn small_fn() -> impl Strategy<Value = RationalFn> {
    (small_poly(), small_poly(), 1i64..4).prop_map(|(n, d, k)| {
        let d = d.add(&MultiPoly::int(k).mul(&MultiPoly::var(Var::L).pow(3)));
        RationalFn::from_parts(n, &d).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn ring_axioms(a in small_fn(), b in small_fn(), c in small_fn()) {
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.add(&RationalFn::zero()), a.clone());
        prop_assert_eq!(a.mul(&RationalFn::one()), a.clone());
        prop_assert!(a.sub(&a).is_zero());
    }

    #[test]
    fn integral_domain(a in small_fn(), b in small_fn()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!(a.mul(&b).is_zero(), a.is_zero());
        let back = a.mul(&b).div(&b).unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn leibniz_rule(a in small_fn(), b in small_fn()) {
        let lhs = a.mul(&b).deriv(Var::X0);
        let rhs = a.deriv(Var::X0).mul(&b).add(&a.mul(&b.deriv(Var::X0)));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn randomized_check_never_contradicts(a in small_fn(), b in small_fn(), seed in 0u64..1000) {
        let id = a.add(&b).mul(&a.sub(&b)).sub(&a.mul(&a).sub(&b.mul(&b)));
        prop_assert!(id.is_zero());
        prop_assert!(probably_zero(&id, seed, 4));
        let nz = a.add(&b);
        if !probably_zero(&nz, seed, 4) {
            prop_assert!(!nz.is_zero());
        }
        if !nz.is_zero() {
            prop_assert!(!probably_zero(&nz, seed, 6));
        }
    }

    #[test]
    fn laurent_agrees_with_evaluation(n in small_poly(), k in 1i64..4) {
        // f(eps) = n(eps·x0, …)/(l³ + eps) has a finite leading term n(0,…)/l³ when n has one.
        let f = RationalFn::from_parts(
            n.map_monomial(&std::array::from_fn(|i| {
                let v = Var::from_index(i);
                if v == Var::X0 { (q(1), Monomial([1, 0, 0, 0, 0, 0, 1])) } else { (q(1), Monomial::var(v)) }
            })),
            &MultiPoly::var(Var::L).pow(3).add(&MultiPoly::var(Var::Eps).scale(&q(k))),
        ).unwrap();
        let lim = laurent_limit(&f, 0);
        prop_assume!(lim.verdict == Verdict::Finite);
        let base = pt([2, 3, 0, 0], 1, 2);
        let target = lim.leading.eval(&base).unwrap();
        let mut prev: Option<Rational> = None;
        for j in 16..21 {
            let p = base.clone().with(Var::Eps, qf(1, 1i64 << j));
            let err = (f.eval(&p).unwrap() - &target).abs();
            if let Some(pe) = &prev { prop_assert!(err <= *pe); }
            prev = Some(err);
        }
    }
}
