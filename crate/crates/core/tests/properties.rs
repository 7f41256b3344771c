use proptest::prelude::*;

use sheffer_core::catalog::{catalog, gould_hopper, lookup, FamilyKind};
use sheffer_core::engine::MixedFamily;
use sheffer_core::operator::{exp_operator, LinOp};
use sheffer_core::{Monomial, MultiPoly, PolySeries, Rational, ScalarSeries, Var};

fn rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=5).prop_map(|(p, q)| Rational::new(p, q))
}

fn poly(max_degree: u32) -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec(((0..=max_degree), (0..=max_degree), (0..=max_degree), rational()), 0..5)
        .prop_map(|terms| {
            MultiPoly::from_terms(
                terms
                    .into_iter()
                    .map(|(a, b, c, q)| (Monomial::new(a, b, c), q)),
            )
        })
}

fn scalar_series(order: usize) -> impl Strategy<Value = ScalarSeries> {
    prop::collection::vec(rational(), order + 1).prop_map(ScalarSeries::new)
}

fn delta_series(order: usize) -> impl Strategy<Value = ScalarSeries> {
    (scalar_series(order), rational().prop_filter("nonzero", |q| !q.is_zero())).prop_map(
        |(s, lead)| {
            let mut c = s.into_coeffs();
            c[0] = Rational::zero();
            c[1] = lead;
            ScalarSeries::new(c)
        },
    )
}

fn poly_series(order: usize) -> impl Strategy<Value = PolySeries> {
    prop::collection::vec(poly(2), order + 1).prop_map(PolySeries::new)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn poly_ring_axioms(a in poly(3), b in poly(3), c in poly(3)) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn poly_degree_laws(a in poly(3), b in poly(3)) {
        if let (Some(da), Some(db)) = (a.degree(), b.degree()) {
            prop_assert_eq!((&a * &b).degree(), Some(da + db));
            if let Some(ds) = (&a + &b).degree() {
                prop_assert!(ds <= da.max(db));
            }
        }
    }

    #[test]
    fn series_ring_axioms(a in poly_series(4), b in poly_series(4), c in poly_series(4)) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
    }

    #[test]
    fn scalar_series_ring_axioms(a in scalar_series(6), b in scalar_series(6), c in scalar_series(6)) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
    }

    #[test]
    fn exp_log_inverse(d in delta_series(6)) {
        let e = d.exp().unwrap();
        prop_assert_eq!(e.constant_term(), &Rational::one());
        prop_assert_eq!(e.log().unwrap(), d.clone());
        let unit = d.add(&ScalarSeries::one(6));
        prop_assert_eq!(unit.log().unwrap().exp().unwrap(), unit);
    }

    #[test]
    fn poly_exp_log_consistency(a in poly_series(4)) {
        let mut c = a.into_coeffs();
        c[0] = MultiPoly::zero();
        let a = PolySeries::new(c);
        // exp(a) exp(-a) = 1
        prop_assert_eq!(a.exp().unwrap().mul(&a.neg().exp().unwrap()), PolySeries::one(4));
    }

    #[test]
    fn inverse_roundtrip(f in delta_series(7)) {
        let h = f.comp_inverse().unwrap();
        let t = ScalarSeries::t(7);
        prop_assert_eq!(f.compose(&h).unwrap(), t.clone());
        prop_assert_eq!(h.compose(&f).unwrap(), t);
        prop_assert_eq!(f.lagrange_inverse().unwrap(), h);
    }

    #[test]
    fn truncation_consistency(f in delta_series(8), m in 1usize..8) {
        let small = f.truncate(m);
        prop_assert_eq!(f.comp_inverse().unwrap().truncate(m), small.comp_inverse().unwrap());
        prop_assert_eq!(f.exp().unwrap().truncate(m), small.exp().unwrap());
        let unit = f.add(&ScalarSeries::one(8));
        prop_assert_eq!(unit.reciprocal().unwrap().truncate(m), unit.truncate(m).reciprocal().unwrap());
    }

    #[test]
    fn operator_linearity(p in poly(3), q in poly(3), alpha in rational(), beta in rational()) {
        let fam = MixedFamily::new(lookup("bernoulli2").unwrap(), FamilyKind::S { r: 2 }, 9).unwrap();
        let ops = vec![
            fam.multiplicative_op().unwrap(),
            fam.derivative_op(),
            LinOp::InvDeriv(Var::X),
            MixedFamily::new(lookup("hahn").unwrap(), FamilyKind::R { r: 3 }, 9)
                .unwrap()
                .multiplicative_op()
                .unwrap(),
        ];
        let combo = &p.scale(&alpha) + &q.scale(&beta);
        for op in ops {
            let lhs = op.apply(&combo).unwrap();
            let rhs = &op.apply(&p).unwrap().scale(&alpha) + &op.apply(&q).unwrap().scale(&beta);
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn derivative_undoes_inverse_derivative(p in poly(5)) {
        for v in Var::ALL {
            let dinv = LinOp::compose(vec![LinOp::Deriv(v), LinOp::InvDeriv(v)]);
            prop_assert_eq!(dinv.apply(&p).unwrap(), p.clone());
            let shifted = LinOp::MulVar(v).apply(&p).unwrap();
            let invd = LinOp::compose(vec![LinOp::InvDeriv(v), LinOp::Deriv(v)]);
            prop_assert_eq!(invd.apply(&shifted).unwrap(), shifted);
        }
    }
}

#[test]
fn gould_hopper_quasi_monomiality() {
    for s in 2..=4u32 {
        let ys = MultiPoly::var(Var::Y).scale(&Rational::from_integer(s as i64));
        let raise = LinOp::sum(vec![
            LinOp::MulVar(Var::X),
            LinOp::mul_poly(&ys).then_after(LinOp::deriv_pow(Var::X, s - 1)),
        ]);
        for n in 0..=11 {
            let h = gould_hopper(n, s).unwrap();
            assert_eq!(raise.apply(&h).unwrap(), gould_hopper(n + 1, s).unwrap());
            let lowered = h.derivative(Var::X);
            let expected = if n == 0 {
                MultiPoly::zero()
            } else {
                gould_hopper(n - 1, s).unwrap().scale(&Rational::from_integer(n as i64))
            };
            assert_eq!(lowered, expected);
        }
        let v = sheffer_core::operator::commutator(&LinOp::Deriv(Var::X), &raise, 8).unwrap();
        assert!(v.is_pass());
    }
}

#[test]
fn tricomi_operational_identity() {
    for alpha in [Rational::one(), Rational::new(-2, 3), Rational::from_integer(3)] {
        let c0 = sheffer_core::catalog::tricomi_c(0, 12);
        for d in 0..=12usize {
            let lhs = exp_operator(
                &[(MultiPoly::constant(-alpha.clone()), LinOp::InvDeriv(Var::X))],
                &MultiPoly::one(),
                Some(d),
            )
            .unwrap();
            let rhs = MultiPoly::from_terms((0..=d).map(|k| {
                (
                    Monomial::new(k as u32, 0, 0),
                    c0.coeff(k) * alpha.pow(k as i32),
                )
            }));
            assert_eq!(lhs, rhs, "alpha={alpha} d={d}");
        }
    }
}

#[test]
fn claimed_series_are_consistent() {
    let order = 12;
    for pair in catalog() {
        let (a, h) = pair.a_h(order).unwrap();
        if let Some(claimed) = pair.claimed_h(order) {
            assert_eq!(h, claimed, "{}", pair.name);
        }
        if let Some(claimed) = pair.claimed_a(order) {
            assert_eq!(a, claimed, "{}", pair.name);
        }
        assert!(!pair.g(order).constant_term().is_zero());
        assert!(!pair.f(order).coeff(1).is_zero());
    }
}

#[test]
fn s_type_members_respect_weighted_degree() {
    for pair in catalog() {
        for r in [2, 3] {
            let fam = MixedFamily::new(pair.clone(), FamilyKind::S { r }, 8).unwrap();
            for n in 0..=8 {
                let member = fam.member(n).unwrap();
                if let Some(d) = sheffer_core::catalog::weighted_degree(&member, r) {
                    assert!(d <= n as u32, "{} n={n}", fam.id());
                }
                assert!(member.degree().unwrap_or(0) <= n as u32);
            }
        }
    }
}

#[test]
fn family_invariants_across_catalog() {
    for pair in catalog() {
        for kind in [FamilyKind::S { r: 2 }, FamilyKind::R { r: 3 }] {
            let fam = MixedFamily::new(pair.clone(), kind, 8).unwrap();
            assert!(fam.generating_function_check().unwrap().is_pass(), "{}", fam.id());
            for n in 0..=6 {
                assert!(fam.associated_check(n).unwrap().is_pass(), "{} n={n}", fam.id());
                assert!(fam.appell_check(n).unwrap().is_pass(), "{} n={n}", fam.id());
            }
            let m0 = fam.member(0).unwrap();
            assert_eq!(m0, MultiPoly::constant(fam.a().constant_term().clone()));
        }
    }
}
