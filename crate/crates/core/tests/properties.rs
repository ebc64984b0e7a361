//! Randomized invariants of the algebra kernel, the torus geometry, the germ
//! classifier and the intersection calculator.

use num_traits::Zero;
use proptest::prelude::*;

use v22_core::catalog::Catalog;
use v22_core::chowcalc::{formal, hb_intersect, triple, ChowContext, ChowExpr, HbClass};
use v22_core::curvelab::{act, coprimality_loci, image_degree, System};
use v22_core::exactalg::mpoly::var_list;
use v22_core::exactalg::rat::rat;
use v22_core::exactalg::resultant::dense;
use v22_core::exactalg::{parse_poly, MPoly, Scalar, UPolyU};
use v22_core::germlab::classify_plane_germ;
use v22_core::torusgeom::{apply_involution, orbit_info, weight_of, WeightVector, WeightedPoint, P4_VARS};

mod common;
use common::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn ring_axioms(a in xy(), b in xy(), c in xy()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a + &(-&a)).is_zero());
        let one = MPoly::constant(var_list(&XY), Scalar::one());
        prop_assert_eq!(&a * &one, a.clone());
    }

    #[test]
    fn substitution_is_a_ring_map(a in xy(), b in xy(), p in mpoly_in(&["x", "y", "z"]), q in mpoly_in(&["x", "y", "z"])) {
        let phi = |f: &MPoly| f.substitute(&[("x", p.clone()), ("y", q.clone())]).unwrap();
        prop_assert_eq!(phi(&(&a + &b)), &phi(&a) + &phi(&b));
        prop_assert_eq!(phi(&(&a * &b)), &phi(&a) * &phi(&b));
    }

    #[test]
    fn specializing_u_is_a_ring_map(a in xy(), b in xy(), r in prop::sample::select(vec![rat(-1, 1), rat(1, 2), rat(5, 1), rat(7, 3)])) {
        let v = Scalar::Rat(r);
        let s = |f: &MPoly| f.subst_u(&v).unwrap();
        prop_assert_eq!(s(&(&a + &b)), &s(&a) + &s(&b));
        prop_assert_eq!(s(&(&a * &b)), &s(&a) * &s(&b));
    }

    #[test]
    fn print_then_parse(a in xy()) {
        let back = parse_poly(&a.to_string(), &XY).unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn exact_division(a in xy(), b in xy()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!((&a * &b).divide_exact(&b).unwrap(), a);
    }

    #[test]
    fn quadratic_extension_norm(p in scalar(), q in scalar(), k in prop::sample::select(vec![2i64, 3, 5, -1])) {
        // radicand u + k is never a square
        let d = Scalar::from(UPolyU::from_ints(&[k, 1]));
        let root = d.sqrt().unwrap();
        let x = &p + &(&q * &root);
        let y = &p - &(&q * &root);
        prop_assert_eq!(&x * &y, &(&p * &p) - &(&(&q * &q) * &d));
    }
}

/// Coefficients in `Q[u]`; quotients make the elimination oracle very slow.
fn poly_scalar() -> impl Strategy<Value = Scalar> {
    prop_oneof![small_rat().prop_map(Scalar::Rat), upoly().prop_map(Scalar::from)]
}

fn dense_poly() -> impl Strategy<Value = Vec<Scalar>> {
    prop::collection::vec(poly_scalar(), 2..=5).prop_filter("nonzero leading coefficient", |v| !v.last().unwrap().is_zero())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn resultant_matches_sylvester(f in dense_poly(), g in dense_poly()) {
        prop_assert_eq!(dense::resultant(&f, &g).unwrap(), det(sylvester(&f, &g)));
    }
}

#[test]
fn resultant_matches_sylvester_on_conic_pairs() {
    let cat = Catalog::standard();
    let loci = coprimality_loci(cat).unwrap();
    assert_eq!(loci.len(), 21);
    for pl in loci {
        let oracle = det(sylvester(&dense_q(cat, pl.i), &dense_q(cat, pl.j)));
        assert_eq!(Scalar::from(pl.resultant.clone()), oracle, "q{}, q{}", pl.i, pl.j);
    }
}

// ---------------------------------------------------------------------------
// torus

fn p4_monomial() -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(0u32..=3, 5)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn weights_add_and_involution_reflects(e1 in p4_monomial(), e2 in p4_monomial()) {
        let vars = var_list(&P4_VARS);
        let w = WeightVector::p4();
        let m1 = MPoly::monomial(vars.clone(), e1.clone(), Scalar::one());
        let m2 = MPoly::monomial(vars.clone(), e2, Scalar::one());
        let (w1, w2) = (weight_of(&m1, &w).unwrap(), weight_of(&m2, &w).unwrap());
        prop_assert_eq!(weight_of(&(&m1 * &m2), &w).unwrap(), w1 + w2);
        let d: u32 = e1.iter().sum();
        prop_assert_eq!(weight_of(&apply_involution(&m1).unwrap(), &w).unwrap(), 6 * d as i64 - w1);
    }

    #[test]
    fn involution_is_an_involution(p in mpoly_in(&P4_VARS)) {
        prop_assert_eq!(apply_involution(&apply_involution(&p).unwrap()).unwrap(), p);
    }

    #[test]
    fn orbit_data_is_torus_invariant(coords in prop::collection::vec(small_rat(), 5), l in small_rat(), c in small_rat()) {
        prop_assume!(!l.is_zero() && !c.is_zero() && coords.iter().any(|x| !x.is_zero()));
        let s: Vec<Scalar> = coords.into_iter().map(Scalar::Rat).collect();
        let base = WeightedPoint::new(s.clone(), WeightVector::p4()).unwrap();
        let moved = WeightedPoint::new(act(&s, &Scalar::Rat(l)), WeightVector::p4()).unwrap();
        let scaled = WeightedPoint::new(s.iter().map(|x| x * &Scalar::Rat(c.clone())).collect(), WeightVector::p4()).unwrap();
        prop_assert_eq!(orbit_info(&moved), orbit_info(&base));
        prop_assert_eq!(orbit_info(&scaled), orbit_info(&base));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    /// Orbits of points of the conic of involution-fixed points, away from S,
    /// Delta and Upsilon, map to curves of degree 10 or 12.
    #[test]
    fn conic_orbits_have_degree_10_or_12(
        a in -5i64..=5, b in -5i64..=5,
        u in prop::sample::select(vec![rat(2, 1), rat(3, 1), rat(-1, 1), rat(1, 2), rat(3, 4), rat(-2, 1), rat(5, 3), rat(2, 3)]),
    ) {
        let cat = Catalog::standard().at(&u).unwrap();
        let pt = [Scalar::Rat(rat(a, 1)), Scalar::Rat(rat(b, 1))];
        let conic = cat.curve("conic").unwrap();
        let coords: Vec<Scalar> = conic.coords.iter().map(|c| c.eval(&pt).unwrap()).collect();
        prop_assume!(coords.iter().any(|c| !c.is_zero()));
        prop_assume!(!cat.p("f").eval(&coords).unwrap().is_zero());
        // Delta is y = t = 0 and Upsilon is x = w = 0
        prop_assume!(!(coords[1].is_zero() && coords[3].is_zero()));
        prop_assume!(!(coords[0].is_zero() && coords[4].is_zero()));
        let info = image_degree(&cat, System::Zeta, &coords).unwrap();
        prop_assert!(info.degree == 10 || info.degree == 12, "degree {} at ({a}, {b}), u = {u}", info.degree);
    }
}

// ---------------------------------------------------------------------------
// germs

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn germ_type_survives_linear_coordinate_changes(m in unimodular(), idx in 0usize..10) {
        let (g, kind) = germs().swap_remove(idx);
        let h = linear_change(&g, &m);
        prop_assert_eq!(classify_plane_germ(&g).unwrap().kind, kind);
        prop_assert_eq!(classify_plane_germ(&h).unwrap().kind, kind);
    }
}

// ---------------------------------------------------------------------------
// intersection numbers

fn chow_expr() -> impl Strategy<Value = ChowExpr> {
    (-4i64..=4, -4i64..=4).prop_map(|(h, e)| ChowExpr::ints(h, e))
}

fn context() -> impl Strategy<Value = ChowContext> {
    prop::sample::select(vec![ChowContext::v22(2), ChowContext::v22(4), ChowContext::v22(6), ChowContext::quadric(6)])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn triple_is_symmetric_and_multilinear(ctx in context(), a in chow_expr(), b in chow_expr(), c in chow_expr(), d in chow_expr()) {
        let t = triple(&ctx, &a, &b, &c);
        prop_assert_eq!(&t, &triple(&ctx, &b, &a, &c));
        prop_assert_eq!(&t, &triple(&ctx, &c, &b, &a));
        prop_assert_eq!(&t, &triple(&ctx, &a, &c, &b));
        prop_assert_eq!(triple(&ctx, &(&a + &d), &b, &c), &t + &triple(&ctx, &d, &b, &c));
    }

    #[test]
    fn hirzebruch_form_is_symmetric_bilinear(s1 in -5i64..=5, l1 in -5i64..=5, s2 in -5i64..=5, l2 in -5i64..=5, n in 0i64..=4) {
        let nn = n.to_string();
        let a = HbClass::parse(&nn, &s1.to_string(), &l1.to_string());
        let b = HbClass::parse(&nn, &s2.to_string(), &l2.to_string());
        let ab = hb_intersect(&a, &b).unwrap();
        prop_assert_eq!(&ab, &hb_intersect(&b, &a).unwrap());
        prop_assert_eq!(ab, formal(&(-n * s1 * s2 + s1 * l2 + s2 * l1).to_string()));
        let two = &a + &a;
        prop_assert_eq!(hb_intersect(&two, &b).unwrap(), &hb_intersect(&a, &b).unwrap() + &hb_intersect(&a, &b).unwrap());
    }
}
