mod common;

use common::*;
use num_traits::One;
use proptest::prelude::*;
use relfrac_core::graph::*;
use relfrac_core::hom::find_homomorphism;
use relfrac_core::mis::independence_number;
use relfrac_core::relfrac::*;
use relfrac_core::symmetry::is_vertex_transitive;
use relfrac_core::{Budget, Graph, Rational};

fn b() -> Budget {
    Budget::default()
}

fn lp(g: &Graph, h: &Graph) -> Rational {
    relfrac_lp(g, h, &b()).unwrap().value
}

fn auto(g: &Graph, h: &Graph) -> Rational {
    relfrac(g, h, MethodChoice::Auto, false, &b()).unwrap().value
}

fn astar(g: &Graph) -> Rational {
    fractional_independence(g, &b()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn lp_matches_exhaustive_lp(g in arb_graph(1, 4), h in arb_graph(1, 4)) {
        prop_assume!(g.n() * h.n() <= 16);
        let r = relfrac_lp(&g, &h, &b()).unwrap();
        prop_assert_eq!(&r.value, &brute_relfrac(&g, &h));
        prop_assert_eq!(r.weights.iter().sum::<Rational>(), r.value.clone());
        let cert = r.dual_cert.expect("lp route returns a certificate");
        prop_assert!(verify_distribution(&cert, &r.value, &g, &h).is_ok());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn sandwich(g in arb_graph(1, 8), h in arb_graph(1, 8)) {
        let v = lp(&g, &h);
        let (ag, ah) = (independence_number(&g, &b()).unwrap(), independence_number(&h, &b()).unwrap());
        prop_assert!(frac(ag, ah) <= v);
        prop_assert!(astar(&g) / astar(&h) <= v);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn reciprocal(g in arb_graph(1, 6), h in arb_graph(1, 6)) {
        prop_assert!(lp(&g, &h) * lp(&h, &g) >= Rational::one());
    }

    #[test]
    fn relative_to_third_graph(g in arb_graph(1, 5), h in arb_graph(1, 5), w in arb_graph(1, 5)) {
        let gh = lp(&g, &h);
        let hg = lp(&h, &g);
        let mid = lp(&g, &w) / lp(&h, &w);
        prop_assert!(Rational::one() / hg <= mid.clone());
        prop_assert!(mid <= gh);
    }

    #[test]
    fn unions_and_joins(g1 in arb_graph(1, 4), g2 in arb_graph(1, 4), h in arb_graph(1, 4)) {
        let (a1, a2) = (lp(&g1, &h), lp(&g2, &h));
        prop_assert!(lp(&disjoint_union(&g1, &g2), &h) <= &a1 + &a2);
        let join = complement(&disjoint_union(&g1, &g2));
        let p1 = lp(&complement(&g1), &h);
        let p2 = lp(&complement(&g2), &h);
        prop_assert_eq!(lp(&join, &h), p1.max(p2));
    }

    #[test]
    fn harmonic_in_h(g in arb_graph(1, 4), h1 in arb_graph(1, 4), h2 in arb_graph(1, 4)) {
        let one = Rational::one();
        let lhs = &one / lp(&g, &h1) + &one / lp(&g, &h2);
        let rhs = &one / lp(&g, &disjoint_union(&h1, &h2));
        prop_assert!(lhs <= rhs);
    }

    #[test]
    fn harmonic_equality_for_transitive(g in arb_circulant(2, 6), h1 in arb_graph(1, 4), h2 in arb_graph(1, 4)) {
        let one = Rational::one();
        let lhs = &one / lp(&g, &h1) + &one / lp(&g, &h2);
        prop_assert_eq!(lhs, &one / lp(&g, &disjoint_union(&h1, &h2)));
    }

    #[test]
    fn product_against_itself(g in arb_graph(1, 4), h in arb_graph(1, 3)) {
        prop_assert_eq!(lp(&strong_product(&g, &h), &h), astar(&g));
    }

    #[test]
    fn complement_duality(g in arb_circulant(2, 6), h in arb_circulant(2, 6)) {
        let lhs = auto(&g, &h);
        let rhs = frac(g.n(), h.n()) * auto(&complement(&h), &complement(&g));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn disjunctive_bounds_strong(g in arb_circulant(2, 4), h in arb_circulant(2, 5)) {
        let lhs = astar(&disjunctive_product(&g, &h));
        prop_assert!(lhs >= int(independence_number(&strong_product(&g, &h), &b()).unwrap()));
    }

    #[test]
    fn routes_agree_for_transitive(g in arb_circulant(2, 7), h in arb_graph(1, 6)) {
        let a = independence_number(&strong_product(&complement(&g), &h), &b()).unwrap();
        prop_assert_eq!(lp(&g, &h), frac(g.n(), a));
        prop_assert_eq!(relfrac_vertex_transitive(&g, &h, &b()).unwrap().value, frac(g.n(), a));
    }

    #[test]
    fn gamma_chain(g in arb_graph(1, 5), h in arb_graph(1, 5)) {
        let v = lp(&g, &h);
        let ratio = frac(independence_number(&g, &b()).unwrap(), independence_number(&h, &b()).unwrap());
        prop_assert!(ratio <= v);
        let g1 = gamma1_certificate(&g, &h, &b()).unwrap();
        prop_assert_eq!(&g1.value, &GammaValue::Finite(v.clone()));
        if let Some(d) = &g1.distribution {
            prop_assert!(verify_distribution(d, &v, &g, &h).is_ok());
        }
        if let GammaValue::Finite(x) = gamma0(&g, &h, &b()).unwrap().value {
            prop_assert!(v <= x);
        }
    }

    #[test]
    fn no_homomorphism_bound(g in arb_circulant(2, 7), h in arb_graph(1, 6)) {
        if find_homomorphism(&h, &g, &b()).unwrap().is_some() {
            prop_assert!(lp(&g, &h) <= frac(g.n(), h.n()));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(15))]

    #[test]
    fn submultiplicative(g1 in arb_graph(1, 3), g2 in arb_graph(1, 3), h1 in arb_graph(1, 3), h2 in arb_graph(1, 3)) {
        let whole = lp(&strong_product(&g1, &g2), &strong_product(&h1, &h2));
        prop_assert!(whole <= lp(&g1, &h1) * lp(&g2, &h2));
    }
}

#[test]
fn common_maximizer() {
    let k1 = make_complete(1);
    let c5 = make_cycle(5).unwrap();
    for other in [make_complete(2), make_path(3), make_cycle(4).unwrap(), Graph::empty(2)] {
        let g = strong_product(&c5, &other);
        let w = maximizer_witness(&g, &k1, &b()).unwrap();
        let aw = independence_number(&w.graph, &b()).unwrap();
        for part in [&c5, &other] {
            let a = independence_number(&strong_product(part, &w.graph), &b()).unwrap();
            assert_eq!(frac(a, aw), astar(part));
        }
    }
}

#[test]
fn power_scaling_odd_cycles() {
    let (c5, c7) = (make_cycle(5).unwrap(), make_cycle(7).unwrap());
    let g = strong_product(&c5, &c5);
    let h = strong_product(&c7, &c7);
    assert!(is_vertex_transitive(&g));
    assert_eq!(auto(&g, &h), frac(25, 49));
}
