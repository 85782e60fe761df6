mod common;

use common::*;
use proptest::prelude::*;
use relfrac_core::genind::generalized_independence;
use relfrac_core::graph::*;
use relfrac_core::mis::*;
use relfrac_core::relfrac::fractional_independence;
use relfrac_core::{Budget, Graph, Rational};

fn with_edge(g: &Graph, u: usize, v: usize) -> Graph {
    let mut e = g.edges();
    if u != v && !g.has_edge(u, v) {
        e.push((u.min(v), u.max(v)));
    }
    Graph::from_edges(g.n(), &e).unwrap()
}

fn without_vertex(g: &Graph, v: usize) -> Graph {
    let keep: Vec<usize> = (0..g.n()).filter(|&u| u != v).collect();
    g.induced(&keep)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn mis_matches_brute_force(g in arb_graph(0, 16)) {
        let r = max_independent_set(&g, &Budget::default()).unwrap();
        let bf = brute_force_mis(&g).unwrap();
        prop_assert_eq!(r.value, bf.value);
        prop_assert_eq!(&r.witness, &bf.witness);
        prop_assert!(g.is_independent(&r.witness));
        prop_assert_eq!(r.value, brute_alpha(&g));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn monotone_under_mutation(g in arb_graph(2, 12), a in any::<usize>(), c in any::<usize>()) {
        let b = Budget::default();
        let (u, v) = (a % g.n(), c % g.n());
        let base = independence_number(&g, &b).unwrap();
        prop_assert!(independence_number(&with_edge(&g, u, v), &b).unwrap() <= base);
        prop_assert!(independence_number(&without_vertex(&g, u), &b).unwrap() <= base);
    }

    #[test]
    fn union_adds(g in arb_graph(0, 10), h in arb_graph(0, 10)) {
        let b = Budget::default();
        let u = disjoint_union(&g, &h);
        prop_assert_eq!(independence_number(&u, &b).unwrap(), independence_number(&g, &b).unwrap() + independence_number(&h, &b).unwrap());
    }

    #[test]
    fn product_with_complete(g in arb_graph(1, 6), h in arb_graph(1, 6), k in 1usize..4) {
        let b = Budget::default();
        let (ag, ah) = (brute_alpha(&g), brute_alpha(&h));
        prop_assert!(independence_number(&strong_product(&g, &h), &b).unwrap() >= ag * ah);
        prop_assert_eq!(independence_number(&strong_product(&g, &make_complete(k)), &b).unwrap(), ag);
        prop_assert_eq!(independence_number(&strong_product(&make_complete(k), &h), &b).unwrap(), ah);
    }

    #[test]
    fn weighted_matches_brute_force(g in arb_graph(0, 12), ws in proptest::collection::vec((0u32..6, 1u32..4), 12)) {
        let w: Vec<Rational> = ws[..g.n()].iter().map(|&(p, q)| frac(p as usize, q as usize)).collect();
        let r = max_weight_independent_set(&g, &w, &Budget::default()).unwrap();
        prop_assert_eq!(&r.value, &brute_weighted(&g, &w));
        prop_assert!(g.is_independent(&r.witness));
        prop_assert_eq!(r.witness.iter().map(|v| w[v].clone()).sum::<Rational>(), r.value);
    }

    #[test]
    fn cliques_match_brute_force(g in arb_graph(1, 10)) {
        let found: Vec<u64> = enumerate_maximal_cliques(&g, &Budget::default()).unwrap()
            .iter().map(|c| c.iter().fold(0u64, |m, v| m | 1 << v)).collect();
        let mut a = found.clone();
        a.sort();
        a.dedup();
        prop_assert_eq!(a.len(), found.len());
        let mut bf = brute_maximal_cliques(&g);
        bf.sort();
        prop_assert_eq!(a, bf);
    }

    #[test]
    fn maximal_sets_are_cliques_of_complement(g in arb_graph(1, 10)) {
        let b = Budget::default();
        let mis = enumerate_maximal_independent_sets(&g, &b).unwrap();
        let cl = enumerate_maximal_cliques(&complement(&g), &b).unwrap();
        prop_assert_eq!(mis, cl);
    }

    #[test]
    fn chromatic_is_valid(g in arb_graph(1, 9)) {
        let (k, classes) = chromatic_number(&g, &Budget::default()).unwrap();
        prop_assert_eq!(classes.len(), k);
        prop_assert!(classes.iter().all(|c| g.is_independent(c)));
        prop_assert_eq!(classes.iter().map(|c| c.len()).sum::<usize>(), g.n());
        // no colouring with k-1 colours: brute force over assignments
        if k > 1 && g.n() <= 7 {
            let n = g.n();
            let kk = k - 1;
            let total = kk.pow(n as u32);
            let ok = (0..total).any(|mut code| {
                let mut col = vec![0; n];
                for c in col.iter_mut() { *c = code % kk; code /= kk; }
                g.edges().iter().all(|&(u, v)| col[u] != col[v])
            });
            prop_assert!(!ok);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn generalized_superadditive(g in arb_graph(1, 8), k1 in 1usize..3, k2 in 1usize..3) {
        let b = Budget::default();
        let a1 = generalized_independence(&g, k1, &b).unwrap();
        let a2 = generalized_independence(&g, k2, &b).unwrap();
        let a12 = generalized_independence(&g, k1 + k2, &b).unwrap();
        prop_assert!(a1.value + a2.value <= a12.value);
        prop_assert!(a12.is_feasible(&g, &b).unwrap());
        let star = fractional_independence(&g, &b).unwrap();
        for r in [&a1, &a2, &a12] {
            prop_assert!(int(r.value) <= int(r.k) * star.clone());
        }
        prop_assert_eq!(generalized_independence(&g, 1, &b).unwrap().value, brute_alpha(&g));
    }
}

#[test]
fn generalized_on_cycles() {
    let b = Budget::default();
    assert_eq!(generalized_independence(&make_cycle(5).unwrap(), 1, &b).unwrap().value, 2);
    assert_eq!(generalized_independence(&make_cycle(5).unwrap(), 2, &b).unwrap().value, 5);
    assert_eq!(generalized_independence(&make_cycle(7).unwrap(), 2, &b).unwrap().value, 7);
}

#[test]
fn known_mis_values() {
    let b = Budget::default();
    let c5 = make_cycle(5).unwrap();
    let c7 = make_cycle(7).unwrap();
    assert_eq!(independence_number(&c5, &b).unwrap(), 2);
    assert_eq!(independence_number(&strong_product(&c5, &c5), &b).unwrap(), 5);
    assert_eq!(independence_number(&strong_product(&c7, &c5), &b).unwrap(), 7);
    assert_eq!(independence_number(&make_johnson3(6).unwrap(), &b).unwrap(), 4);
    assert_eq!(brute_force_mis(&make_petersen()).unwrap().value, 4);
    let w = vec![int(1), int(1), int(1), int(1), int(3)];
    let r = max_weight_independent_set(&c5, &w, &b).unwrap();
    assert_eq!(r.value, int(4));
    assert!(r.witness.contains(4));
}
