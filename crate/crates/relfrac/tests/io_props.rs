use proptest::prelude::*;
use relfrac::io::{parse_edge_list, parse_graph, to_edge_list, to_json_value};
use relfrac::report::{decimal, parse_script, script};
use relfrac_core::expand::{ExpandOp, ExpandScript};
use relfrac_core::{Graph, Rational};

fn arb_graph() -> impl Strategy<Value = Graph> {
    (0usize..12).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut it = bits.into_iter();
            for u in 0..n {
                for v in u + 1..n {
                    if it.next().unwrap() {
                        edges.push((u, v));
                    }
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

fn arb_op() -> impl Strategy<Value = ExpandOp> {
    prop_oneof![
        (0usize..50).prop_map(|v| ExpandOp::RemoveVertex { v }),
        (0usize..50, 1usize..6).prop_map(|(v, k)| ExpandOp::ReplaceByClique { v, k }),
        (0usize..50, 0usize..50).prop_map(|(u, w)| ExpandOp::AddEdge { u, w }),
    ]
}

proptest! {
    #[test]
    fn edge_list_round_trip(g in arb_graph()) {
        prop_assert_eq!(parse_edge_list(&to_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn json_round_trip(g in arb_graph()) {
        let text = serde_json::to_string(&to_json_value(&g)).unwrap();
        prop_assert_eq!(parse_graph(&text).unwrap(), g);
    }

    #[test]
    fn script_round_trip(ops in proptest::collection::vec(arb_op(), 0..12), nf in any::<bool>()) {
        let s = ExpandScript { ops, normal_form: nf };
        prop_assert_eq!(parse_script(&script(&s)).unwrap(), s);
    }

    #[test]
    fn decimal_rendering_is_close(p in -10_000i64..10_000, q in 1i64..1000) {
        let r = Rational::new(p.into(), q.into());
        let text = decimal(&r, 6);
        let back: f64 = text.parse().unwrap();
        prop_assert!((back - p as f64 / q as f64).abs() <= 5e-7 + 1e-12);
    }
}
