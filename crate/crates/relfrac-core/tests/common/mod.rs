#![allow(dead_code)]

use num_traits::{One, Zero};
use proptest::prelude::*;
use relfrac_core::graph::{strong_product, Graph};
use relfrac_core::lp::{solve_lp, LinearProgram, LpStatus};
use relfrac_core::Rational;

pub fn graph_from_bits(n: usize, bits: &[bool]) -> Graph {
    let mut edges = Vec::new();
    let mut k = 0;
    for u in 0..n {
        for v in u + 1..n {
            if bits[k] {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// Random graph with `lo..=hi` vertices and a random edge density.
pub fn arb_graph(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    (lo..=hi, 0.0f64..=1.0).prop_flat_map(|(n, p)| {
        proptest::collection::vec(proptest::bool::weighted(p.clamp(0.0, 1.0)), n * n.saturating_sub(1) / 2)
            .prop_map(move |bits| graph_from_bits(n, &bits))
    })
}

/// Circulant on Z_n with a random symmetric connection set.
pub fn arb_circulant(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    (lo..=hi).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n / 2).prop_map(move |conn| {
            let mut edges = Vec::new();
            for u in 0..n {
                for (d, &on) in conn.iter().enumerate() {
                    let v = (u + d + 1) % n;
                    if on && u != v && !edges.contains(&(v.min(u), v.max(u))) {
                        edges.push((u.min(v), u.max(v)));
                    }
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

fn masks(g: &Graph) -> Vec<u64> {
    (0..g.n()).map(|v| g.neighbors(v).fold(0u64, |m, u| m | 1 << u)).collect()
}

/// Every independent set as a bitmask (n <= 24).
pub fn independent_masks(g: &Graph) -> Vec<u64> {
    let nb = masks(g);
    let n = g.n();
    assert!(n <= 24);
    (0u64..1 << n).filter(|&m| (0..n).all(|v| m >> v & 1 == 0 || nb[v] & m == 0)).collect()
}

pub fn brute_alpha(g: &Graph) -> usize {
    independent_masks(g).iter().map(|m| m.count_ones() as usize).max().unwrap_or(0)
}

pub fn brute_weighted(g: &Graph, w: &[Rational]) -> Rational {
    independent_masks(g)
        .iter()
        .map(|&m| (0..g.n()).filter(|&v| m >> v & 1 == 1).map(|v| w[v].clone()).sum::<Rational>())
        .max()
        .unwrap_or_else(Rational::zero)
}

/// Maximal cliques by scanning all subsets.
pub fn brute_maximal_cliques(g: &Graph) -> Vec<u64> {
    let nb = masks(g);
    let n = g.n();
    let cliques: Vec<u64> = (1u64..1 << n).filter(|&m| (0..n).all(|v| m >> v & 1 == 0 || (nb[v] | 1 << v) & m == m)).collect();
    cliques.iter().copied().filter(|&c| !cliques.iter().any(|&d| d != c && d & c == c)).collect()
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Vertex-transitivity by trying every permutation.
pub fn brute_vertex_transitive(g: &Graph) -> bool {
    let n = g.n();
    if n <= 1 {
        return true;
    }
    let edges = g.edges();
    let mut reach = vec![false; n];
    reach[0] = true;
    for p in permutations(n) {
        if !reach[p[0]] && edges.iter().all(|&(u, v)| g.has_edge(p[u], p[v])) {
            reach[p[0]] = true;
        }
    }
    reach.iter().all(|&r| r)
}

/// α*(g|h) from the full assignment LP: one row per maximal independent
/// set of complement(g)⊠h, all found by exhaustive subset scan.
pub fn brute_relfrac(g: &Graph, h: &Graph) -> Rational {
    let gc = relfrac_core::graph::complement(g);
    let prod = strong_product(&gc, h);
    let nb = masks(&prod);
    let m = h.n();
    let maximal: Vec<u64> = independent_masks(&prod)
        .into_iter()
        .filter(|&s| (0..prod.n()).all(|p| s >> p & 1 == 1 || nb[p] & s != 0))
        .collect();
    let rows = maximal
        .iter()
        .map(|&s| {
            let a = (0..g.n())
                .map(|i| Rational::from_integer(((s >> (i * m)) & ((1u64 << m) - 1)).count_ones().into()))
                .collect();
            (a, Rational::one())
        })
        .collect();
    let lp = LinearProgram { dim: g.n(), objective: vec![Rational::one(); g.n()], rows };
    let r = solve_lp(&lp).unwrap();
    assert_eq!(r.status, LpStatus::Optimal);
    r.value
}

pub fn int(v: usize) -> Rational {
    Rational::from_integer(v.into())
}

pub fn frac(p: usize, q: usize) -> Rational {
    Rational::new(p.into(), q.into())
}
