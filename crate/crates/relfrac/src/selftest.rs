//! Seeded randomized property checks on small instances, plus the
//! brute-force assignment oracle for the weighted-MIS separation step.
//!
//! Every property runs on its own RNG derived from the seed, so the tally
//! does not depend on thread count.

use num_traits::{One, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;
use relfrac_core::expand::{apply_expand, derive_expand_from_independent_set, in_expand, relabels_to, ExpandOp, ExpandScript};
use relfrac_core::graph::{complement, disjoint_union, disjunctive_product, make_cayley_cyclic, strong_product, Graph};
use relfrac_core::mis::{independence_number, max_independent_set, max_weight_independent_set};
use relfrac_core::relfrac::{
    fractional_independence, gamma0, gamma1_certificate, relfrac, relfrac_lp, relfrac_vertex_transitive, verify_distribution,
    GammaValue, MethodChoice,
};
use relfrac_core::{Budget, Rational, Result};

/// A random graph on `lo..=hi` vertices with a random edge density.
pub fn random_graph(rng: &mut StdRng, lo: usize, hi: usize) -> Graph {
    let n = rng.gen_range(lo..=hi);
    let p: f64 = rng.gen_range(0.15..0.85);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("edges in range")
}

/// Cay(Z_n, ±1..±k) with n in `lo..=hi` (n ≥ 2) and a random k.
pub fn random_circulant(rng: &mut StdRng, lo: usize, hi: usize) -> Graph {
    let n = rng.gen_range(lo.max(2)..=hi);
    let k = rng.gen_range(1..=(n / 2).max(1));
    make_cayley_cyclic(n, k).unwrap_or_else(|_| relfrac_core::graph::make_complete(n))
}

fn q(p: usize, d: usize) -> Rational {
    Rational::new(p.into(), d.into())
}

fn v(g: &Graph, h: &Graph, b: &Budget) -> Result<Rational> {
    Ok(relfrac(g, h, MethodChoice::Auto, false, b)?.value)
}

fn alpha(g: &Graph, b: &Budget) -> Result<usize> {
    independence_number(g, b)
}

/// `Ok(None)` when the property holds, `Ok(Some(why))` on a violation.
type Check = fn(&mut StdRng, &Budget) -> Result<Option<String>>;

fn fail(cond: bool, msg: impl FnOnce() -> String) -> Option<String> {
    (!cond).then(msg)
}

fn sandwich(rng: &mut StdRng, b: &Budget) -> Result<Option<String>> {
    let (g, h) = (random_graph(rng, 1, 7), random_graph(rng, 1, 7));
    let x = v(&g, &h, b)?;
    let ratio = q(alpha(&g, b)?, alpha(&h, b)?);
    let frac = fractional_independence(&g, b)? / fractional_independence(&h, b)?;
    Ok(fail(ratio <= x && frac <= x, || format!("sandwich broken: α ratio {ratio}, α* ratio {frac}, value {x}")))
}

fn reciprocal(rng: &mut StdRng, b: &Budget) -> Result<Option<String>> {
    let (g, h) = (random_graph(rng, 1, 6), random_graph(rng, 1, 6));
    let (a, c) = (v(&g, &h, b)?, v(&h, &g, b)?);
    Ok(fail(&a * &c >= Rational::one(), || format!("α*(G|H)·α*(H|G) = {a}·{c} < 1")))
}

fn third_graph(rng: &mut StdRng, b: &Budget) -> Result<Option<String>> {
    let (g, h, w) = (random_graph(rng, 1, 5), random_graph(rng, 1, 5), random_graph(rng, 1, 5));
    let mid = v(&g, &w, b)? / v(&h, &w, b)?;
    let lo = Rational::one() / v(&h, &g, b)?;
    let hi = v(&g, &h, b)?;
    Ok(fail(lo <= mid && mid <= hi, || format!("{lo} <= {mid} <= {hi} fails")))
}

fn union_bound(rng: &mut StdRng, b: &Budget) -> Result<Option<String>> {
    let (g1, g2, h) = (random_graph(rng, 1, 4), random_graph(rng, 1, 4), random_graph(rng, 1, 4));
    let whole = v(&disjoint_union(&g1, &g2), &h, b)?;
    let sum = v(&g1, &h, b)? + v(&g2, &h, b)?;
    Ok(fail(whole <= sum, || format!("union {whole} exceeds sum {sum}")))
}

fn join_max(rng: &mut StdRng, b: &Budget) -> Result<Option<String>> {
    let (g1, g2, h) = (random_graph(rng, 1, 4), random_graph(rng, 1, 4), random_graph(rng, 1, 4));
    let whole = v(&complement(&disjoint_union(&g1, &g2)), &h, b)?;
    let best = v(&complement(&g1), &h, b)?.max(v(&complement(&g2), &h, b)?);
    Ok(fail(whole == best, || format!("join gives {whole}, max of parts {best}")))
}

fn harmonic(rng: &mut StdRng, b: &Budget) -> Result<Option<String>> {
    let (g, h1, h2) = (random_graph(rng, 1, 4), random_graph(rng, 1, 4), random_graph(rng, 1, 4));
    let one = Rational::one();
    let lhs = &one / v(&g, &h1, b)? + &one / v(&g, &h2, b)?;
    let rhs = &one / v(&g, &disjoint_union(&h1, &h2), b)?;
    Ok(fail(lhs <= rhs, || format!("harmonic sum {lhs} exceeds {rhs}")))
}

fn harmonic_transitive(rng: &mut StdRng, b: &Budget) -> Result<Option<String>> {
    let (g, h1, h2) = (random_circulant(rng, 2, 6), random_graph(rng, 1, 4), random_graph(rng, 1, 4));
    let one = Rational::one();
    let lhs = &one / v(&g, &h1, b)? + &one / v(&g, &h2, b)?;
    let rhs = &one / v(&g, &disjoint_union(&h1, &h2), b)?;
    Ok(fail(lhs == rhs, || format!("harmonic equality fails for a circulant: {lhs} vs {rhs}")))
}

fn product_with_self(rng: &mut StdRng, b: &Budget) -> Result<Option<String>> {
    let (g, h) = (random_graph(rng, 1, 4), random_graph(rng, 1, 3));
    let lhs = relfrac_lp(&strong_product(&g, &h), &h, b)?.value;
    let rhs = fractional_independence(&g, b)?;
    Ok(fail(lhs == rhs, || format!("α*(G⊠H|H) = {lhs} but α*(G) = {rhs}")))
}

fn submultiplicative(rng: &mut StdRng, b: &Budget) -> Result<Option<String>> {
    let gs: Vec<Graph> = (0..4).map(|_| random_graph(rng, 1, 3)).collect();
    let whole = relfrac_lp(&strong_product(&gs[0], &gs[1]), &strong_product(&gs[2], &gs[3]), b)?.value;
    let parts = v(&gs[0], &gs[2], b)? * v(&gs[1], &gs[3], b)?;
    Ok(fail(whole <= parts, || format!("product value {whole} exceeds {parts}")))
}

fn gamma_chain(rng: &mut StdRng, b: &Budget) -> Result<Option<String>> {
    let (g, h) = (random_graph(rng, 1, 5), random_graph(rng, 1, 5));
    let x = relfrac_lp(&g, &h, b)?.value;
    let ratio = q(alpha(&g, b)?, alpha(&h, b)?);
    if ratio > x {
        return Ok(Some(format!("α(G)/α(H) = {ratio} exceeds {x}")));
    }
    let g1 = gamma1_certificate(&g, &h, b)?;
    if g1.value != GammaValue::Finite(x.clone()) {
        return Ok(Some(format!("Γ1 = {:?} differs from {x}", g1.value)));
    }
    if let Some(d) = &g1.distribution {
        if verify_distribution(d, &x, &g, &h).is_err() {
            return Ok(Some("Γ1 distribution fails verification".into()));
        }
    }
    if let GammaValue::Finite(g0) = gamma0(&g, &h, b)?.value {
        return Ok(fail(x <= g0, || format!("Γ0 = {g0} below {x}")));
    }
    Ok(None)
}

fn complement_duality(rng: &mut StdRng, b: &Budget) -> Result<Option<String>> {
    let (g, h) = (random_circulant(rng, 2, 6), random_circulant(rng, 2, 6));
    let lhs = v(&g, &h, b)?;
    let rhs = q(g.n(), h.n()) * v(&complement(&h), &complement(&g), b)?;
    Ok(fail(lhs == rhs, || format!("{lhs} vs |G|/|H|·α*(H^c|G^c) = {rhs}")))
}

fn disjunctive(rng: &mut StdRng, b: &Budget) -> Result<Option<String>> {
    let (g, h) = (random_circulant(rng, 2, 4), random_circulant(rng, 2, 5));
    let lhs = fractional_independence(&disjunctive_product(&g, &h), b)?;
    let a = alpha(&strong_product(&g, &h), b)?;
    Ok(fail(lhs >= q(a, 1), || format!("α*(G⋆H) = {lhs} below α(G⊠H) = {a}")))
}

fn vt_route(rng: &mut StdRng, b: &Budget) -> Result<Option<String>> {
    let (g, h) = (random_circulant(rng, 2, 7), random_graph(rng, 1, 6));
    let lp = relfrac_lp(&g, &h, b)?.value;
    let vt = relfrac_vertex_transitive(&g, &h, b)?.value;
    Ok(fail(lp == vt, || format!("LP {lp} vs vertex-transitive formula {vt}")))
}

/// Scripts derived from independent sets of complement(G)⊠H replay onto G'.
fn derived_script(rng: &mut StdRng, b: &Budget) -> Result<Option<String>> {
    let (g, h) = (random_graph(rng, 1, 5), random_graph(rng, 1, 5));
    let s = max_independent_set(&strong_product(&complement(&g), &h), b)?.witness;
    let d = derive_expand_from_independent_set(&g, &h, &s)?;
    let out = apply_expand(&d.h_prime, &d.script)?;
    if !relabels_to(&out.graph, &d.g_prime, &d.labels) {
        return Ok(Some("derived script does not rebuild G'".into()));
    }
    let x = v(&d.g_prime, &d.h_prime, b)?;
    Ok(fail(x <= Rational::one(), || format!("α*(G'|H') = {x} above 1")))
}

fn membership_sound(rng: &mut StdRng, b: &Budget) -> Result<Option<String>> {
    let (h, g) = (random_graph(rng, 1, 5), random_graph(rng, 1, 6));
    let Some(cert) = in_expand(&h, &g, b)? else {
        return Ok(None);
    };
    let out = apply_expand(&h, &cert.script)?;
    if !relabels_to(&out.graph, &g, &cert.labels) {
        return Ok(Some("membership script does not rebuild G".into()));
    }
    let x = v(&g, &h, b)?;
    if x > Rational::one() {
        return Ok(Some(format!("member of Expand(H) with α*(G|H) = {x}")));
    }
    if alpha(&g, b)? >= alpha(&h, b)? && x != Rational::one() {
        return Ok(Some(format!("α(G) >= α(H) and member, yet value {x}")));
    }
    Ok(None)
}

fn random_op(rng: &mut StdRng, g: &Graph) -> Option<ExpandOp> {
    let n = g.n();
    match rng.gen_range(0..3) {
        0 if n > 1 => Some(ExpandOp::RemoveVertex { v: rng.gen_range(0..n) }),
        1 => Some(ExpandOp::ReplaceByClique { v: rng.gen_range(0..n), k: rng.gen_range(2..=3) }),
        _ => {
            let missing: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |w| (u, w))).filter(|&(u, w)| !g.has_edge(u, w)).collect();
            if missing.is_empty() {
                return None;
            }
            let (u, w) = missing[rng.gen_range(0..missing.len())];
            Some(ExpandOp::AddEdge { u, w })
        }
    }
}

fn expand_monotone(rng: &mut StdRng, b: &Budget) -> Result<Option<String>> {
    let (g, w) = (random_graph(rng, 1, 6), random_graph(rng, 1, 4));
    let Some(op) = random_op(rng, &g) else {
        return Ok(None);
    };
    let g2 = apply_expand(&g, &ExpandScript { ops: vec![op], normal_form: true })?.graph;
    let (before, after) = (alpha(&strong_product(&g, &w), b)?, alpha(&strong_product(&g2, &w), b)?);
    Ok(fail(after <= before, || format!("{op:?} raised α(G⊠W) from {before} to {after}")))
}

fn lp_certificate(rng: &mut StdRng, b: &Budget) -> Result<Option<String>> {
    let (g, h) = (random_graph(rng, 1, 5), random_graph(rng, 1, 5));
    let r = relfrac_lp(&g, &h, b)?;
    if r.weights.iter().sum::<Rational>() != r.value {
        return Ok(Some("LP weights do not sum to the value".into()));
    }
    match &r.dual_cert {
        Some(d) => Ok(verify_distribution(d, &r.value, &g, &h).err().map(|e| format!("dual certificate rejected: {e}"))),
        None => Ok(Some("LP route returned no certificate".into())),
    }
}

/// Name, number of cases, check.
pub const PROPERTIES: &[(&str, usize, Check)] = &[
    ("sandwich", 80, sandwich),
    ("reciprocal", 60, reciprocal),
    ("third graph", 40, third_graph),
    ("disjoint union", 40, union_bound),
    ("join", 40, join_max),
    ("harmonic", 40, harmonic),
    ("harmonic equality, transitive G", 30, harmonic_transitive),
    ("product with H", 40, product_with_self),
    ("submultiplicative", 30, submultiplicative),
    ("gamma chain", 50, gamma_chain),
    ("complement duality", 40, complement_duality),
    ("disjunctive product", 30, disjunctive),
    ("transitive route = LP", 40, vt_route),
    ("derived script soundness", 60, derived_script),
    ("membership soundness", 40, membership_sound),
    ("expand monotonicity", 50, expand_monotone),
    ("LP certificate", 40, lp_certificate),
];

#[derive(Clone, Debug)]
pub struct Tally {
    pub name: &'static str,
    pub checks: usize,
    pub violations: Vec<String>,
}

fn rng_for(seed: u64, index: usize) -> StdRng {
    StdRng::seed_from_u64(seed ^ (index as u64 + 1).wrapping_mul(0x9e37_79b9_7f4a_7c15))
}

/// Runs every property `scale` times its case count.
pub fn run_properties(seed: u64, scale: usize, budget: &Budget) -> Vec<Tally> {
    PROPERTIES
        .par_iter()
        .enumerate()
        .map(|(i, &(name, cases, check))| {
            let mut rng = rng_for(seed, i);
            let mut violations = Vec::new();
            let total = cases * scale;
            for case in 0..total {
                match check(&mut rng, budget) {
                    Ok(None) => {}
                    Ok(Some(why)) => violations.push(format!("case {case}: {why}")),
                    Err(e) => violations.push(format!("case {case}: error: {e}")),
                }
            }
            Tally { name, checks: total, violations }
        })
        .collect()
}

/// max over f ∈ F(H,G) of Σ w_i |f(v_i)|, by enumerating every assignment.
pub fn brute_assignment_max(g: &Graph, h: &Graph, w: &[Rational]) -> Rational {
    let m = h.n();
    assert!(m < 32, "brute force needs |V(H)| < 32");
    let indep: Vec<u32> = (0u32..1 << m).filter(|&s| (0..m).all(|u| s >> u & 1 == 0 || (0..m).all(|x| s >> x & 1 == 0 || !h.has_edge(u, x)))).collect();
    // s and t disconnected: disjoint, and no H-edge between them
    let disconnected = |s: u32, t: u32| s & t == 0 && (0..m).all(|u| s >> u & 1 == 0 || (0..m).all(|x| t >> x & 1 == 0 || !h.has_edge(u, x)));
    let mut chosen = vec![0u32; g.n()];
    let mut best = Rational::zero();
    fn rec(
        i: usize,
        g: &Graph,
        w: &[Rational],
        indep: &[u32],
        disc: &dyn Fn(u32, u32) -> bool,
        chosen: &mut Vec<u32>,
        best: &mut Rational,
    ) {
        if i == g.n() {
            let total: Rational = chosen.iter().zip(w).map(|(s, wi)| wi * Rational::from_integer(s.count_ones().into())).sum();
            if total > *best {
                *best = total;
            }
            return;
        }
        for &s in indep {
            if (0..i).all(|j| g.has_edge(i, j) || disc(s, chosen[j])) {
                chosen[i] = s;
                rec(i + 1, g, w, indep, disc, chosen, best);
            }
        }
    }
    rec(0, g, w, &indep, &disconnected, &mut chosen, &mut best);
    best
}

/// The separation value: maximum weight independent set of
/// complement(G)⊠H with weight w_i on every (v_i, u).
pub fn separation_value(g: &Graph, h: &Graph, w: &[Rational], budget: &Budget) -> Result<Rational> {
    let p = strong_product(&complement(g), h);
    let weights: Vec<Rational> = (0..p.n()).map(|x| w[x / h.n()].clone()).collect();
    Ok(max_weight_independent_set(&p, &weights, budget)?.value)
}

#[derive(Clone, Debug)]
pub struct OracleCase {
    pub g: Graph,
    pub h: Graph,
    pub weights: Vec<Rational>,
    pub separation: Rational,
    pub brute: Rational,
}

/// `count` random (G, H, w) with both graphs on at most five vertices.
pub fn oracle_cases(seed: u64, count: usize, budget: &Budget) -> Result<Vec<OracleCase>> {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        let (g, h) = (random_graph(&mut rng, 1, 5), random_graph(&mut rng, 1, 5));
        let weights: Vec<Rational> = (0..g.n()).map(|_| q(rng.gen_range(0..=12), rng.gen_range(1..=6))).collect();
        let separation = separation_value(&g, &h, &weights, budget)?;
        let brute = brute_assignment_max(&g, &h, &weights);
        out.push(OracleCase { g, h, weights, separation, brute });
    }
    Ok(out)
}
