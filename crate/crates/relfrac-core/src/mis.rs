//! Exact maximum (weighted) independent sets by branch and bound with a
//! greedy clique-cover bound, plus clique and maximal-set enumeration and
//! exact colouring.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::bitset::{self, words_for, Ones, VertexSet};
use crate::budget::{Budget, Ticker};
use crate::error::{Error, Result};
use crate::graph::{complement, DerivedOp, Family, Graph};
use crate::symmetry;
use crate::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MisResult {
    pub value: usize,
    pub witness: VertexSet,
    pub nodes: u64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct WeightedMisResult {
    pub value: Rational,
    pub witness: VertexSet,
    pub nodes: u64,
}

/// Search state over a renumbered copy of the graph. Internally vertex `i`
/// is `order[i]` of the original.
struct Engine<'b> {
    n: usize,
    w: usize,
    adj: Vec<u64>,
    order: Vec<usize>,
    pos: Vec<usize>,
    best: usize,
    best_set: Vec<usize>,
    cur: Vec<usize>,
    target: usize,
    ticker: Ticker<'b>,
    aborted: bool,
}

impl<'b> Engine<'b> {
    fn new(g: &Graph, budget: &'b Budget) -> Self {
        let n = g.n();
        // Clique view: branch first on vertices with the highest degree in
        // the complement, ties by id.
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| (g.degree(v), v));
        let mut pos = vec![0; n];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let w = words_for(n);
        let mut adj = vec![0u64; n * w];
        for (i, &v) in order.iter().enumerate() {
            for u in g.neighbors(v) {
                bitset::set_bit(&mut adj[i * w..(i + 1) * w], pos[u]);
            }
        }
        Engine {
            n,
            w,
            adj,
            order,
            pos,
            best: 0,
            best_set: Vec::new(),
            cur: Vec::new(),
            target: usize::MAX,
            ticker: budget.ticker(),
            aborted: false,
        }
    }

    fn to_internal(&self, s: &VertexSet) -> Vec<u64> {
        let mut p = vec![0u64; self.w];
        for v in s.iter() {
            bitset::set_bit(&mut p, self.pos[v]);
        }
        p
    }

    fn to_external(&self, s: &[usize]) -> VertexSet {
        VertexSet::from_vertices(self.n, s.iter().map(|&i| self.order[i]))
    }

    /// Searches inside `p` for an independent set larger than `lower`,
    /// stopping once `target` is reached.
    fn run(&mut self, p: Vec<u64>, lower: usize, target: usize) {
        self.best = lower;
        self.best_set.clear();
        self.cur.clear();
        self.target = target;
        self.aborted = false;
        if target <= lower {
            return;
        }
        self.expand(p);
    }

    /// Greedy clique cover of `p`: returns vertices in cover order and the
    /// running count of cliques used up to each.
    fn cover(&self, p: &[u64], verts: &mut Vec<usize>, bounds: &mut Vec<usize>) {
        let mut q = p.to_vec();
        let mut r = vec![0u64; self.w];
        let mut k = 0;
        while !bitset::is_zero(&q) {
            k += 1;
            r.copy_from_slice(&q);
            while let Some(v) = bitset::first_bit(&r) {
                bitset::clear_bit(&mut q, v);
                let row = &self.adj[v * self.w..(v + 1) * self.w];
                for (a, b) in r.iter_mut().zip(row) {
                    *a &= b;
                }
                verts.push(v);
                bounds.push(k);
            }
        }
    }

    fn expand(&mut self, mut p: Vec<u64>) {
        if self.ticker.tick() {
            self.aborted = true;
        }
        if self.aborted {
            return;
        }
        let mut verts = Vec::new();
        let mut bounds = Vec::new();
        self.cover(&p, &mut verts, &mut bounds);
        for idx in (0..verts.len()).rev() {
            if self.cur.len() + bounds[idx] <= self.best || self.aborted || self.best >= self.target {
                return;
            }
            let v = verts[idx];
            self.cur.push(v);
            let row = &self.adj[v * self.w..(v + 1) * self.w];
            let mut np: Vec<u64> = p.iter().zip(row).map(|(a, b)| a & !b).collect();
            bitset::clear_bit(&mut np, v);
            if bitset::is_zero(&np) {
                if self.cur.len() > self.best {
                    self.best = self.cur.len();
                    self.best_set = self.cur.clone();
                }
            } else {
                self.expand(np);
            }
            self.cur.pop();
            bitset::clear_bit(&mut p, v);
        }
    }
}

fn timeout(lower: usize) -> Error {
    Error::Timeout { lower_bound: Some(Rational::from_integer(BigInt::from(lower))) }
}

/// Plain branch and bound on the whole graph, no shortcuts.
pub(crate) fn mis_plain(g: &Graph, lower: Option<(usize, VertexSet)>, upper: usize, budget: &Budget) -> Result<MisResult> {
    let mut e = Engine::new(g, budget);
    let p = e.to_internal(&VertexSet::full(g.n()));
    let (lb, lw) = lower.unwrap_or((0, VertexSet::new(g.n())));
    e.run(p, lb, upper);
    if e.aborted {
        return Err(timeout(e.best));
    }
    let nodes = e.ticker.count();
    if e.best_set.is_empty() && e.best == lb {
        return Ok(MisResult { value: lb, witness: lw, nodes });
    }
    Ok(MisResult { value: e.best, witness: e.to_external(&e.best_set), nodes })
}

/// Lexicographically least independent set of size `alpha`, given a known
/// witness of that size.
fn lex_least(g: &Graph, alpha: usize, witness: &VertexSet, budget: &Budget) -> Result<(VertexSet, u64)> {
    let n = g.n();
    let mut e = Engine::new(g, budget);
    let mut chosen = VertexSet::new(n);
    let mut completion = witness.clone();
    let mut free = VertexSet::full(n);
    let mut taken = 0;
    for v in 0..n {
        if taken == alpha {
            break;
        }
        if !free.contains(v) {
            continue;
        }
        free.remove(v);
        let mut rest = free.clone();
        for u in g.neighbors(v) {
            rest.remove(u);
        }
        if completion.contains(v) {
            chosen.insert(v);
            taken += 1;
            free = rest;
            continue;
        }
        let need = alpha - taken - 1;
        let found = if need == 0 {
            Some(VertexSet::new(n))
        } else if rest.len() < need {
            None
        } else {
            let p = e.to_internal(&rest);
            e.run(p, need - 1, need);
            if e.aborted {
                return Err(timeout(alpha));
            }
            (e.best >= need).then(|| e.to_external(&e.best_set))
        };
        if let Some(s) = found {
            chosen.insert(v);
            taken += 1;
            completion = s;
            free = rest;
        }
    }
    debug_assert_eq!(chosen.len(), alpha);
    Ok((chosen, e.ticker.count()))
}

/// Exact α(g) with a deterministic witness, lexicographically least for
/// graphs up to `budget.lex_witness_cap` vertices.
pub fn max_independent_set(g: &Graph, budget: &Budget) -> Result<MisResult> {
    let mut r = mis_unordered(g, budget)?;
    if g.n() <= budget.lex_witness_cap && r.value > 0 {
        let (w, nodes) = lex_least(g, r.value, &r.witness, budget)?;
        r.witness = w;
        r.nodes += nodes;
    }
    Ok(r)
}

/// Exact α(g) with whatever witness the fastest route produces.
pub(crate) fn mis_unordered(g: &Graph, budget: &Budget) -> Result<MisResult> {
    mis_seeded(g, None, budget)
}

/// As [`mis_unordered`], starting from a known independent set.
pub(crate) fn mis_seeded(g: &Graph, seed: Option<(usize, VertexSet)>, budget: &Budget) -> Result<MisResult> {
    if g.n() == 0 {
        return Ok(MisResult { value: 0, witness: VertexSet::new(0), nodes: 0 });
    }
    if let Some(Family::Derived { op: DerivedOp::StrongProduct, parents }) = g.family() {
        if g.n() > 64 {
            return mis_product(g, &parents[0], &parents[1], seed, budget);
        }
    }
    if let Some(seed) = seed {
        return mis_plain(g, Some(seed), usize::MAX, budget);
    }
    if let Some(Family::Complete { .. }) = g.family() {
        return Ok(MisResult { value: 1, witness: VertexSet::from_vertices(g.n(), [0]), nodes: 0 });
    }
    if g.n() > 96 && symmetry::is_vertex_transitive_with(g, budget) {
        return symmetry::mis_vertex_transitive(g, budget);
    }
    mis_plain(g, None, usize::MAX, budget)
}

const FRACTIONAL_FACTOR_CAP: usize = 64;

/// α*(f) when cheap: the clique LP for small graphs, |V(f)|/ω(f) for
/// vertex-transitive ones.
fn fractional_bound(f: &Graph, budget: &Budget) -> Result<Option<Rational>> {
    if f.n() <= FRACTIONAL_FACTOR_CAP {
        let wide = Budget { enum_cap: FRACTIONAL_FACTOR_CAP, ..budget.clone() };
        return crate::relfrac::fractional_independence(f, &wide).map(Some);
    }
    if symmetry::is_vertex_transitive_with(f, budget) {
        let omega = clique_number(f, budget)?;
        return Ok(Some(Rational::new(BigInt::from(f.n()), BigInt::from(omega))));
    }
    Ok(None)
}

/// α of a strong product sandwiched between α(a)α(b) and
/// min(θ(a)α(b), α(a)θ(b), α*(a)α(b), α(a)α*(b)) with θ the clique cover
/// number. For vertex-transitive f, α*(f) = |V(f)|/ω(f).
fn mis_product(g: &Graph, a: &Graph, b: &Graph, seed: Option<(usize, VertexSet)>, budget: &Budget) -> Result<MisResult> {
    let ra = mis_unordered(a, budget)?;
    let rb = mis_unordered(b, budget)?;
    let m = b.n();
    let mut prod = VertexSet::new(g.n());
    for x in ra.witness.iter() {
        for y in rb.witness.iter() {
            prod.insert(x * m + y);
        }
    }
    let mut lower = ra.value * rb.value;
    if let Some((v, w)) = seed {
        if v > lower {
            lower = v;
            prod = w;
        }
    }
    // θ of the smaller factor first, then the α* bounds; θ of the larger
    // factor (an exact colouring) only if still needed
    let (small, small_other, large, large_other) =
        if a.n() <= b.n() { (a, rb.value, b, ra.value) } else { (b, ra.value, a, rb.value) };
    let mut upper = clique_cover_number(small, budget)? * small_other;
    for (f, other) in [(small, small_other), (large, large_other)] {
        if upper > lower {
            if let Some(frac) = fractional_bound(f, budget)? {
                let bound = frac * Rational::from_integer(BigInt::from(other));
                upper = upper.min(bound.floor().to_integer().try_into().unwrap_or(usize::MAX));
            }
        }
    }
    let nodes = ra.nodes + rb.nodes;
    if upper > lower && g.n() > 96 && symmetry::is_vertex_transitive_with(a, budget) && symmetry::is_vertex_transitive_with(b, budget) {
        // a product of vertex-transitive factors is vertex-transitive
        let mut r = symmetry::mis_vertex_transitive(g, budget)?;
        r.nodes += nodes;
        return Ok(r);
    }
    if upper > lower {
        upper = upper.min(clique_cover_number(large, budget)? * large_other);
    }
    if lower == upper {
        return Ok(MisResult { value: lower, witness: prod, nodes });
    }
    let mut r = mis_plain(g, Some((lower, prod)), upper, budget)?;
    r.nodes += nodes;
    Ok(r)
}

pub fn independence_number(g: &Graph, budget: &Budget) -> Result<usize> {
    Ok(mis_unordered(g, budget)?.value)
}

pub fn clique_number(g: &Graph, budget: &Budget) -> Result<usize> {
    if g.n() == 0 {
        return Ok(0);
    }
    independence_number(&complement(g), budget)
}

/// Exhaustive scan over all vertex subsets, for n <= 20.
pub fn brute_force_mis(g: &Graph) -> Result<MisResult> {
    let n = g.n();
    if n > 20 {
        return Err(Error::SizeLimit { what: "brute-force order", actual: n, limit: 20 });
    }
    let nb: Vec<u32> = (0..n).map(|v| g.row(v).first().copied().unwrap_or(0) as u32).collect();
    let mut best = 0u32;
    for mask in 1u32..(1u32 << n) {
        let (c, bc) = (mask.count_ones(), best.count_ones());
        if c < bc || (c == bc && !lex_less(mask, best, n)) {
            continue;
        }
        if (0..n).all(|v| mask >> v & 1 == 0 || nb[v] & mask == 0) {
            best = mask;
        }
    }
    Ok(MisResult {
        value: best.count_ones() as usize,
        witness: VertexSet::from_vertices(n, (0..n).filter(|&v| best >> v & 1 == 1)),
        nodes: 1 << n,
    })
}

fn lex_less(a: u32, b: u32, n: usize) -> bool {
    let la = (0..n).filter(|&v| a >> v & 1 == 1);
    let lb = (0..n).filter(|&v| b >> v & 1 == 1);
    la.lt(lb)
}

fn scale_weights(w: &[Rational]) -> Result<(Vec<u128>, BigInt)> {
    let mut den = BigInt::from(1);
    for x in w {
        if x < &Rational::zero() {
            return Err(Error::InvalidArgument("negative weight".into()));
        }
        den = den.lcm(x.denom());
    }
    let mut out = Vec::with_capacity(w.len());
    let mut total: u128 = 0;
    for x in w {
        let v = (x.numer() * (&den / x.denom()))
            .to_u128()
            .ok_or_else(|| Error::SizeLimit { what: "scaled weight bits", actual: 129, limit: 128 })?;
        total = total
            .checked_add(v)
            .ok_or_else(|| Error::SizeLimit { what: "scaled weight bits", actual: 129, limit: 128 })?;
        out.push(v);
    }
    Ok((out, den))
}

struct WEngine<'b> {
    w: usize,
    adj: Vec<u64>,
    wt: Vec<u128>,
    order: Vec<usize>,
    best: u128,
    best_set: Vec<usize>,
    cur: Vec<usize>,
    cur_w: u128,
    stop_above: u128,
    ticker: Ticker<'b>,
    aborted: bool,
}

impl WEngine<'_> {
    fn expand(&mut self, mut p: Vec<u64>) {
        if self.ticker.tick() {
            self.aborted = true;
        }
        if self.aborted {
            return;
        }
        let mut verts = Vec::new();
        let mut bounds: Vec<u128> = Vec::new();
        let mut q = p.clone();
        let mut r = vec![0u64; self.w];
        let mut acc = 0u128;
        while !bitset::is_zero(&q) {
            r.copy_from_slice(&q);
            let start = verts.len();
            let mut mx = 0;
            while let Some(v) = bitset::first_bit(&r) {
                bitset::clear_bit(&mut q, v);
                let row = &self.adj[v * self.w..(v + 1) * self.w];
                for (a, b) in r.iter_mut().zip(row) {
                    *a &= b;
                }
                mx = mx.max(self.wt[v]);
                verts.push(v);
            }
            acc += mx;
            bounds.extend(core::iter::repeat_n(acc, verts.len() - start));
        }
        for idx in (0..verts.len()).rev() {
            if self.cur_w + bounds[idx] <= self.best || self.aborted || self.best > self.stop_above {
                return;
            }
            let v = verts[idx];
            self.cur.push(v);
            self.cur_w += self.wt[v];
            let row = &self.adj[v * self.w..(v + 1) * self.w];
            let mut np: Vec<u64> = p.iter().zip(row).map(|(a, b)| a & !b).collect();
            bitset::clear_bit(&mut np, v);
            if self.cur_w > self.best {
                self.best = self.cur_w;
                self.best_set = self.cur.clone();
            }
            if !bitset::is_zero(&np) {
                self.expand(np);
            }
            self.cur_w -= self.wt[v];
            self.cur.pop();
            bitset::clear_bit(&mut p, v);
        }
    }
}

/// Exact maximum weight independent set. Zero-weight vertices are never
/// part of the witness.
pub fn max_weight_independent_set(g: &Graph, w: &[Rational], budget: &Budget) -> Result<WeightedMisResult> {
    weighted_search(g, w, None, budget)
}

/// Like [`max_weight_independent_set`] but may stop as soon as a set of
/// weight strictly above `threshold` is found.
pub fn weighted_search(
    g: &Graph,
    w: &[Rational],
    threshold: Option<&Rational>,
    budget: &Budget,
) -> Result<WeightedMisResult> {
    if w.len() != g.n() {
        return Err(Error::InvalidArgument(format!("{} weights for {} vertices", w.len(), g.n())));
    }
    let (wt, den) = scale_weights(w)?;
    let stop_above = match threshold {
        Some(t) => {
            let s = (t * Rational::from_integer(den.clone())).floor().to_integer();
            s.to_u128().unwrap_or(u128::MAX)
        }
        None => u128::MAX,
    };
    // Heavy vertices first in the clique view.
    let mut order: Vec<usize> = (0..g.n()).filter(|&v| wt[v] > 0).collect();
    order.sort_by(|&a, &b| wt[a].cmp(&wt[b]).then(g.degree(a).cmp(&g.degree(b))).then(a.cmp(&b)));
    let n = order.len();
    let ww = words_for(n);
    let mut pos = vec![usize::MAX; g.n()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut adj = vec![0u64; n * ww];
    for (i, &v) in order.iter().enumerate() {
        for u in g.neighbors(v) {
            if pos[u] != usize::MAX {
                bitset::set_bit(&mut adj[i * ww..(i + 1) * ww], pos[u]);
            }
        }
    }
    let mut e = WEngine {
        w: ww,
        adj,
        wt: order.iter().map(|&v| wt[v]).collect(),
        order,
        best: 0,
        best_set: Vec::new(),
        cur: Vec::new(),
        cur_w: 0,
        stop_above,
        ticker: budget.ticker(),
        aborted: false,
    };
    let mut p = vec![0u64; ww];
    for i in 0..n {
        bitset::set_bit(&mut p, i);
    }
    if n > 0 {
        e.expand(p);
    }
    let value = Rational::new(BigInt::from(e.best), den);
    if e.aborted {
        return Err(Error::Timeout { lower_bound: Some(value) });
    }
    let mut witness = VertexSet::new(g.n());
    for &i in &e.best_set {
        witness.insert(e.order[i]);
    }
    Ok(WeightedMisResult { value, witness, nodes: e.ticker.count() })
}

fn check_cap(g: &Graph, budget: &Budget) -> Result<()> {
    if g.n() > budget.enum_cap {
        return Err(Error::SizeLimit { what: "enumeration order", actual: g.n(), limit: budget.enum_cap });
    }
    Ok(())
}

/// Bron–Kerbosch with Tomita pivoting; cliques sorted lexicographically.
pub fn enumerate_maximal_cliques(g: &Graph, budget: &Budget) -> Result<Vec<VertexSet>> {
    check_cap(g, budget)?;
    Ok(maximal_cliques_uncapped(g))
}

pub(crate) fn maximal_cliques_uncapped(g: &Graph) -> Vec<VertexSet> {
    let n = g.n();
    let w = words_for(n);
    let mut out = Vec::new();
    let mut r = Vec::new();
    let p = VertexSet::full(n).words().to_vec();
    bron_kerbosch(g, &mut r, p, vec![0; w], &mut out);
    out.sort_by(|a, b| a.lex_cmp(b));
    out
}

fn bron_kerbosch(g: &Graph, r: &mut Vec<usize>, mut p: Vec<u64>, mut x: Vec<u64>, out: &mut Vec<VertexSet>) {
    if bitset::is_zero(&p) && bitset::is_zero(&x) {
        if !r.is_empty() {
            out.push(VertexSet::from_vertices(g.n(), r.iter().copied()));
        }
        return;
    }
    let pivot = Ones::new(&p)
        .chain(Ones::new(&x))
        .max_by_key(|&u| (bitset::and_count(&p, g.row(u)), usize::MAX - u))
        .unwrap();
    let cand: Vec<usize> = Ones::new(&p).filter(|&v| !bitset::test_bit(g.row(pivot), v)).collect();
    for v in cand {
        let row = g.row(v);
        let np = p.iter().zip(row).map(|(a, b)| a & b).collect();
        let nx = x.iter().zip(row).map(|(a, b)| a & b).collect();
        r.push(v);
        bron_kerbosch(g, r, np, nx, out);
        r.pop();
        bitset::clear_bit(&mut p, v);
        bitset::set_bit(&mut x, v);
    }
}

pub fn enumerate_maximal_independent_sets(g: &Graph, budget: &Budget) -> Result<Vec<VertexSet>> {
    check_cap(g, budget)?;
    Ok(maximal_cliques_uncapped(&complement(g)))
}

/// Exact chromatic number with a minimum colouring (classes sorted by least
/// vertex), by DSATUR branch and bound.
pub fn chromatic_number(g: &Graph, budget: &Budget) -> Result<(usize, Vec<VertexSet>)> {
    let n = g.n();
    if n == 0 {
        return Ok((0, Vec::new()));
    }
    let mut st = Dsatur {
        g,
        color: vec![usize::MAX; n],
        best: n + 1,
        best_color: Vec::new(),
        lower: clique_lower_bound(g),
        ticker: budget.ticker(),
        aborted: false,
    };
    // greedy upper bound first
    st.best = n;
    st.best_color = (0..n).collect();
    st.search(0, 0);
    if st.aborted {
        return Err(Error::Timeout { lower_bound: None });
    }
    let k = st.best;
    let mut classes = vec![VertexSet::new(n); k];
    for v in 0..n {
        classes[st.best_color[v]].insert(v);
    }
    classes.sort_by(|a, b| a.lex_cmp(b));
    Ok((k, classes))
}

fn clique_lower_bound(g: &Graph) -> usize {
    // greedy clique from each vertex
    let mut best = 1;
    for s in 0..g.n() {
        let mut cand = g.row(s).to_vec();
        let mut size = 1;
        while let Some(v) = Ones::new(&cand).max_by_key(|&v| bitset::and_count(&cand, g.row(v))) {
            size += 1;
            for (a, b) in cand.iter_mut().zip(g.row(v)) {
                *a &= b;
            }
        }
        best = best.max(size);
    }
    best
}

struct Dsatur<'a, 'b> {
    g: &'a Graph,
    color: Vec<usize>,
    best: usize,
    best_color: Vec<usize>,
    lower: usize,
    ticker: Ticker<'b>,
    aborted: bool,
}

impl Dsatur<'_, '_> {
    fn search(&mut self, colored: usize, used: usize) {
        if self.ticker.tick() {
            self.aborted = true;
        }
        if self.aborted || self.best <= self.lower {
            return;
        }
        let n = self.g.n();
        if colored == n {
            if used < self.best {
                self.best = used;
                self.best_color = self.color.clone();
            }
            return;
        }
        // pick the uncoloured vertex with most distinct neighbour colours
        let mut pick = usize::MAX;
        let mut key = (0usize, 0usize);
        for v in 0..n {
            if self.color[v] != usize::MAX {
                continue;
            }
            let mut seen = 0u128;
            let mut sat = 0;
            let mut deg = 0;
            for u in self.g.neighbors(v) {
                let c = self.color[u];
                if c == usize::MAX {
                    deg += 1;
                } else if c < 128 && seen >> c & 1 == 0 {
                    seen |= 1 << c;
                    sat += 1;
                }
            }
            if pick == usize::MAX || (sat, deg) > key {
                pick = v;
                key = (sat, deg);
            }
        }
        let v = pick;
        for c in 0..=used.min(self.best.saturating_sub(2)) {
            if self.g.neighbors(v).any(|u| self.color[u] == c) {
                continue;
            }
            self.color[v] = c;
            let nu = if c == used { used + 1 } else { used };
            if nu < self.best {
                self.search(colored + 1, nu);
            }
            self.color[v] = usize::MAX;
            if self.aborted || self.best <= self.lower {
                return;
            }
        }
    }
}

/// θ(g): fewest cliques covering the vertices.
pub fn clique_cover_number(g: &Graph, budget: &Budget) -> Result<usize> {
    if let Some(Family::Complete { .. }) = g.family() {
        return Ok(usize::from(g.n() > 0));
    }
    Ok(chromatic_number(&complement(g), budget)?.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::*;
    use crate::rat;

    fn b() -> Budget {
        Budget::default()
    }

    #[test]
    fn small_values() {
        let c5 = make_cycle(5).unwrap();
        assert_eq!(max_independent_set(&c5, &b()).unwrap().value, 2);
        let c7 = make_cycle(7).unwrap();
        assert_eq!(max_independent_set(&c7, &b()).unwrap().value, 3);
        assert_eq!(max_independent_set(&Graph::empty(0), &b()).unwrap().value, 0);
        assert_eq!(max_independent_set(&make_petersen(), &b()).unwrap().value, 4);
    }

    #[test]
    fn lex_least_witness() {
        let c5 = make_cycle(5).unwrap();
        assert_eq!(max_independent_set(&c5, &b()).unwrap().witness.to_vec(), vec![0, 2]);
        let c6 = make_cycle(6).unwrap();
        assert_eq!(max_independent_set(&c6, &b()).unwrap().witness.to_vec(), vec![0, 2, 4]);
    }

    #[test]
    fn products() {
        let c5 = make_cycle(5).unwrap();
        let c7 = make_cycle(7).unwrap();
        assert_eq!(independence_number(&strong_product(&c5, &c5), &b()).unwrap(), 5);
        assert_eq!(independence_number(&strong_product(&c7, &c5), &b()).unwrap(), 7);
        assert_eq!(independence_number(&make_johnson3(6).unwrap(), &b()).unwrap(), 4);
    }

    #[test]
    fn weighted_examples() {
        let c5 = make_cycle(5).unwrap();
        let ones = vec![rat(1, 1); 5];
        assert_eq!(max_weight_independent_set(&c5, &ones, &b()).unwrap().value, rat(2, 1));
        let zeros = vec![rat(0, 1); 5];
        let r = max_weight_independent_set(&c5, &zeros, &b()).unwrap();
        assert_eq!(r.value, rat(0, 1));
        assert!(r.witness.is_empty());
        let w = vec![rat(1, 1), rat(1, 1), rat(1, 1), rat(1, 1), rat(3, 1)];
        let r = max_weight_independent_set(&c5, &w, &b()).unwrap();
        assert_eq!(r.value, rat(4, 1));
        assert!(r.witness.contains(4));
    }

    #[test]
    fn enumerations() {
        let bb = b();
        let c5 = make_cycle(5).unwrap();
        let m = enumerate_maximal_independent_sets(&c5, &bb).unwrap();
        assert_eq!(m.len(), 5);
        assert!(m.iter().all(|s| s.len() == 2));
        let k4 = make_complete(4);
        assert_eq!(enumerate_maximal_independent_sets(&k4, &bb).unwrap().len(), 4);
        assert_eq!(enumerate_maximal_independent_sets(&Graph::empty(3), &bb).unwrap(), vec![VertexSet::full(3)]);
        assert_eq!(enumerate_maximal_cliques(&c5, &bb).unwrap().len(), 5);
        assert_eq!(enumerate_maximal_cliques(&k4, &bb).unwrap(), vec![VertexSet::full(4)]);
        assert_eq!(enumerate_maximal_cliques(&make_cycle(6).unwrap(), &bb).unwrap().len(), 6);
        assert!(enumerate_maximal_cliques(&Graph::empty(41), &bb).is_err());
    }

    #[test]
    fn colouring() {
        let bb = b();
        assert_eq!(chromatic_number(&make_cycle(5).unwrap(), &bb).unwrap().0, 3);
        assert_eq!(chromatic_number(&make_cycle(6).unwrap(), &bb).unwrap().0, 2);
        assert_eq!(chromatic_number(&make_petersen(), &bb).unwrap().0, 3);
        assert_eq!(chromatic_number(&make_complete(6), &bb).unwrap().0, 6);
        assert_eq!(clique_cover_number(&make_cycle(9).unwrap(), &bb).unwrap(), 5);
    }

    #[test]
    fn brute_force_matches() {
        assert_eq!(brute_force_mis(&make_cycle(5).unwrap()).unwrap().value, 2);
        assert_eq!(brute_force_mis(&make_cycle(7).unwrap()).unwrap().value, 3);
        assert_eq!(brute_force_mis(&make_petersen()).unwrap().value, 4);
        assert!(brute_force_mis(&Graph::empty(21)).is_err());
    }
}
