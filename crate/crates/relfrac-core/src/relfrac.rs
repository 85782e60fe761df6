//! α*(G|H) by every available route, the fractional independence and
//! chromatic numbers, the Γ0/Γ1 assignment bounds and the certificates
//! behind them.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::bitset::{self, VertexSet};
use crate::budget::{Budget, Ticker};
use crate::error::{Error, Result};
use crate::graph::{complement, strong_power, strong_product, DerivedOp, Family, Graph};
use crate::lp::{self, LinearProgram, LpStatus, Row};
use crate::mis::{self, max_weight_independent_set};
use crate::symmetry;
use crate::Rational;

/// A map from vertices of G to independent sets of H such that the images
/// of any two non-adjacent vertices are disconnected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AssignmentF {
    pub sets: Vec<VertexSet>,
}

impl AssignmentF {
    pub fn sizes(&self) -> Vec<usize> {
        self.sets.iter().map(VertexSet::len).collect()
    }

    pub fn is_valid(&self, g: &Graph, h: &Graph) -> bool {
        if self.sets.len() != g.n() || self.sets.iter().any(|s| s.universe() != h.n() || !h.is_independent(s)) {
            return false;
        }
        for i in 0..g.n() {
            for j in i + 1..g.n() {
                if !g.has_edge(i, j) {
                    let (s, t) = (&self.sets[i], &self.sets[j]);
                    if !s.is_disjoint(t) || !h.is_independent(&s.union(t)) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Reads an independent set of `complement(g) ⊠ h` as an assignment.
    pub fn from_product_set(g: &Graph, h: &Graph, s: &VertexSet) -> AssignmentF {
        let m = h.n();
        let mut sets = vec![VertexSet::new(m); g.n()];
        for p in s.iter() {
            sets[p / m].insert(p % m);
        }
        AssignmentF { sets }
    }

    /// The assignment `v ↦ self(σ⁻¹(v))` for an automorphism σ of G.
    pub fn permuted(&self, sigma: &[usize]) -> AssignmentF {
        let mut sets = self.sets.clone();
        for (v, &s) in sigma.iter().enumerate() {
            sets[s] = self.sets[v].clone();
        }
        AssignmentF { sets }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Lp,
    VertexTransitive,
    ClosedCycles,
    ClosedCayley,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Lp => "lp",
            Method::VertexTransitive => "vertex_transitive",
            Method::ClosedCycles => "closed_cycles",
            Method::ClosedCayley => "closed_cayley",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MethodChoice {
    Auto,
    Lp,
    Vt,
    Closed,
}

pub type Distribution = Vec<(AssignmentF, Rational)>;

#[derive(Clone, Debug)]
pub struct RelFracResult {
    pub value: Rational,
    pub method: Method,
    pub weights: Vec<Rational>,
    pub dual_cert: Option<Distribution>,
    pub witness: Option<Graph>,
    /// Separation rounds (LP) and search nodes spent.
    pub rounds: usize,
    pub nodes: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GammaValue {
    Finite(Rational),
    Infinite,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GammaKind {
    Gamma0,
    Gamma1,
}

#[derive(Clone, Debug)]
pub struct GammaResult {
    pub kind: GammaKind,
    pub value: GammaValue,
    pub best_assignment: Option<AssignmentF>,
    pub distribution: Option<Distribution>,
}

fn int(v: usize) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

fn frac(p: usize, q: usize) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

fn product_checked(a: &Graph, b: &Graph, budget: &Budget) -> Result<Graph> {
    budget.check_product(a.n() * b.n())?;
    Ok(strong_product(a, b))
}

fn require_h(h: &Graph) -> Result<()> {
    if h.n() == 0 {
        return Err(Error::InvalidArgument("H must have at least one vertex".into()));
    }
    Ok(())
}

/// α*(g): the clique LP.
pub fn fractional_independence(g: &Graph, budget: &Budget) -> Result<Rational> {
    if g.n() == 0 {
        return Ok(Rational::zero());
    }
    let cliques = mis::enumerate_maximal_cliques(g, budget)?;
    let rows: Vec<Row> = cliques
        .iter()
        .map(|c| ((0..g.n()).map(|v| if c.contains(v) { Rational::one() } else { Rational::zero() }).collect(), Rational::one()))
        .collect();
    let lp = LinearProgram { dim: g.n(), objective: vec![Rational::one(); g.n()], rows };
    let res = lp::solve_lp(&lp)?;
    if res.status != LpStatus::Optimal {
        return Err(Error::Inconsistency("clique LP not optimal".into()));
    }
    Ok(res.value)
}

/// χ_f(g) = α*(complement(g)).
pub fn fractional_chromatic(g: &Graph, budget: &Budget) -> Result<Rational> {
    fractional_independence(&complement(g), budget)
}

/// Extends an independent set greedily by ascending id.
fn saturate(g: &Graph, s: &VertexSet) -> VertexSet {
    let mut out = s.clone();
    let mut blocked = VertexSet::new(g.n());
    for v in s.iter() {
        for u in g.neighbors(v) {
            blocked.insert(u);
        }
    }
    for v in 0..g.n() {
        if !out.contains(v) && !blocked.contains(v) {
            out.insert(v);
            for u in g.neighbors(v) {
                blocked.insert(u);
            }
        }
    }
    out
}

fn uniform(value: &Rational, n: usize) -> Vec<Rational> {
    vec![value / int(n); n]
}

/// Normalises LP duals into a distribution and checks that the worst vertex
/// expectation is exactly `1/value`.
fn certificate(assignments: &[AssignmentF], dual: &[Rational], value: &Rational, g: &Graph, h: &Graph) -> Result<Distribution> {
    let total: Rational = dual.iter().sum();
    if !total.is_positive() {
        return Err(Error::Inconsistency("dual certificate has zero mass".into()));
    }
    let dist: Distribution = assignments
        .iter()
        .zip(dual)
        .filter(|(_, y)| !y.is_zero())
        .map(|(f, y)| (f.clone(), y / &total))
        .collect();
    verify_distribution(&dist, value, g, h)?;
    Ok(dist)
}

/// min over v of E|F(v)|.
pub fn distribution_min_expectation(dist: &Distribution, n: usize) -> Option<Rational> {
    (0..n)
        .map(|v| dist.iter().map(|(f, b)| b * int(f.sets[v].len())).sum::<Rational>())
        .min()
}

pub fn verify_distribution(dist: &Distribution, value: &Rational, g: &Graph, h: &Graph) -> Result<()> {
    let mass: Rational = dist.iter().map(|(_, b)| b.clone()).sum();
    if !mass.is_one() || dist.iter().any(|(_, b)| b.is_negative()) {
        return Err(Error::Inconsistency("distribution does not sum to one".into()));
    }
    if let Some((f, _)) = dist.iter().find(|(f, _)| !f.is_valid(g, h)) {
        return Err(Error::Inconsistency(format!("invalid assignment in certificate: {:?}", f.sizes())));
    }
    let m = distribution_min_expectation(dist, g.n());
    if g.n() > 0 && m.as_ref().map(|m| m * value) != Some(Rational::one()) {
        return Err(Error::Inconsistency(format!("certificate expectation {m:?} does not match 1/{value}")));
    }
    Ok(())
}

/// The LP of assignments solved by cutting planes with weighted-MIS
/// separation on `complement(g) ⊠ h`.
pub fn relfrac_lp(g: &Graph, h: &Graph, budget: &Budget) -> Result<RelFracResult> {
    require_h(h)?;
    let k = g.n();
    if k == 0 {
        return Ok(RelFracResult {
            value: Rational::zero(),
            method: Method::Lp,
            weights: vec![],
            dual_cert: Some(vec![]),
            witness: None,
            rounds: 0,
            nodes: 0,
        });
    }
    let m = h.n();
    let prod = product_checked(&complement(g), h, budget)?;
    let mh = mis::max_independent_set(h, budget)?;
    let alpha_h = mh.value;
    let mut assignments = Vec::new();
    let mut seeds = Vec::new();
    for i in 0..k {
        let mut sets = vec![VertexSet::new(m); k];
        sets[i] = mh.witness.clone();
        assignments.push(AssignmentF { sets });
        let mut row = vec![Rational::zero(); k];
        row[i] = int(alpha_h);
        seeds.push((row, Rational::one()));
    }
    let mut nodes = mh.nodes;
    let objective = vec![Rational::one(); k];
    let mut generated = Vec::new();
    let cp = lp::cutting_plane_maximize(k, &objective, seeds, budget.lp_iterations, |w| {
        let pw: Vec<Rational> = (0..k * m).map(|p| w[p / m].clone()).collect();
        let r = max_weight_independent_set(&prod, &pw, budget)?;
        nodes += r.nodes;
        if r.value <= Rational::one() {
            return Ok(None);
        }
        let f = AssignmentF::from_product_set(g, h, &saturate(&prod, &r.witness));
        let row = f.sizes().into_iter().map(int).collect();
        generated.push(f);
        Ok(Some((row, Rational::one())))
    })?;
    if cp.lp.status != LpStatus::Optimal {
        return Err(Error::Inconsistency(format!("relfrac LP ended {:?}", cp.lp.status)));
    }
    assignments.extend(generated);
    let lp_full = LinearProgram { dim: k, objective, rows: cp.rows.clone() };
    if !lp::verify_optimal(&lp_full, &cp.lp) {
        return Err(Error::Inconsistency("LP optimality conditions fail".into()));
    }
    let value = cp.lp.value.clone();
    let cert = certificate(&assignments, &cp.lp.dual, &value, g, h)?;
    Ok(RelFracResult {
        value,
        method: Method::Lp,
        weights: cp.lp.primal,
        dual_cert: Some(cert),
        witness: None,
        rounds: cp.generated,
        nodes,
    })
}

/// |V(g)| / α(complement(g) ⊠ h), valid for vertex-transitive g.
pub fn relfrac_vertex_transitive(g: &Graph, h: &Graph, budget: &Budget) -> Result<RelFracResult> {
    require_h(h)?;
    if !symmetry::is_vertex_transitive_with(g, budget) {
        return Err(Error::NotVertexTransitive);
    }
    if g.n() == 0 {
        return Ok(RelFracResult {
            value: Rational::zero(),
            method: Method::VertexTransitive,
            weights: vec![],
            dual_cert: None,
            witness: None,
            rounds: 0,
            nodes: 0,
        });
    }
    let r = transitive_product_mis(g, h, budget)?;
    let value = frac(g.n(), r.value);
    Ok(RelFracResult {
        weights: uniform(&value, g.n()),
        value,
        method: Method::VertexTransitive,
        dual_cert: None,
        witness: None,
        rounds: 0,
        nodes: r.nodes,
    })
}

/// α(complement(g) ⊠ h), seeded from the factors when both graphs are
/// strong products: independent sets S1 of complement(g1)⊠h1 and S2 of
/// complement(g2)⊠h2 combine into S1×S2.
fn transitive_product_mis(g: &Graph, h: &Graph, budget: &Budget) -> Result<mis::MisResult> {
    let prod = product_checked(&complement(g), h, budget)?;
    let seed = match (g.family(), h.family()) {
        (
            Some(Family::Derived { op: DerivedOp::StrongProduct, parents: gp }),
            Some(Family::Derived { op: DerivedOp::StrongProduct, parents: hp }),
        ) => {
            let r1 = transitive_product_mis(&gp[0], &hp[0], budget)?;
            let r2 = transitive_product_mis(&gp[1], &hp[1], budget)?;
            let (m1, m2, n2) = (hp[0].n(), hp[1].n(), gp[1].n());
            let mut w = VertexSet::new(prod.n());
            for p1 in r1.witness.iter() {
                for p2 in r2.witness.iter() {
                    let (g1, h1, g2, h2) = (p1 / m1, p1 % m1, p2 / m2, p2 % m2);
                    w.insert((g1 * n2 + g2) * h.n() + h1 * m2 + h2);
                }
            }
            debug_assert!(prod.is_independent(&w));
            Some((w.len(), w))
        }
        _ => None,
    };
    // a bound on α of the product is not a bound on α*(g|h)
    mis::mis_seeded(&prod, seed, budget).map_err(|e| match e {
        Error::Timeout { .. } => Error::Timeout { lower_bound: None },
        e => e,
    })
}

/// α*(C_n | C_m) in closed form. For n = 3 the cycle is a triangle and
/// the value is 1/α(C_m) = 1/⌊m/2⌋.
pub fn relfrac_cycles(n: usize, m: usize) -> Result<Rational> {
    if n < 3 || m < 3 {
        return Err(Error::InvalidParameter(format!("cycles need n, m >= 3, got ({n},{m})")));
    }
    if n == 3 {
        return Ok(frac(1, m / 2));
    }
    let (n_odd, m_odd) = (n % 2 == 1, m % 2 == 1);
    Ok(match (n_odd, m_odd) {
        (false, true) => frac(n, m - 1),
        (_, false) => frac(n, m),
        (true, true) if n <= m => frac(n, m),
        (true, true) => frac(n, m - 1),
    })
}

/// The (ℓ, s) with m = ℓn + s(k+1) and the least ℓ, if any.
pub fn cayley_decomposition(n: usize, m: usize, k: usize) -> Option<(usize, usize)> {
    (0..=m / n).find(|&l| (m - l * n) % (k + 1) == 0).map(|l| (l, (m - l * n) / (k + 1)))
}

/// α*(Cay(Z_n,±1..±k) | Cay(Z_m,±1..±k)) = n/m when m decomposes as
/// ℓn + s(k+1); `None` otherwise (only the lower bound n/m is known).
pub fn relfrac_cayley(n: usize, m: usize, k: usize) -> Result<Option<Rational>> {
    if k < 1 || 2 * k >= n || n >= m {
        return Err(Error::InvalidParameter(format!("need 1 <= 2k < n < m, got n={n}, m={m}, k={k}")));
    }
    Ok(cayley_decomposition(n, m, k).map(|_| frac(n, m)))
}

fn closed_form(g: &Graph, h: &Graph) -> Option<Result<(Rational, Method)>> {
    let (n, kg) = g.family()?.circulant_params()?;
    let (m, kh) = h.family()?.circulant_params()?;
    if kg != kh {
        return None;
    }
    if kg == 1 {
        return Some(relfrac_cycles(n, m).map(|v| (v, Method::ClosedCycles)));
    }
    if 2 * kg < n && n < m {
        return match relfrac_cayley(n, m, kg) {
            Ok(Some(v)) => Some(Ok((v, Method::ClosedCayley))),
            Ok(None) => None,
            Err(e) => Some(Err(e)),
        };
    }
    None
}

/// Dispatcher: closed form, then the vertex-transitive formula, then the LP.
/// With `cross_check` a second route must agree exactly.
pub fn relfrac(g: &Graph, h: &Graph, choice: MethodChoice, cross_check: bool, budget: &Budget) -> Result<RelFracResult> {
    require_h(h)?;
    let primary = match choice {
        MethodChoice::Lp => relfrac_lp(g, h, budget)?,
        MethodChoice::Vt => relfrac_vertex_transitive(g, h, budget)?,
        MethodChoice::Closed => match closed_form(g, h) {
            Some(r) => closed_result(r?, g),
            None => return Err(Error::InvalidArgument("no closed form applies to these graphs".into())),
        },
        MethodChoice::Auto => match closed_form(g, h) {
            Some(r) => closed_result(r?, g),
            None if symmetry::is_vertex_transitive_with(g, budget) => relfrac_vertex_transitive(g, h, budget)?,
            None => relfrac_lp(g, h, budget)?,
        },
    };
    if cross_check {
        let second = match primary.method {
            Method::ClosedCycles | Method::ClosedCayley => Some(relfrac_vertex_transitive(g, h, budget)?),
            Method::VertexTransitive => Some(relfrac_lp(g, h, budget)?),
            Method::Lp if symmetry::is_vertex_transitive_with(g, budget) => Some(relfrac_vertex_transitive(g, h, budget)?),
            Method::Lp => None,
        };
        if let Some(s) = second {
            if s.value != primary.value {
                return Err(Error::Inconsistency(format!(
                    "{} gives {} but {} gives {}",
                    primary.method.name(),
                    primary.value,
                    s.method.name(),
                    s.value
                )));
            }
        }
    }
    Ok(primary)
}

fn closed_result((value, method): (Rational, Method), g: &Graph) -> RelFracResult {
    RelFracResult {
        weights: uniform(&value, g.n()),
        value,
        method,
        dual_cert: None,
        witness: None,
        rounds: 0,
        nodes: 0,
    }
}

/// α(g⊠w) / α(h⊠w): a lower bound on α*(g|h) for any w.
pub fn ratio_lower_bound(g: &Graph, h: &Graph, w: &Graph, budget: &Budget) -> Result<Rational> {
    let a = mis::independence_number(&product_checked(g, w, budget)?, budget)?;
    let b = mis::independence_number(&product_checked(h, w, budget)?, budget)?;
    if b == 0 {
        return Err(Error::InvalidArgument("α(h⊠w) is zero".into()));
    }
    Ok(frac(a, b))
}

struct AssignSearch<'a, 'b> {
    g: &'a Graph,
    h: &'a Graph,
    t: usize,
    order: Vec<usize>,
    sets: Vec<Option<VertexSet>>,
    ticker: Ticker<'b>,
    limit: u64,
    capped: bool,
}

impl AssignSearch<'_, '_> {
    /// H-vertices still usable by `v` given the assigned non-neighbours.
    fn allowed(&self, v: usize) -> Vec<u64> {
        let mut a = VertexSet::full(self.h.n()).words().to_vec();
        for u in 0..self.g.n() {
            if u == v || self.g.has_edge(u, v) {
                continue;
            }
            if let Some(s) = &self.sets[u] {
                for x in s.iter() {
                    bitset::clear_bit(&mut a, x);
                    for (p, q) in a.iter_mut().zip(self.h.row(x)) {
                        *p &= !q;
                    }
                }
            }
        }
        a
    }

    /// Cheap upper bound on α(h[a]) by a greedy clique cover.
    fn cover_bound(&self, a: &[u64]) -> usize {
        let mut q = a.to_vec();
        let mut k = 0;
        while let Some(v) = bitset::first_bit(&q) {
            k += 1;
            let mut r = q.clone();
            while let Some(u) = bitset::first_bit(&r) {
                bitset::clear_bit(&mut q, u);
                for (p, s) in r.iter_mut().zip(self.h.row(u)) {
                    *p &= s;
                }
            }
            let _ = v;
        }
        k
    }

    fn search(&mut self, depth: usize) -> bool {
        if self.ticker.tick() || self.ticker.count() > self.limit {
            self.capped = true;
        }
        if self.capped {
            return false;
        }
        if depth == self.order.len() {
            return true;
        }
        let v = self.order[depth];
        let a = self.allowed(v);
        let mut chosen = Vec::new();
        self.choose(depth, v, &a, &mut chosen)
    }

    /// Enumerates independent `t`-subsets of `cand` in lexicographic order.
    fn choose(&mut self, depth: usize, v: usize, cand: &[u64], chosen: &mut Vec<usize>) -> bool {
        if chosen.len() == self.t {
            let s = VertexSet::from_vertices(self.h.n(), chosen.iter().copied());
            self.sets[v] = Some(s);
            if self.forward_ok(depth) && self.search(depth + 1) {
                return true;
            }
            self.sets[v] = None;
            return false;
        }
        if bitset::popcount(cand) < self.t - chosen.len() {
            return false;
        }
        let mut rest = cand.to_vec();
        while let Some(x) = bitset::first_bit(&rest) {
            bitset::clear_bit(&mut rest, x);
            let mut next = rest.clone();
            for (p, q) in next.iter_mut().zip(self.h.row(x)) {
                *p &= !q;
            }
            chosen.push(x);
            let ok = self.choose(depth, v, &next, chosen);
            chosen.pop();
            if ok {
                return true;
            }
            if self.capped || bitset::popcount(&rest) < self.t - chosen.len() {
                return false;
            }
        }
        false
    }

    fn forward_ok(&self, depth: usize) -> bool {
        self.order[depth + 1..].iter().all(|&u| self.cover_bound(&self.allowed(u)) >= self.t)
    }
}

/// Searches for f in F(h,g) with every |f(v)| = t.
fn assignment_with_min(g: &Graph, h: &Graph, t: usize, budget: &Budget) -> Result<Option<AssignmentF>> {
    let mut order: Vec<usize> = (0..g.n()).collect();
    // most non-neighbours first
    order.sort_by_key(|&v| (g.degree(v), v));
    let mut s = AssignSearch {
        g,
        h,
        t,
        order,
        sets: vec![None; g.n()],
        ticker: budget.ticker(),
        limit: budget.search_nodes,
        capped: false,
    };
    let found = s.search(0);
    if s.capped {
        if budget.expired() {
            return Err(Error::Timeout { lower_bound: None });
        }
        return Err(Error::SearchCap { what: "assignment search", nodes: budget.search_nodes });
    }
    Ok(found.then(|| AssignmentF { sets: s.sets.into_iter().map(Option::unwrap).collect() }))
}

/// Γ0(g,h) = 1/t for the largest t such that some f in F(h,g) has all
/// |f(v)| >= t, or infinite when no f avoids empty images.
pub fn gamma0(g: &Graph, h: &Graph, budget: &Budget) -> Result<GammaResult> {
    require_h(h)?;
    if g.n() == 0 {
        return Err(Error::InvalidArgument("G must have at least one vertex".into()));
    }
    let ah = mis::independence_number(h, budget)?;
    let ag = mis::independence_number(g, budget)?;
    // Γ0 >= α*(g|h) >= α(g)/α(h)
    let top = ah / ag;
    for t in (1..=top).rev() {
        if let Some(f) = assignment_with_min(g, h, t, budget)? {
            return Ok(GammaResult {
                kind: GammaKind::Gamma0,
                value: GammaValue::Finite(frac(1, t)),
                best_assignment: Some(f),
                distribution: None,
            });
        }
    }
    Ok(GammaResult { kind: GammaKind::Gamma0, value: GammaValue::Infinite, best_assignment: None, distribution: None })
}

/// Automorphisms of g acting transitively: rotations for circulants,
/// otherwise one searched automorphism per target vertex.
fn transitive_automorphisms(g: &Graph, budget: &Budget) -> Option<Vec<Vec<usize>>> {
    let n = g.n();
    if let Some((nn, _)) = g.family().and_then(Family::circulant_params) {
        if nn == n {
            return Some((0..n).map(|s| (0..n).map(|v| (v + s) % n).collect()).collect());
        }
    }
    (0..n).map(|x| symmetry::find_automorphism(g, 0, x, budget)).collect()
}

/// Γ1 with an explicit distribution over assignments whose worst vertex
/// expectation is exactly 1/α*(g|h).
pub fn gamma1_certificate(g: &Graph, h: &Graph, budget: &Budget) -> Result<GammaResult> {
    require_h(h)?;
    if g.n() > 0 && symmetry::is_vertex_transitive_with(g, budget) {
        if let Some(r) = gamma1_symmetric(g, h, budget)? {
            return Ok(r);
        }
    }
    let r = relfrac_lp(g, h, budget)?;
    Ok(GammaResult {
        kind: GammaKind::Gamma1,
        value: GammaValue::Finite(r.value),
        best_assignment: None,
        distribution: r.dual_cert,
    })
}

/// For vertex-transitive g: the images of one optimal assignment under a
/// transitive set of automorphisms, weighted by a small LP.
fn gamma1_symmetric(g: &Graph, h: &Graph, budget: &Budget) -> Result<Option<GammaResult>> {
    let r = transitive_product_mis(g, h, budget)?;
    let value = frac(g.n(), r.value);
    let base = AssignmentF::from_product_set(g, h, &r.witness);
    let Some(autos) = transitive_automorphisms(g, budget) else {
        return Ok(None);
    };
    let mut fs: Vec<AssignmentF> = Vec::new();
    for sigma in &autos {
        let f = base.permuted(sigma);
        if !fs.contains(&f) {
            fs.push(f);
        }
    }
    let k = g.n();
    let rows: Vec<Row> = fs.iter().map(|f| (f.sizes().into_iter().map(int).collect(), Rational::one())).collect();
    let lp = LinearProgram { dim: k, objective: vec![Rational::one(); k], rows };
    let res = lp::solve_lp(&lp)?;
    if res.status != LpStatus::Optimal || res.value != value {
        return Ok(None);
    }
    let dist = certificate(&fs, &res.dual, &value, g, h)?;
    Ok(Some(GammaResult {
        kind: GammaKind::Gamma1,
        value: GammaValue::Finite(value),
        best_assignment: None,
        distribution: Some(dist),
    }))
}

#[derive(Clone, Debug)]
pub struct MaximizerWitness {
    pub graph: Graph,
    /// Copies of each vertex of g.
    pub copies: Vec<usize>,
    pub replication: BigInt,
    pub alpha_gw: usize,
    pub alpha_hw: usize,
}

/// complement(g) with vertex i copied N·w_i times; copies of one vertex are
/// pairwise non-adjacent.
pub fn replicated_complement(g: &Graph, copies: &[usize]) -> Graph {
    let mut owner = Vec::new();
    for (i, &c) in copies.iter().enumerate() {
        owner.extend(core::iter::repeat_n(i, c));
    }
    let mut w = Graph::empty(owner.len());
    for a in 0..owner.len() {
        for b in a + 1..owner.len() {
            let (i, j) = (owner[a], owner[b]);
            if i != j && !g.has_edge(i, j) {
                w.add_edge_raw(a, b);
            }
        }
    }
    w.with_family(Family::Derived { op: DerivedOp::Replicated, parents: vec![alloc::sync::Arc::new(g.clone())] })
}

/// A graph W attaining α(g⊠W)/α(h⊠W) = α*(g|h), verified exactly.
pub fn maximizer_witness(g: &Graph, h: &Graph, budget: &Budget) -> Result<MaximizerWitness> {
    let r = relfrac(g, h, MethodChoice::Auto, false, budget)?;
    maximizer_from_weights(g, h, &r.value, &r.weights, budget)
}

pub fn maximizer_from_weights(g: &Graph, h: &Graph, value: &Rational, weights: &[Rational], budget: &Budget) -> Result<MaximizerWitness> {
    let big_n = weights.iter().fold(BigInt::one(), |acc, w| acc.lcm(w.denom()));
    let mut copies = Vec::with_capacity(weights.len());
    let mut total = 0usize;
    for w in weights {
        let c = (w * Rational::from_integer(big_n.clone())).to_integer();
        let c: usize = usize::try_from(c).map_err(|_| Error::SizeLimit { what: "witness order", actual: usize::MAX, limit: budget.witness_cap })?;
        total = total.saturating_add(c);
        copies.push(c);
    }
    if total > budget.witness_cap {
        return Err(Error::SizeLimit { what: "witness order", actual: total, limit: budget.witness_cap });
    }
    let w = replicated_complement(g, &copies);
    let a = mis::independence_number(&product_checked(g, &w, budget)?, budget)?;
    let b = mis::independence_number(&product_checked(h, &w, budget)?, budget)?;
    if b == 0 || frac(a, b) != *value {
        return Err(Error::Inconsistency(format!("witness ratio {a}/{b} differs from {value}")));
    }
    Ok(MaximizerWitness { graph: w, copies, replication: big_n, alpha_gw: a, alpha_hw: b })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CapacityBound {
    pub alpha: usize,
    /// d-th root of alpha rounded to six decimals; display only.
    pub root: String,
}

pub fn capacity_lower_bound(g: &Graph, d: usize, budget: &Budget) -> Result<CapacityBound> {
    if d < 1 {
        return Err(Error::InvalidParameter("d must be >= 1".into()));
    }
    budget.check_product(g.n().saturating_pow(d as u32))?;
    let p = strong_power(g, d)?;
    let alpha = mis::independence_number(&p, budget)?;
    Ok(CapacityBound { alpha, root: decimal_root(alpha, d) })
}

/// `alpha^(1/d)` rounded half-up to six decimals, by exact integer roots.
pub fn decimal_root(alpha: usize, d: usize) -> String {
    let scale = BigInt::from(10u32).pow(6 * d as u32);
    let x = BigInt::from(alpha) * &scale;
    let r: BigInt = x.nth_root(d as u32);
    // round: compare (2r+1)^d with 2^d x
    let two = BigInt::from(2);
    let lhs: BigInt = (&two * &r + 1u32).pow(d as u32);
    let rhs = two.pow(d as u32) * &x;
    let r = if lhs <= rhs { r + 1 } else { r };
    let (q, rem) = r.div_rem(&BigInt::from(1_000_000));
    format!("{q}.{rem:06}")
}

/// The subgraph of G* on the given independent sets: an edge whenever two
/// distinct sets are not disconnected.
pub fn independence_subgraph(g: &Graph, sets: &[VertexSet]) -> Result<Graph> {
    if sets.iter().any(|s| s.universe() != g.n() || !g.is_independent(s)) {
        return Err(Error::InvalidArgument("sets must be independent sets of g".into()));
    }
    let mut out = Graph::empty(sets.len());
    for i in 0..sets.len() {
        for j in i + 1..sets.len() {
            let (s, t) = (&sets[i], &sets[j]);
            if !(s.is_disjoint(t) && g.is_independent(&s.union(t))) {
                out.add_edge_raw(i, j);
            }
        }
    }
    Ok(out)
}

/// Upper bound on α*(H|g) for H the subgraph of G* induced on `sets`:
/// 1/min N_v, sharpened to |V(H)|/Σ N_v when H is vertex-transitive.
pub fn independence_graph_bound(g: &Graph, sets: &[VertexSet], budget: &Budget) -> Result<Rational> {
    let hh = independence_subgraph(g, sets)?;
    let min = sets.iter().map(VertexSet::len).min().unwrap_or(0);
    if min == 0 {
        return Err(Error::InvalidArgument("every set must be non-empty".into()));
    }
    let mut bound = frac(1, min);
    if symmetry::is_vertex_transitive_with(&hh, budget) {
        let total: usize = sets.iter().map(VertexSet::len).sum();
        let vt = frac(sets.len(), total);
        if vt < bound {
            bound = vt;
        }
    }
    Ok(bound)
}

#[derive(Clone, Debug)]
pub struct IndependenceGraphInfo {
    pub gstar: Graph,
    pub set_of: Vec<VertexSet>,
    pub nv: Vec<usize>,
}

/// G*: all independent sets of g (∅ first, then lexicographic) with edges
/// between sets that are not disconnected.
pub fn independence_graph(g: &Graph, budget: &Budget) -> Result<IndependenceGraphInfo> {
    if g.n() > budget.gstar_cap {
        return Err(Error::SizeLimit { what: "independence graph base order", actual: g.n(), limit: budget.gstar_cap });
    }
    let mut sets = vec![VertexSet::new(g.n())];
    independent_sets_from(g, &VertexSet::new(g.n()), 0, &mut sets, budget.gstar_sets_cap)?;
    let gstar = independence_subgraph(g, &sets)?;
    let nv = sets.iter().map(VertexSet::len).collect();
    Ok(IndependenceGraphInfo { gstar, set_of: sets, nv })
}

/// Appends every independent extension of `s` by vertices `>= from`, in
/// lexicographic order.
fn independent_sets_from(g: &Graph, s: &VertexSet, from: usize, out: &mut Vec<VertexSet>, cap: usize) -> Result<()> {
    for v in from..g.n() {
        if s.iter().any(|u| g.has_edge(u, v)) {
            continue;
        }
        let mut t = s.clone();
        t.insert(v);
        out.push(t.clone());
        if out.len() > cap {
            return Err(Error::SizeLimit { what: "independent set count", actual: out.len(), limit: cap });
        }
        independent_sets_from(g, &t, v + 1, out, cap)?;
    }
    Ok(())
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
    fn fractional_values() {
        let bb = b();
        assert_eq!(fractional_independence(&make_cycle(5).unwrap(), &bb).unwrap(), rat(5, 2));
        assert_eq!(fractional_independence(&make_complete(6), &bb).unwrap(), rat(1, 1));
        assert_eq!(fractional_independence(&make_cayley_cyclic(9, 2).unwrap(), &bb).unwrap(), rat(3, 1));
        assert_eq!(fractional_chromatic(&make_cycle(5).unwrap(), &bb).unwrap(), rat(5, 2));
        assert_eq!(fractional_chromatic(&make_complete(4), &bb).unwrap(), rat(4, 1));
        assert_eq!(fractional_chromatic(&make_cycle(6).unwrap(), &bb).unwrap(), rat(2, 1));
    }

    #[test]
    fn lp_examples() {
        let bb = b();
        for g in [make_cycle(5).unwrap(), make_cycle(7).unwrap(), make_complete(4)] {
            assert_eq!(relfrac_lp(&g, &g, &bb).unwrap().value, rat(1, 1));
        }
        let k1 = make_complete(1);
        let c5 = make_cycle(5).unwrap();
        assert_eq!(relfrac_lp(&k1, &c5, &bb).unwrap().value, rat(1, 2));
        assert_eq!(relfrac_lp(&c5, &k1, &bb).unwrap().value, rat(5, 2));
        let p3 = make_path(3);
        assert_eq!(relfrac(&p3, &make_cycle(3).unwrap(), MethodChoice::Auto, false, &bb).unwrap().value, rat(2, 1));
    }

    #[test]
    fn closed_forms() {
        assert_eq!(relfrac_cycles(9, 11).unwrap(), rat(9, 11));
        assert_eq!(relfrac_cycles(7, 5).unwrap(), rat(7, 4));
        assert_eq!(relfrac_cycles(4, 7).unwrap(), rat(2, 3));
        assert_eq!(relfrac_cycles(3, 4).unwrap(), rat(1, 2));
        assert_eq!(relfrac_cayley(5, 13, 1).unwrap(), Some(rat(5, 13)));
        assert_eq!(relfrac_cayley(5, 7, 2).unwrap(), None);
        assert_eq!(relfrac_cayley(7, 14, 1).unwrap(), Some(rat(1, 2)));
        assert!(relfrac_cayley(4, 7, 2).is_err());
    }

    #[test]
    fn vertex_transitive_examples() {
        let bb = b();
        let c5 = make_cycle(5).unwrap();
        let c7 = make_cycle(7).unwrap();
        assert_eq!(relfrac_vertex_transitive(&c7, &c5, &bb).unwrap().value, rat(7, 4));
        assert_eq!(relfrac_vertex_transitive(&c5, &c7, &bb).unwrap().value, rat(5, 7));
        let g = make_cayley_cyclic(9, 3).unwrap();
        assert_eq!(relfrac_vertex_transitive(&g, &make_cycle(9).unwrap(), &bb).unwrap().value, rat(1, 2));
        assert_eq!(relfrac_vertex_transitive(&make_path(3), &c5, &bb).unwrap_err(), Error::NotVertexTransitive);
    }

    #[test]
    fn dispatcher() {
        let bb = b();
        let c5 = make_cycle(5).unwrap();
        let c7 = make_cycle(7).unwrap();
        let r = relfrac(&c5, &c7, MethodChoice::Auto, true, &bb).unwrap();
        assert_eq!((r.value, r.method), (rat(5, 7), Method::ClosedCycles));
        let r = relfrac(&make_complete(1), &c5, MethodChoice::Auto, true, &bb).unwrap();
        assert_eq!((r.value, r.method), (rat(1, 2), Method::VertexTransitive));
    }

    #[test]
    fn ratio_examples() {
        let bb = b();
        let c5 = make_cycle(5).unwrap();
        let c4 = make_cycle(4).unwrap();
        assert_eq!(ratio_lower_bound(&c5, &c4, &make_complete(1), &bb).unwrap(), rat(1, 1));
        assert_eq!(ratio_lower_bound(&c5, &c5, &make_petersen(), &bb).unwrap(), rat(1, 1));
        assert_eq!(ratio_lower_bound(&c5, &c4, &complement(&c5), &bb).unwrap(), rat(5, 4));
    }

    #[test]
    fn gamma_examples() {
        let bb = b();
        let r = gamma0(&make_cycle(3).unwrap(), &make_johnson3(6).unwrap(), &bb).unwrap();
        assert_eq!(r.value, GammaValue::Finite(rat(1, 4)));
        let c5 = make_cycle(5).unwrap();
        assert_eq!(gamma0(&c5, &c5, &bb).unwrap().value, GammaValue::Finite(rat(1, 1)));
        // an edgeless G against a single vertex cannot avoid empty images
        let r = gamma0(&Graph::empty(2), &make_complete(1), &bb).unwrap();
        assert_eq!(r.value, GammaValue::Infinite);
        let r = gamma1_certificate(&c5, &c5, &bb).unwrap();
        assert_eq!(r.value, GammaValue::Finite(rat(1, 1)));
        let r = gamma1_certificate(&make_cycle(3).unwrap(), &make_johnson3(6).unwrap(), &bb).unwrap();
        assert_eq!(r.value, GammaValue::Finite(rat(1, 4)));
    }

    #[test]
    fn witness_examples() {
        let bb = b();
        let c5 = make_cycle(5).unwrap();
        let w = maximizer_witness(&c5, &make_complete(1), &bb).unwrap();
        // weights 1/2 give N = 2 and one copy per vertex
        assert_eq!((w.graph.n(), w.copies.clone()), (5, vec![1; 5]));
        assert_eq!(rat(w.alpha_gw as i64, w.alpha_hw as i64), rat(5, 2));
        let w = maximizer_witness(&c5, &make_cycle(4).unwrap(), &bb).unwrap();
        assert_eq!(rat(w.alpha_gw as i64, w.alpha_hw as i64), rat(5, 4));
    }

    #[test]
    fn capacity_examples() {
        let bb = b();
        let c = capacity_lower_bound(&make_cycle(5).unwrap(), 2, &bb).unwrap();
        assert_eq!((c.alpha, c.root.as_str()), (5, "2.236068"));
        let c = capacity_lower_bound(&make_complete(3), 3, &bb).unwrap();
        assert_eq!((c.alpha, c.root.as_str()), (1, "1.000000"));
        assert_eq!(decimal_root(2, 1), "2.000000");
    }

    #[test]
    fn independence_graph_examples() {
        let bb = b();
        let k2 = make_complete(2);
        let info = independence_graph(&k2, &bb).unwrap();
        assert_eq!(info.nv, vec![0, 1, 1]);
        assert!(info.gstar.has_edge(1, 2));
        assert_eq!(info.gstar.degree(0), 0);
        let info = independence_graph(&Graph::empty(2), &bb).unwrap();
        assert_eq!(info.set_of.len(), 4);
        let idx = |v: usize| info.set_of.iter().position(|s| s.to_vec() == vec![v]).unwrap();
        assert!(!info.gstar.has_edge(idx(0), idx(1)));
        assert!(independence_graph(&Graph::empty(21), &bb).is_err());
    }

    #[test]
    fn independence_graph_bounds() {
        let bb = b();
        let c7 = make_cycle(7).unwrap();
        let sets: Vec<VertexSet> = (0..7).map(|i| VertexSet::from_vertices(7, [i, (i + 2) % 7])).collect();
        let hh = independence_subgraph(&c7, &sets).unwrap();
        assert!(symmetry::are_isomorphic(&hh, &make_cayley_cyclic(7, 3).unwrap(), &bb));
        let c9 = make_cycle(9).unwrap();
        let sets: Vec<VertexSet> = (0..9).map(|i| VertexSet::from_vertices(9, [i, (i + 2) % 9])).collect();
        assert!(symmetry::are_isomorphic(&independence_subgraph(&c9, &sets).unwrap(), &make_cayley_cyclic(9, 3).unwrap(), &bb));
        assert_eq!(independence_graph_bound(&c9, &sets, &bb).unwrap(), rat(1, 2));
        let c3 = make_cycle(3).unwrap();
        let singles: Vec<VertexSet> = (0..3).map(|i| VertexSet::from_vertices(3, [i])).collect();
        assert_eq!(independence_graph_bound(&c3, &singles, &bb).unwrap(), rat(1, 1));
        let c5 = make_cycle(5).unwrap();
        let best = mis::max_independent_set(&c5, &bb).unwrap().witness;
        assert_eq!(independence_graph_bound(&c5, &[best], &bb).unwrap(), rat(1, 2));
    }
}
