//! Automorphism and isomorphism search by individualisation and equitable
//! partition refinement, vertex-transitivity, and orbit-aware branching for
//! independent sets in symmetric graphs.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::bitset::{self, words_for, VertexSet};
use crate::budget::{Budget, Ticker};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::mis::{self, MisResult};

type Cells = Vec<Vec<usize>>;

/// Refines `cells` to an equitable partition. Every decision depends only on
/// label-invariant data, so two graphs related by an isomorphism that maps
/// cell to cell produce identical traces.
fn refine(g: &Graph, cells: &mut Cells, mut queue: VecDeque<usize>, trace: &mut Vec<u64>) {
    let w = words_for(g.n());
    let mut queued = vec![false; cells.len()];
    for &q in &queue {
        queued[q] = true;
    }
    let mut sb = vec![0u64; w];
    let mut counts: Vec<(usize, usize)> = Vec::new();
    while let Some(s) = queue.pop_front() {
        queued[s] = false;
        sb.iter_mut().for_each(|x| *x = 0);
        for &v in &cells[s] {
            bitset::set_bit(&mut sb, v);
        }
        trace.push(u64::MAX);
        trace.push(s as u64);
        let ncells = cells.len();
        for c in 0..ncells {
            if cells[c].len() == 1 {
                continue;
            }
            counts.clear();
            counts.extend(cells[c].iter().map(|&v| (bitset::and_count(g.row(v), &sb), v)));
            let first = counts[0].0;
            if counts.iter().all(|&(k, _)| k == first) {
                trace.push((c as u64) << 32 | first as u64);
                continue;
            }
            counts.sort_by_key(|&(k, _)| k);
            let mut groups: Vec<Vec<usize>> = Vec::new();
            let mut last = usize::MAX;
            for &(k, v) in counts.iter() {
                if k != last {
                    groups.push(Vec::new());
                    trace.push((c as u64) << 32 | k as u64);
                    last = k;
                }
                groups.last_mut().unwrap().push(v);
            }
            let mut it = groups.into_iter();
            cells[c] = it.next().unwrap();
            trace.push(cells[c].len() as u64);
            if !queued[c] {
                queued[c] = true;
                queue.push_back(c);
            }
            for gr in it {
                trace.push(gr.len() as u64);
                cells.push(gr);
                queued.push(true);
                queue.push_back(cells.len() - 1);
            }
        }
    }
}

fn unit_partition(g: &Graph) -> (Cells, Vec<u64>) {
    let mut cells = vec![(0..g.n()).collect::<Vec<_>>()];
    let mut trace = Vec::new();
    if g.n() > 0 {
        refine(g, &mut cells, VecDeque::from(vec![0]), &mut trace);
    }
    (cells, trace)
}

fn individualize(g: &Graph, cells: &Cells, t: usize, v: usize) -> (Cells, Vec<u64>) {
    let mut c = cells.clone();
    let rest: Vec<usize> = c[t].iter().copied().filter(|&x| x != v).collect();
    c[t] = vec![v];
    let mut queue = VecDeque::from(vec![t]);
    if !rest.is_empty() {
        c.push(rest);
        queue.push_back(c.len() - 1);
    }
    let mut trace = Vec::new();
    refine(g, &mut c, queue, &mut trace);
    (c, trace)
}

fn target_cell(cells: &Cells) -> Option<usize> {
    cells
        .iter()
        .enumerate()
        .filter(|(_, c)| c.len() > 1)
        .min_by_key(|(i, c)| (c.len(), *i))
        .map(|(i, _)| i)
}

struct IsoSearch<'a, 'b> {
    g1: &'a Graph,
    g2: &'a Graph,
    ticker: Ticker<'b>,
    limit: u64,
    exhausted: bool,
}

impl IsoSearch<'_, '_> {
    /// Finds a bijection mapping `c1[i]` onto `c2[i]` that is an isomorphism.
    fn search(&mut self, c1: &Cells, c2: &Cells) -> Option<Vec<usize>> {
        // one node refines a partition of the whole graph, so poll every time
        if self.ticker.tick() || self.ticker.count() > self.limit || self.ticker.expired_now() {
            self.exhausted = true;
        }
        if self.exhausted {
            return None;
        }
        let Some(t) = target_cell(c1) else {
            let mut map = vec![0; self.g1.n()];
            for (a, b) in c1.iter().zip(c2) {
                map[a[0]] = b[0];
            }
            return self.is_iso(&map).then_some(map);
        };
        let v = c1[t][0];
        let (d1, tr1) = individualize(self.g1, c1, t, v);
        for &w in &c2[t] {
            let (d2, tr2) = individualize(self.g2, c2, t, w);
            if tr1 != tr2 || !same_shape(&d1, &d2) {
                continue;
            }
            if let Some(m) = self.search(&d1, &d2) {
                return Some(m);
            }
            if self.exhausted {
                return None;
            }
        }
        None
    }

    fn is_iso(&self, map: &[usize]) -> bool {
        (0..self.g1.n()).all(|u| {
            self.g1.degree(u) == self.g2.degree(map[u]) && self.g1.neighbors(u).all(|v| self.g2.has_edge(map[u], map[v]))
        })
    }
}

fn same_shape(a: &Cells, b: &Cells) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| x.len() == y.len())
}

/// An isomorphism from `g1` to `g2` as a vertex map, if one exists.
pub fn find_isomorphism(g1: &Graph, g2: &Graph, budget: &Budget) -> Option<Vec<usize>> {
    if g1.n() != g2.n() || g1.edge_count() != g2.edge_count() {
        return None;
    }
    let (c1, t1) = unit_partition(g1);
    let (c2, t2) = unit_partition(g2);
    if t1 != t2 || !same_shape(&c1, &c2) {
        return None;
    }
    let mut s = IsoSearch { g1, g2, ticker: budget.ticker(), limit: u64::MAX, exhausted: false };
    s.search(&c1, &c2)
}

pub fn are_isomorphic(g1: &Graph, g2: &Graph, budget: &Budget) -> bool {
    find_isomorphism(g1, g2, budget).is_some()
}

/// An automorphism of `g` mapping `u` to `w`, searched from `base` (an
/// equitable partition of `g`). `None` also when the node limit is hit.
fn automorphism_from(g: &Graph, base: &Cells, u: usize, w: usize, budget: &Budget, limit: u64) -> (Option<Vec<usize>>, bool) {
    let Some(t) = base.iter().position(|c| c.contains(&u)) else {
        return (None, false);
    };
    if !base[t].contains(&w) {
        return (None, false);
    }
    let (d1, tr1) = individualize(g, base, t, u);
    let (d2, tr2) = individualize(g, base, t, w);
    if tr1 != tr2 || !same_shape(&d1, &d2) {
        return (None, false);
    }
    let mut s = IsoSearch { g1: g, g2: g, ticker: budget.ticker(), limit, exhausted: false };
    let r = s.search(&d1, &d2);
    (r, s.exhausted)
}

pub fn find_automorphism(g: &Graph, u: usize, w: usize, budget: &Budget) -> Option<Vec<usize>> {
    let (base, _) = unit_partition(g);
    automorphism_from(g, &base, u, w, budget, u64::MAX).0
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let next = self.0[y];
            self.0[y] = r;
            y = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.0[hi] = lo;
        }
    }
}

/// Orbit label (least vertex of the orbit) for every vertex. With a finite
/// `limit` some searches may give up, and the result is then a refinement
/// of the true orbit partition: vertices sharing a label are always in the
/// same orbit. The search also stops early once the deadline passes.
pub fn orbits(g: &Graph, budget: &Budget, limit: u64) -> Vec<usize> {
    let n = g.n();
    let mut uf = UnionFind((0..n).collect());
    let (base, _) = unit_partition(g);
    'cells: for cell in &base {
        let mut reps: Vec<usize> = Vec::new();
        for &x in cell {
            if budget.expired() {
                break 'cells;
            }
            let mut matched = false;
            for &r in &reps {
                if uf.find(r) == uf.find(x) {
                    matched = true;
                    break;
                }
            }
            if !matched {
                for &r in &reps {
                    if budget.expired() {
                        break 'cells;
                    }
                    if let (Some(sigma), _) = automorphism_from(g, &base, r, x, budget, limit) {
                        for (y, &z) in sigma.iter().enumerate() {
                            uf.union(y, z);
                        }
                        matched = true;
                        break;
                    }
                }
            }
            if !matched {
                reps.push(x);
            }
        }
    }
    (0..n).map(|v| uf.find(v)).collect()
}

pub fn is_vertex_transitive(g: &Graph) -> bool {
    is_vertex_transitive_with(g, &Budget::default())
}

/// Uses the constructor cache when present, otherwise searches for an
/// automorphism from vertex 0 to every other orbit.
pub fn is_vertex_transitive_with(g: &Graph, budget: &Budget) -> bool {
    if let Some(vt) = g.vt_known() {
        return vt;
    }
    let n = g.n();
    if n <= 1 {
        return true;
    }
    let d = g.degree(0);
    if (1..n).any(|v| g.degree(v) != d) {
        return false;
    }
    let (base, _) = unit_partition(g);
    if base.len() != 1 {
        return false;
    }
    let mut uf = UnionFind((0..n).collect());
    for x in 1..n {
        if uf.find(x) == uf.find(0) {
            continue;
        }
        match automorphism_from(g, &base, 0, x, budget, u64::MAX).0 {
            Some(sigma) => {
                for (y, &z) in sigma.iter().enumerate() {
                    uf.union(y, z);
                }
            }
            None => return false,
        }
    }
    true
}

/// Above this order the orbit branching recomputes symmetry of the residual
/// graph; below it plain branch and bound takes over.
const ORBITAL_MIN: usize = 48;
const ORBIT_SEARCH_LIMIT: u64 = 20_000;

/// α of a vertex-transitive graph: one vertex may be fixed, then the
/// residual graph is split by orbits of its own automorphism group.
pub(crate) fn mis_vertex_transitive(g: &Graph, budget: &Budget) -> Result<MisResult> {
    let rest: Vec<usize> = (1..g.n()).filter(|&v| !g.has_edge(0, v)).collect();
    let sub = g.induced(&rest);
    let (val, set, nodes) = orbital(&sub, 0, budget)?.unwrap_or((0, Vec::new(), 0));
    let mut witness = VertexSet::new(g.n());
    witness.insert(0);
    for v in set {
        witness.insert(rest[v]);
    }
    Ok(MisResult { value: val + 1, witness, nodes })
}

/// Returns an independent set larger than `lower`, or `None` if α ≤ lower.
fn orbital(g: &Graph, lower: usize, budget: &Budget) -> Result<Option<(usize, Vec<usize>, u64)>> {
    let n = g.n();
    if n <= lower {
        return Ok(None);
    }
    if budget.expired() {
        return Err(Error::Timeout { lower_bound: None });
    }
    let orb = if n >= ORBITAL_MIN { orbits(g, budget, ORBIT_SEARCH_LIMIT) } else { (0..n).collect() };
    if budget.expired() {
        return Err(Error::Timeout { lower_bound: None });
    }
    let mut size = vec![0usize; n];
    for &o in &orb {
        size[o] += 1;
    }
    let best_orbit = (0..n).filter(|&o| size[o] > 1).max_by_key(|&o| (size[o], usize::MAX - o));
    let Some(r) = best_orbit else {
        let lw = (lower, VertexSet::new(n));
        let res = mis::mis_plain(g, Some(lw), usize::MAX, budget)?;
        if res.value > lower {
            return Ok(Some((res.value, res.witness.to_vec(), res.nodes)));
        }
        return Ok(None);
    };
    let mut best: Option<(usize, Vec<usize>, u64)> = None;
    let mut nodes = 0;
    let mut bound = lower;
    // include the orbit representative
    let keep: Vec<usize> = (0..n).filter(|&v| v != r && !g.has_edge(r, v)).collect();
    let sub = g.induced(&keep);
    if let Some((val, set, nd)) = orbital(&sub, bound.saturating_sub(1), budget)? {
        nodes += nd;
        if val + 1 > bound {
            bound = val + 1;
            let mut s: Vec<usize> = set.into_iter().map(|i| keep[i]).collect();
            s.push(r);
            s.sort_unstable();
            best = Some((bound, s, 0));
        }
    }
    // exclude the whole orbit
    let keep: Vec<usize> = (0..n).filter(|&v| orb[v] != r).collect();
    let sub = g.induced(&keep);
    if let Some((val, set, nd)) = orbital(&sub, bound, budget)? {
        nodes += nd;
        bound = val;
        best = Some((bound, set.into_iter().map(|i| keep[i]).collect(), 0));
    }
    Ok(best.map(|(v, s, _)| (v, s, nodes)))
}
