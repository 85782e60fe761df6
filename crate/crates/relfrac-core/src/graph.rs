//! Simple undirected graphs on dense ids with bitset adjacency.

use alloc::format;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::bitset::{self, words_for, Ones, VertexSet, WORD};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DerivedOp {
    Complement,
    DisjointUnion,
    StrongProduct,
    DisjunctiveProduct,
    Induced,
    Expand,
    Replicated,
}

/// Where a graph came from. Families are re-derivable from their parameters.
#[derive(Clone, Debug)]
pub enum Family {
    Cycle { n: usize },
    CayleyCyclic { n: usize, k: usize },
    Johnson3 { n: usize },
    Complete { n: usize },
    Derived { op: DerivedOp, parents: Vec<Arc<Graph>> },
}

impl Family {
    pub fn describe(&self) -> alloc::string::String {
        match self {
            Family::Cycle { n } => format!("cycle:{n}"),
            Family::CayleyCyclic { n, k } => format!("cayley:{n}:{k}"),
            Family::Johnson3 { n } => format!("johnson3:{n}"),
            Family::Complete { n } => format!("complete:{n}"),
            Family::Derived { op, .. } => format!("derived:{op:?}").to_lowercase(),
        }
    }

    /// The (n, k) pair when the family is a circulant with interval connection set.
    pub fn circulant_params(&self) -> Option<(usize, usize)> {
        match *self {
            Family::Cycle { n } => Some((n, 1)),
            Family::CayleyCyclic { n, k } => Some((n, k)),
            _ => None,
        }
    }
}

#[derive(Clone)]
pub struct Graph {
    n: usize,
    w: usize,
    adj: Vec<u64>,
    family: Option<Family>,
    vt_known: Option<bool>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.adj == other.adj
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges())
            .field("family", &self.family.as_ref().map(Family::describe))
            .finish()
    }
}

impl Graph {
    pub fn empty(n: usize) -> Graph {
        let w = words_for(n);
        Graph { n, w, adj: vec![0; n * w], family: None, vt_known: None }
    }

    /// Builds a graph from an edge list; rejects loops and out-of-range ids.
    /// Repeated edges collapse.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidArgument(format!("edge ({u},{v}) out of range for n={n}")));
            }
            if u == v {
                return Err(Error::InvalidArgument(format!("self-loop at {u}")));
            }
            g.add_edge_raw(u, v);
        }
        Ok(g)
    }

    pub(crate) fn add_edge_raw(&mut self, u: usize, v: usize) {
        debug_assert!(u != v);
        bitset::set_bit(&mut self.adj[u * self.w..(u + 1) * self.w], v);
        bitset::set_bit(&mut self.adj[v * self.w..(v + 1) * self.w], u);
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.adj[v * self.w..(v + 1) * self.w]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        bitset::test_bit(self.row(u), v)
    }

    pub fn neighbors(&self, v: usize) -> Ones<'_> {
        Ones::new(self.row(v))
    }

    pub fn neighborhood(&self, v: usize) -> VertexSet {
        VertexSet::from_words(self.n, self.row(v).to_vec())
    }

    pub fn degree(&self, v: usize) -> usize {
        bitset::popcount(self.row(v))
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in self.neighbors(u) {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn family(&self) -> Option<&Family> {
        self.family.as_ref()
    }

    pub fn vt_known(&self) -> Option<bool> {
        self.vt_known
    }

    pub fn with_family(mut self, family: Family) -> Graph {
        self.family = Some(family);
        self
    }

    pub fn with_vt_known(mut self, vt: bool) -> Graph {
        self.vt_known = Some(vt);
        self
    }

    pub fn strip_family(mut self) -> Graph {
        self.family = None;
        self.vt_known = None;
        self
    }

    pub(crate) fn derived(mut self, op: DerivedOp, parents: &[&Graph]) -> Graph {
        self.family = Some(Family::Derived {
            op,
            parents: parents.iter().map(|g| Arc::new((*g).clone())).collect(),
        });
        self
    }

    pub fn is_independent(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| s.words().iter().zip(self.row(v)).all(|(a, b)| a & b == 0))
    }

    pub fn is_clique(&self, s: &VertexSet) -> bool {
        let vs = s.to_vec();
        vs.iter().enumerate().all(|(i, &u)| vs[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    pub fn induced(&self, vs: &[usize]) -> Graph {
        let mut g = Graph::empty(vs.len());
        for (i, &u) in vs.iter().enumerate() {
            for (j, &v) in vs.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge_raw(i, j);
                }
            }
        }
        g.derived(DerivedOp::Induced, &[self])
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Connected components as ascending vertex lists, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let u = comp[i];
                i += 1;
                for v in self.neighbors(u) {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }
}

pub fn make_cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("cycle needs n >= 3, got {n}")));
    }
    let mut g = Graph::empty(n);
    for i in 0..n {
        g.add_edge_raw(i, (i + 1) % n);
    }
    Ok(g.with_family(Family::Cycle { n }).with_vt_known(true))
}

pub fn make_cayley_cyclic(n: usize, k: usize) -> Result<Graph> {
    if n < 3 || k < 1 || k > n / 2 {
        return Err(Error::InvalidParameter(format!("Cay(Z_{n}, ±1..±{k}) needs n >= 3 and 1 <= k <= n/2")));
    }
    let mut g = Graph::empty(n);
    for i in 0..n {
        for d in 1..=k {
            g.add_edge_raw(i, (i + d) % n);
        }
    }
    Ok(g.with_family(Family::CayleyCyclic { n, k }).with_vt_known(true))
}

/// The 3-subsets of `0..n` in lexicographic order.
pub fn johnson3_subsets(n: usize) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                out.push([a, b, c]);
            }
        }
    }
    out
}

/// J(n,3) with 3-subsets adjacent when they meet in exactly one element.
pub fn make_johnson3(n: usize) -> Result<Graph> {
    if n < 4 {
        return Err(Error::InvalidParameter(format!("J(n,3) needs n >= 4, got {n}")));
    }
    let sets = johnson3_subsets(n);
    let mask: Vec<u64> = sets.iter().map(|s| s.iter().fold(0u64, |m, &x| m | 1 << x)).collect();
    let mut g = Graph::empty(sets.len());
    for i in 0..sets.len() {
        for j in i + 1..sets.len() {
            if (mask[i] & mask[j]).count_ones() == 1 {
                g.add_edge_raw(i, j);
            }
        }
    }
    Ok(g.with_family(Family::Johnson3 { n }).with_vt_known(true))
}

pub fn make_complete(n: usize) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge_raw(u, v);
        }
    }
    g.with_family(Family::Complete { n }).with_vt_known(true)
}

pub fn make_path(n: usize) -> Graph {
    let mut g = Graph::empty(n);
    for i in 1..n {
        g.add_edge_raw(i - 1, i);
    }
    g
}

pub fn make_petersen() -> Graph {
    let mut g = Graph::empty(10);
    for i in 0..5 {
        g.add_edge_raw(i, (i + 1) % 5);
        g.add_edge_raw(i, i + 5);
        g.add_edge_raw(5 + i, 5 + (i + 2) % 5);
    }
    g
}

pub fn complement(g: &Graph) -> Graph {
    let mut c = Graph::empty(g.n);
    let tail = g.n % WORD;
    for v in 0..g.n {
        let src = g.row(v);
        let dst = &mut c.adj[v * c.w..(v + 1) * c.w];
        for (d, s) in dst.iter_mut().zip(src) {
            *d = !s;
        }
        if tail != 0 {
            dst[c.w - 1] &= (1u64 << tail) - 1;
        }
        bitset::clear_bit(dst, v);
    }
    let vt = g.vt_known;
    let mut c = c.derived(DerivedOp::Complement, &[g]);
    c.vt_known = vt;
    c
}

pub fn disjoint_union(g: &Graph, h: &Graph) -> Graph {
    let mut u = Graph::empty(g.n + h.n);
    for (a, b) in g.edges() {
        u.add_edge_raw(a, b);
    }
    for (a, b) in h.edges() {
        u.add_edge_raw(g.n + a, g.n + b);
    }
    u.derived(DerivedOp::DisjointUnion, &[g, h])
}

/// Vertex `(i, j)` gets id `i * h.n() + j`.
pub fn strong_product(g: &Graph, h: &Graph) -> Graph {
    let m = h.n;
    let mut p = Graph::empty(g.n * m);
    for i in 0..g.n {
        for j in 0..m {
            let a = i * m + j;
            for i2 in core::iter::once(i).chain(g.neighbors(i)) {
                for j2 in core::iter::once(j).chain(h.neighbors(j)) {
                    let b = i2 * m + j2;
                    if b > a {
                        p.add_edge_raw(a, b);
                    }
                }
            }
        }
    }
    let vt = match (g.vt_known, h.vt_known) {
        (Some(true), Some(true)) => Some(true),
        _ => None,
    };
    let mut p = p.derived(DerivedOp::StrongProduct, &[g, h]);
    p.vt_known = vt;
    p
}

pub fn strong_power(g: &Graph, d: usize) -> Result<Graph> {
    if d < 1 {
        return Err(Error::InvalidParameter(format!("strong power needs d >= 1, got {d}")));
    }
    let mut p = g.clone();
    for _ in 1..d {
        p = strong_product(&p, g);
    }
    Ok(p)
}

/// `(u,v) ~ (u',v')` iff `uu'` is an edge of `g` or `vv'` is an edge of `h`.
pub fn disjunctive_product(g: &Graph, h: &Graph) -> Graph {
    let m = h.n;
    let mut p = Graph::empty(g.n * m);
    for a in 0..g.n * m {
        let (i, j) = (a / m, a % m);
        for b in a + 1..g.n * m {
            let (i2, j2) = (b / m, b % m);
            if g.has_edge(i, i2) || h.has_edge(j, j2) {
                p.add_edge_raw(a, b);
            }
        }
    }
    p.derived(DerivedOp::DisjunctiveProduct, &[g, h])
}

/// Disjoint and with independent union. Both inputs must be independent.
pub fn are_disconnected(g: &Graph, s: &VertexSet, t: &VertexSet) -> Result<bool> {
    if !g.is_independent(s) || !g.is_independent(t) {
        return Err(Error::InvalidArgument("sets must be independent".into()));
    }
    Ok(s.is_disjoint(t) && g.is_independent(&s.union(t)))
}
