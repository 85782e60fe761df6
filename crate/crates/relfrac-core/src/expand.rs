//! Expand operations: delete a vertex, blow a vertex up into a clique, add
//! an edge. Membership of G in Expand(H) is decided by searching for a
//! homomorphism between complements.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::bitset::VertexSet;
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::genind;
use crate::graph::{complement, DerivedOp, Graph};
use crate::hom::{self, Homomorphism};
use crate::mis;

/// Vertex ids are internal: the input graph uses `0..n`, each clique
/// replacement appends fresh ids after every id issued so far.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExpandOp {
    RemoveVertex { v: usize },
    ReplaceByClique { v: usize, k: usize },
    AddEdge { u: usize, w: usize },
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ExpandScript {
    pub ops: Vec<ExpandOp>,
    /// Removals, then clique replacements, then added edges.
    pub normal_form: bool,
}

impl ExpandScript {
    pub fn is_grouped(&self) -> bool {
        let rank = |op: &ExpandOp| match op {
            ExpandOp::RemoveVertex { .. } => 0,
            ExpandOp::ReplaceByClique { .. } => 1,
            ExpandOp::AddEdge { .. } => 2,
        };
        self.ops.windows(2).all(|w| rank(&w[0]) <= rank(&w[1]))
    }
}

#[derive(Clone, Debug)]
pub struct Expanded {
    pub graph: Graph,
    /// Internal id of each final vertex (ascending).
    pub ids: Vec<usize>,
    /// Original vertex of the input each final vertex descends from.
    pub provenance: Vec<usize>,
}

struct Workspace {
    alive: Vec<bool>,
    origin: Vec<usize>,
    adj: Vec<BTreeSet<usize>>,
}

impl Workspace {
    fn new(h: &Graph) -> Workspace {
        Workspace {
            alive: vec![true; h.n()],
            origin: (0..h.n()).collect(),
            adj: (0..h.n()).map(|v| h.neighbors(v).collect()).collect(),
        }
    }

    fn live(&self, v: usize) -> bool {
        self.alive.get(v).copied().unwrap_or(false)
    }

    fn apply(&mut self, step: usize, op: &ExpandOp) -> Result<()> {
        let err = |reason: alloc::string::String| Error::Script { step, reason };
        match *op {
            ExpandOp::RemoveVertex { v } => {
                if !self.live(v) {
                    return Err(err(format!("vertex {v} does not exist")));
                }
                self.retire(v);
            }
            ExpandOp::ReplaceByClique { v, k } => {
                if !self.live(v) {
                    return Err(err(format!("vertex {v} does not exist")));
                }
                if k == 0 {
                    return Err(err("clique size must be at least 1".into()));
                }
                let nbrs: Vec<usize> = self.adj[v].iter().copied().collect();
                let first = self.alive.len();
                let fresh: Vec<usize> = (first..first + k).collect();
                for &x in &fresh {
                    let mut a: BTreeSet<usize> = nbrs.iter().copied().collect();
                    a.extend(fresh.iter().copied().filter(|&y| y != x));
                    self.adj.push(a);
                    self.alive.push(true);
                    self.origin.push(self.origin[v]);
                }
                for &u in &nbrs {
                    self.adj[u].extend(fresh.iter().copied());
                }
                self.retire(v);
            }
            ExpandOp::AddEdge { u, w } => {
                if !self.live(u) || !self.live(w) {
                    return Err(err(format!("edge ({u}, {w}) references a missing vertex")));
                }
                if u == w {
                    return Err(err(format!("loop at {u}")));
                }
                if self.adj[u].contains(&w) {
                    return Err(err(format!("edge ({u}, {w}) already present")));
                }
                self.adj[u].insert(w);
                self.adj[w].insert(u);
            }
        }
        Ok(())
    }

    fn retire(&mut self, v: usize) {
        let nbrs = core::mem::take(&mut self.adj[v]);
        for u in nbrs {
            self.adj[u].remove(&v);
        }
        self.alive[v] = false;
    }

    fn finish(self, h: &Graph) -> Expanded {
        let ids: Vec<usize> = (0..self.alive.len()).filter(|&v| self.alive[v]).collect();
        let mut pos = vec![usize::MAX; self.alive.len()];
        for (i, &v) in ids.iter().enumerate() {
            pos[v] = i;
        }
        let mut g = Graph::empty(ids.len());
        for (i, &v) in ids.iter().enumerate() {
            for &u in &self.adj[v] {
                if pos[u] > i {
                    g.add_edge_raw(i, pos[u]);
                }
            }
        }
        let provenance = ids.iter().map(|&v| self.origin[v]).collect();
        Expanded { graph: g.derived(DerivedOp::Expand, &[h]), ids, provenance }
    }
}

/// Replays `script` on `h`. Final vertices are the surviving internal ids
/// in ascending order.
pub fn apply_expand(h: &Graph, script: &ExpandScript) -> Result<Expanded> {
    let mut ws = Workspace::new(h);
    for (i, op) in script.ops.iter().enumerate() {
        ws.apply(i, op)?;
    }
    Ok(ws.finish(h))
}

/// A membership certificate: `script` turns H into G, and final vertex `i`
/// of `apply_expand(h, script)` is vertex `labels[i]` of G.
#[derive(Clone, Debug)]
pub struct ExpandCertificate {
    pub script: ExpandScript,
    /// The singleton assignment V(G) → V(H).
    pub assignment: Vec<usize>,
    pub labels: Vec<usize>,
}

/// Necessary condition for G ∈ Expand(H): α_{ω(G)}(H) ≥ |V(G)|.
pub fn expand_feasibility_prefilter(h: &Graph, g: &Graph, budget: &Budget) -> Result<bool> {
    if g.n() == 0 {
        return Ok(true);
    }
    if h.n() == 0 {
        return Ok(false);
    }
    let omega = mis::clique_number(g, budget)?;
    genind::generalized_independence_at_least(h, omega, g.n(), budget)
}

/// Normal-form script from an assignment V(G) → V(H) that is a
/// homomorphism complement(G) → complement(H).
pub fn script_from_assignment(h: &Graph, g: &Graph, f: &[usize]) -> Result<ExpandCertificate> {
    if !hom::is_homomorphism(&complement(g), &complement(h), f) {
        return Err(Error::InvalidArgument("assignment is not a homomorphism between complements".into()));
    }
    let mut fibres = vec![Vec::new(); h.n()];
    for (x, &u) in f.iter().enumerate() {
        fibres[u].push(x);
    }
    let mut ops = Vec::new();
    for (u, fib) in fibres.iter().enumerate() {
        if fib.is_empty() {
            ops.push(ExpandOp::RemoveVertex { v: u });
        }
    }
    // Internal id of each G-vertex.
    let mut id_of = vec![0; g.n()];
    let mut next = h.n();
    for (u, fib) in fibres.iter().enumerate() {
        match fib.len() {
            0 => {}
            1 => id_of[fib[0]] = u,
            k => {
                ops.push(ExpandOp::ReplaceByClique { v: u, k });
                for (i, &x) in fib.iter().enumerate() {
                    id_of[x] = next + i;
                }
                next += k;
            }
        }
    }
    let partial = apply_expand(h, &ExpandScript { ops: ops.clone(), normal_form: true })?;
    let mut pos = vec![usize::MAX; next];
    for (i, &v) in partial.ids.iter().enumerate() {
        pos[v] = i;
    }
    for (x, y) in g.edges() {
        let (a, b) = (id_of[x], id_of[y]);
        if !partial.graph.has_edge(pos[a], pos[b]) {
            ops.push(ExpandOp::AddEdge { u: a.min(b), w: a.max(b) });
        }
    }
    let script = ExpandScript { ops, normal_form: true };
    let out = apply_expand(h, &script)?;
    let mut labels = vec![usize::MAX; out.ids.len()];
    for x in 0..g.n() {
        let i = out.ids.binary_search(&id_of[x]).map_err(|_| Error::Inconsistency("lost vertex".into()))?;
        labels[i] = x;
    }
    if !relabels_to(&out.graph, g, &labels) {
        return Err(Error::Inconsistency("expand script does not reproduce the target".into()));
    }
    Ok(ExpandCertificate { script, assignment: f.to_vec(), labels })
}

/// Whether vertex `i` of `a` ↦ `labels[i]` is an isomorphism onto `b`.
pub fn relabels_to(a: &Graph, b: &Graph, labels: &[usize]) -> bool {
    if a.n() != b.n() || labels.len() != a.n() || a.edge_count() != b.edge_count() {
        return false;
    }
    let mut seen = vec![false; b.n()];
    for &l in labels {
        if l >= b.n() || seen[l] {
            return false;
        }
        seen[l] = true;
    }
    a.edges().iter().all(|&(u, v)| b.has_edge(labels[u], labels[v]))
}

/// Decides G ∈ Expand(H). `Ok(None)` is definitive; an exhausted search
/// budget surfaces as `Error::Undecided`.
pub fn in_expand(h: &Graph, g: &Graph, budget: &Budget) -> Result<Option<ExpandCertificate>> {
    match expand_feasibility_prefilter(h, g, budget) {
        Ok(false) => return Ok(None),
        Ok(true) => {}
        Err(Error::SizeLimit { .. }) => {}
        Err(e) => return Err(e),
    }
    match hom::find_homomorphism(&complement(g), &complement(h), budget)? {
        None => Ok(None),
        Some(Homomorphism { map }) => script_from_assignment(h, g, &map).map(Some),
    }
}

#[derive(Clone, Debug)]
pub struct DerivedExpand {
    pub g_prime: Graph,
    pub h_prime: Graph,
    pub script: ExpandScript,
    /// Vertices of G used by the set, ascending; vertex i of G' is `g_vertices[i]`.
    pub g_vertices: Vec<usize>,
    pub h_vertices: Vec<usize>,
    /// Final vertex i of `apply_expand(h_prime, script)` is vertex `labels[i]` of G'.
    pub labels: Vec<usize>,
}

/// From an independent set of complement(G)⊠H (product id v·|H| + u),
/// builds G' and H' on the used vertices with G' ∈ Expand(H').
pub fn derive_expand_from_independent_set(g: &Graph, h: &Graph, s: &VertexSet) -> Result<DerivedExpand> {
    let nh = h.n();
    if s.universe() != g.n() * nh {
        return Err(Error::InvalidArgument(format!("set universe {} is not |V(G)|·|V(H)| = {}", s.universe(), g.n() * nh)));
    }
    let pairs: Vec<(usize, usize)> = s.iter().map(|p| (p / nh, p % nh)).collect();
    for (i, &(v, u)) in pairs.iter().enumerate() {
        for &(v2, u2) in &pairs[i + 1..] {
            let gc_close = v == v2 || !g.has_edge(v, v2);
            let h_close = u == u2 || h.has_edge(u, u2);
            if gc_close && h_close {
                return Err(Error::InvalidArgument(format!("({v},{u}) and ({v2},{u2}) are adjacent in complement(G)⊠H")));
            }
        }
    }
    let g_vertices: Vec<usize> = pairs.iter().map(|p| p.0).collect::<BTreeSet<_>>().into_iter().collect();
    let h_vertices: Vec<usize> = pairs.iter().map(|p| p.1).collect::<BTreeSet<_>>().into_iter().collect();
    let g_prime = g.induced(&g_vertices);
    let h_prime = h.induced(&h_vertices);
    let gi = |v: usize| g_vertices.binary_search(&v).unwrap();
    let hi = |u: usize| h_vertices.binary_search(&u).unwrap();
    let mut blocks = vec![Vec::new(); h_vertices.len()];
    for &(v, u) in &pairs {
        blocks[hi(u)].push(gi(v));
    }
    let mut ops = Vec::new();
    let mut label_of: Vec<(usize, usize)> = Vec::new();
    let mut next = h_vertices.len();
    for (u, b) in blocks.iter().enumerate() {
        if b.len() == 1 {
            label_of.push((u, b[0]));
        } else {
            ops.push(ExpandOp::ReplaceByClique { v: u, k: b.len() });
            label_of.extend(b.iter().enumerate().map(|(i, &x)| (next + i, x)));
            next += b.len();
        }
    }
    // Merge copies carrying the same label: keep the smallest internal id.
    label_of.sort_unstable();
    let mut kept = vec![usize::MAX; g_vertices.len()];
    let mut removed = false;
    for &(id, x) in &label_of {
        if kept[x] == usize::MAX {
            kept[x] = id;
        } else {
            ops.push(ExpandOp::RemoveVertex { v: id });
            removed = true;
        }
    }
    let partial = apply_expand(&h_prime, &ExpandScript { ops: ops.clone(), normal_form: false })?;
    let pos = |id: usize| partial.ids.binary_search(&id).unwrap();
    for (x, y) in g_prime.edges() {
        let (a, b) = (kept[x], kept[y]);
        if !partial.graph.has_edge(pos(a), pos(b)) {
            ops.push(ExpandOp::AddEdge { u: a.min(b), w: a.max(b) });
        }
    }
    let script = ExpandScript { normal_form: !removed, ops };
    let out = apply_expand(&h_prime, &script)?;
    let labels: Vec<usize> = out.ids.iter().map(|id| label_of.iter().find(|p| p.0 == *id).unwrap().1).collect();
    if !relabels_to(&out.graph, &g_prime, &labels) {
        return Err(Error::Inconsistency("derived script does not reproduce G'".into()));
    }
    Ok(DerivedExpand { g_prime, h_prime, script, g_vertices, h_vertices, labels })
}

/// A minimum clique partition of `g` when its size equals α(g), which
/// holds for perfect graphs.
pub fn clique_partition_perfect(g: &Graph, budget: &Budget) -> Result<Option<Vec<VertexSet>>> {
    let (k, classes) = mis::chromatic_number(&complement(g), budget)?;
    let alpha = mis::independence_number(g, budget)?;
    Ok((k == alpha).then_some(classes))
}
