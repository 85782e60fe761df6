//! Graph homomorphisms: backtracking search and the explicit map between
//! circulants.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::bitset::{self, Ones, VertexSet};
use crate::budget::{Budget, Ticker};
use crate::error::{Error, Result};
use crate::graph::{make_cayley_cyclic, Graph};

/// Edges of the source map to edges of the target.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Homomorphism {
    pub map: Vec<usize>,
}

pub fn is_homomorphism(h: &Graph, g: &Graph, map: &[usize]) -> bool {
    map.len() == h.n() && map.iter().all(|&x| x < g.n()) && h.edges().iter().all(|&(u, v)| g.has_edge(map[u], map[v]))
}

struct HomSearch<'a, 'b> {
    h: &'a Graph,
    g: &'a Graph,
    order: Vec<usize>,
    map: Vec<usize>,
    ticker: Ticker<'b>,
    limit: u64,
    capped: bool,
}

impl HomSearch<'_, '_> {
    fn search(&mut self, depth: usize, domains: &[Vec<u64>]) -> bool {
        if self.ticker.tick() || self.ticker.count() > self.limit {
            self.capped = true;
        }
        if self.capped {
            return false;
        }
        if depth == self.order.len() {
            return true;
        }
        let x = self.order[depth];
        for a in Ones::new(&domains[x]) {
            let mut next = domains.to_vec();
            next[x] = VertexSet::from_vertices(self.g.n(), [a]).words().to_vec();
            let mut ok = true;
            for y in self.h.neighbors(x) {
                if self.map[y] != usize::MAX {
                    continue;
                }
                for (d, r) in next[y].iter_mut().zip(self.g.row(a)) {
                    *d &= r;
                }
                if bitset::is_zero(&next[y]) {
                    ok = false;
                    break;
                }
            }
            if !ok {
                continue;
            }
            self.map[x] = a;
            if self.search(depth + 1, &next) {
                return true;
            }
            self.map[x] = usize::MAX;
            if self.capped {
                return false;
            }
        }
        false
    }
}

/// Backtracking with forward checking. Variables in descending source
/// degree (ties by id), values ascending. `Ok(None)` is exhaustive; a hit
/// node cap or deadline is `Error::Undecided`.
pub fn find_homomorphism(h: &Graph, g: &Graph, budget: &Budget) -> Result<Option<Homomorphism>> {
    if h.n() == 0 {
        return Ok(Some(Homomorphism { map: vec![] }));
    }
    if g.n() == 0 {
        return Ok(None);
    }
    let mut order: Vec<usize> = (0..h.n()).collect();
    order.sort_by_key(|&v| (usize::MAX - h.degree(v), v));
    let full = VertexSet::full(g.n()).words().to_vec();
    let domains = vec![full; h.n()];
    let mut s = HomSearch {
        h,
        g,
        order,
        map: vec![usize::MAX; h.n()],
        ticker: budget.ticker(),
        limit: budget.search_nodes,
        capped: false,
    };
    let found = s.search(0, &domains);
    if s.capped {
        return Err(Error::Undecided(format!("homomorphism search stopped after {} nodes", s.ticker.count())));
    }
    if !found {
        return Ok(None);
    }
    debug_assert!(is_homomorphism(h, g, &s.map));
    Ok(Some(Homomorphism { map: s.map }))
}

/// The map Cay(Z_m,±1..±k) → Cay(Z_n,±1..±k) for m = ℓn + s(k+1): the
/// first ℓ blocks of n vertices wrap around Z_n, the remaining s blocks of
/// k+1 vertices go to 0..k.
pub fn cayley_homomorphism(n: usize, m: usize, k: usize, ell: usize, s: usize) -> Result<Homomorphism> {
    if k < 1 || 2 * k >= n || n >= m || ell * n + s * (k + 1) != m {
        return Err(Error::InvalidParameter(format!("need m = ℓn + s(k+1) and 1 <= 2k < n < m; got n={n} m={m} k={k} ℓ={ell} s={s}")));
    }
    let map: Vec<usize> = (0..m).map(|x| if x < ell * n { x % n } else { (x - ell * n) % (k + 1) }).collect();
    let src = make_cayley_cyclic(m, k)?;
    let dst = make_cayley_cyclic(n, k)?;
    if !is_homomorphism(&src, &dst, &map) {
        return Err(Error::InvalidParameter("constructed map is not a homomorphism".into()));
    }
    Ok(Homomorphism { map })
}
