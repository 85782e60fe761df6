//! Resource limits shared by every search. The core has no clock; callers
//! that want wall-clock timeouts plug in a [`Deadline`].

use alloc::sync::Arc;
use core::cell::Cell;

use crate::error::{Error, Result};

pub trait Deadline: Send + Sync {
    fn expired(&self) -> bool;
}

#[derive(Clone)]
pub struct Budget {
    pub deadline: Option<Arc<dyn Deadline>>,
    /// Largest product graph any operation may build.
    pub max_product_vertices: usize,
    /// Vertex cap for maximal-set and clique enumeration.
    pub enum_cap: usize,
    /// Vertex cap for building the independence graph.
    pub gstar_cap: usize,
    /// Cap on the number of independent sets the independence graph may hold.
    pub gstar_sets_cap: usize,
    /// Node cap for backtracking searches (homomorphisms, assignments).
    pub search_nodes: u64,
    pub lp_iterations: usize,
    pub witness_cap: usize,
    /// Graphs up to this order get a lexicographically least MIS witness.
    pub lex_witness_cap: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            deadline: None,
            max_product_vertices: 5000,
            enum_cap: 40,
            gstar_cap: 20,
            gstar_sets_cap: 1 << 14,
            search_nodes: 50_000_000,
            lp_iterations: 10_000,
            witness_cap: 400,
            lex_witness_cap: 256,
        }
    }
}

impl core::fmt::Debug for Budget {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("Budget")
            .field("deadline", &self.deadline.is_some())
            .field("max_product_vertices", &self.max_product_vertices)
            .field("search_nodes", &self.search_nodes)
            .finish_non_exhaustive()
    }
}

impl Budget {
    pub fn expired(&self) -> bool {
        self.deadline.as_ref().is_some_and(|d| d.expired())
    }

    pub fn check_product(&self, n: usize) -> Result<()> {
        if n > self.max_product_vertices {
            return Err(Error::SizeLimit {
                what: "product graph order",
                actual: n,
                limit: self.max_product_vertices,
            });
        }
        Ok(())
    }

    pub(crate) fn ticker(&self) -> Ticker<'_> {
        Ticker { budget: self, count: Cell::new(0) }
    }
}

/// Cheap periodic deadline polling for inner loops.
pub(crate) struct Ticker<'a> {
    budget: &'a Budget,
    count: Cell<u64>,
}

impl Ticker<'_> {
    #[inline]
    pub fn tick(&self) -> bool {
        let c = self.count.get() + 1;
        self.count.set(c);
        c & 0x3ff == 0 && self.budget.expired()
    }

    pub fn count(&self) -> u64 {
        self.count.get()
    }

    /// Polls the deadline now, for loops whose single steps are expensive.
    pub fn expired_now(&self) -> bool {
        self.budget.expired()
    }
}
