//! Generalized independence number α_k: choose vertices with repetition so
//! that every clique is hit at most k times.
//!
//! Constraints range over maximal cliques only; every clique lies in one.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::budget::{Budget, Ticker};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::lp::{self, LinearProgram, LpStatus};
use crate::mis;
use crate::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenIndResult {
    pub k: usize,
    pub value: usize,
    pub multiplicities: Vec<usize>,
}

impl GenIndResult {
    pub fn is_feasible(&self, g: &Graph, budget: &Budget) -> Result<bool> {
        if self.multiplicities.len() != g.n() || self.multiplicities.iter().sum::<usize>() != self.value {
            return Ok(false);
        }
        let cliques = mis::enumerate_maximal_cliques(g, budget)?;
        Ok(cliques.iter().all(|c| c.iter().map(|v| self.multiplicities[v]).sum::<usize>() <= self.k))
    }
}

struct Search<'a> {
    order: Vec<usize>,
    /// Cliques containing each vertex.
    member: Vec<Vec<usize>>,
    cliques: Vec<Vec<usize>>,
    cap: Vec<usize>,
    x: Vec<usize>,
    best: usize,
    best_x: Vec<usize>,
    stop_at: usize,
    ticker: Ticker<'a>,
    limit: u64,
    capped: bool,
}

impl Search<'_> {
    fn room(&self, v: usize) -> usize {
        self.member[v].iter().map(|&c| self.cap[c]).min().unwrap_or(0)
    }

    /// ⌊LP relaxation⌋ over the unassigned vertices with residual capacities.
    fn lp_bound(&self, depth: usize) -> Result<usize> {
        let rest = &self.order[depth..];
        let mut pos = vec![usize::MAX; self.x.len()];
        for (i, &v) in rest.iter().enumerate() {
            pos[v] = i;
        }
        let mut rows = Vec::new();
        for (ci, c) in self.cliques.iter().enumerate() {
            let mut a = vec![Rational::zero(); rest.len()];
            let mut any = false;
            for &v in c {
                if pos[v] != usize::MAX {
                    a[pos[v]] = Rational::one();
                    any = true;
                }
            }
            if any {
                rows.push((a, Rational::from_integer(self.cap[ci].into())));
            }
        }
        let prog = LinearProgram { dim: rest.len(), objective: vec![Rational::one(); rest.len()], rows };
        let res = lp::solve_lp(&prog)?;
        if res.status != LpStatus::Optimal {
            return Err(Error::Inconsistency("α_k relaxation not optimal".into()));
        }
        Ok(res.value.floor().to_integer().to_usize().unwrap_or(usize::MAX))
    }

    fn run(&mut self, depth: usize, cur: usize) -> Result<()> {
        if self.ticker.tick() || self.ticker.count() > self.limit {
            self.capped = true;
        }
        if self.capped || self.best >= self.stop_at {
            return Ok(());
        }
        if depth == self.order.len() {
            if cur > self.best {
                self.best = cur;
                self.best_x = self.x.clone();
            }
            return Ok(());
        }
        let cheap: usize = self.order[depth..].iter().map(|&v| self.room(v)).sum();
        if cur + cheap <= self.best {
            return Ok(());
        }
        if cur + self.lp_bound(depth)? <= self.best {
            return Ok(());
        }
        let v = self.order[depth];
        for t in (0..=self.room(v)).rev() {
            for &c in &self.member[v] {
                self.cap[c] -= t;
            }
            self.x[v] = t;
            let r = self.run(depth + 1, cur + t);
            for &c in &self.member[v] {
                self.cap[c] += t;
            }
            self.x[v] = 0;
            r?;
            if self.capped || self.best >= self.stop_at {
                break;
            }
        }
        Ok(())
    }
}

fn solve(g: &Graph, k: usize, target: Option<usize>, budget: &Budget) -> Result<GenIndResult> {
    if k == 0 {
        return Err(Error::InvalidParameter("k must be at least 1".into()));
    }
    if g.n() > budget.enum_cap {
        return Err(Error::SizeLimit { what: "graph order for α_k", actual: g.n(), limit: budget.enum_cap });
    }
    let n = g.n();
    if n == 0 {
        return Ok(GenIndResult { k, value: 0, multiplicities: vec![] });
    }
    let cliques: Vec<Vec<usize>> = mis::enumerate_maximal_cliques(g, budget)?.iter().map(|c| c.to_vec()).collect();
    let mut member = vec![Vec::new(); n];
    for (ci, c) in cliques.iter().enumerate() {
        for &v in c {
            member[v].push(ci);
        }
    }
    // Seed: k copies of a maximum independent set.
    let mis = mis::max_independent_set(g, budget)?;
    let mut seed = vec![0; n];
    for v in mis.witness.iter() {
        seed[v] = k;
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (usize::MAX - g.degree(v), v));
    let mut s = Search {
        order,
        member,
        cliques,
        cap: Vec::new(),
        x: vec![0; n],
        best: k * mis.value,
        best_x: seed,
        stop_at: target.unwrap_or(usize::MAX),
        ticker: budget.ticker(),
        limit: budget.search_nodes,
        capped: false,
    };
    s.cap = vec![k; s.cliques.len()];
    s.run(0, 0)?;
    if s.capped {
        return Err(match budget.expired() {
            true => Error::Timeout { lower_bound: Some(Rational::from_integer(s.best.into())) },
            false => Error::SearchCap { what: "α_k search", nodes: s.ticker.count() },
        });
    }
    Ok(GenIndResult { k, value: s.best, multiplicities: s.best_x })
}

/// α_k(g), exact, by branch and bound over multiplicities.
pub fn generalized_independence(g: &Graph, k: usize, budget: &Budget) -> Result<GenIndResult> {
    solve(g, k, None, budget)
}

/// Whether α_k(g) ≥ target; stops at the first assignment reaching it.
pub fn generalized_independence_at_least(g: &Graph, k: usize, target: usize, budget: &Budget) -> Result<bool> {
    Ok(solve(g, k, Some(target), budget)?.value >= target)
}

/// α*(g) together with N = lcm of the denominators of an optimal vertex
/// of the clique LP. Scaling that vertex by N is feasible for α_N, so
/// α_N(g) = N·α*(g).
pub fn fractional_multiplier(g: &Graph, budget: &Budget) -> Result<(Rational, usize)> {
    if g.n() == 0 {
        return Ok((Rational::zero(), 1));
    }
    let rows = mis::enumerate_maximal_cliques(g, budget)?
        .iter()
        .map(|c| ((0..g.n()).map(|v| if c.contains(v) { Rational::one() } else { Rational::zero() }).collect(), Rational::one()))
        .collect();
    let res = lp::solve_lp(&LinearProgram { dim: g.n(), objective: vec![Rational::one(); g.n()], rows })?;
    if res.status != LpStatus::Optimal {
        return Err(Error::Inconsistency("clique LP not optimal".into()));
    }
    let n = denominator_lcm(&res.primal);
    let n = n.to_usize().ok_or_else(|| Error::InvalidArgument(format!("denominator lcm {n} too large")))?;
    Ok((res.value, n))
}

/// lcm of the denominators of a list of rationals.
pub fn denominator_lcm(values: &[Rational]) -> num_bigint::BigInt {
    values.iter().fold(num_bigint::BigInt::one(), |acc, v| acc.lcm(v.denom()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::*;
    use crate::relfrac::fractional_independence;

    /// Exhaustive over multiplicity vectors in 0..=k.
    fn brute(g: &Graph, k: usize) -> usize {
        let cliques = crate::mis::maximal_cliques_uncapped(g);
        let n = g.n();
        let mut x = vec![0usize; n];
        let mut best = 0;
        loop {
            if cliques.iter().all(|c| c.iter().map(|v| x[v]).sum::<usize>() <= k) {
                best = best.max(x.iter().sum());
            }
            let mut i = 0;
            while i < n && x[i] == k {
                x[i] = 0;
                i += 1;
            }
            if i == n {
                return best;
            }
            x[i] += 1;
        }
    }

    #[test]
    fn cycles() {
        let b = Budget::default();
        let c5 = make_cycle(5).unwrap();
        let c7 = make_cycle(7).unwrap();
        assert_eq!(generalized_independence(&c5, 1, &b).unwrap().value, 2);
        let r = generalized_independence(&c5, 2, &b).unwrap();
        assert_eq!(r.value, 5);
        assert!(r.is_feasible(&c5, &b).unwrap());
        assert_eq!(generalized_independence(&c7, 2, &b).unwrap().value, 7);
        assert_eq!(brute(&c7, 2), 7);
        assert_eq!(brute(&c5, 3), generalized_independence(&c5, 3, &b).unwrap().value);
    }

    #[test]
    fn n_times_fractional() {
        let b = Budget::default();
        for g in [make_cycle(5).unwrap(), make_cycle(7).unwrap(), make_petersen()] {
            let (a, n) = fractional_multiplier(&g, &b).unwrap();
            assert_eq!(a, fractional_independence(&g, &b).unwrap());
            let v = generalized_independence(&g, n, &b).unwrap().value;
            assert_eq!(Rational::from_integer(v.into()), a * Rational::from_integer(n.into()));
        }
    }

    #[test]
    fn target_and_errors() {
        let b = Budget::default();
        let c7 = make_cycle(7).unwrap();
        assert!(generalized_independence_at_least(&c7, 2, 7, &b).unwrap());
        assert!(!generalized_independence_at_least(&c7, 2, 8, &b).unwrap());
        assert!(generalized_independence(&c7, 0, &b).is_err());
        assert_eq!(generalized_independence(&Graph::empty(0), 3, &b).unwrap().value, 0);
        assert_eq!(denominator_lcm(&[crate::rat(5, 2), crate::rat(1, 3)]), 6.into());
    }
}
