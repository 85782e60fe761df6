//! Exact rational simplex (Bland's rule in both phases) and a cutting-plane
//! driver that re-optimises with dual simplex after each added row.
//!
//! Problems are `max c·x` subject to rows `a·x <= b` and `x >= 0`.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::Rational;

pub type Row = (Vec<Rational>, Rational);

#[derive(Clone, Debug, PartialEq)]
pub struct LinearProgram {
    pub dim: usize,
    pub objective: Vec<Rational>,
    pub rows: Vec<Row>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LpStatus {
    Optimal,
    Unbounded,
    Infeasible,
}

#[derive(Clone, Debug, PartialEq)]
pub struct LpResult {
    pub status: LpStatus,
    pub value: Rational,
    pub primal: Vec<Rational>,
    pub dual: Vec<Rational>,
}

impl LpResult {
    fn non_optimal(status: LpStatus, dim: usize, m: usize) -> LpResult {
        LpResult { status, value: Rational::zero(), primal: vec![Rational::zero(); dim], dual: vec![Rational::zero(); m] }
    }
}

enum Outcome {
    Optimal,
    Unbounded(usize),
}

/// Dense tableau. Columns: structural `0..dim`, one slack per row, then
/// phase-one artificials. The last entry of every row is the right-hand
/// side. `z[j]` is the reduced cost `c_B B^-1 A_j - c_j`; optimal when all
/// allowed `z[j] >= 0`.
struct Tableau {
    dim: usize,
    cols: usize,
    t: Vec<Vec<Rational>>,
    basis: Vec<usize>,
    z: Vec<Rational>,
    allowed: Vec<bool>,
    /// Tableau row holding each original row's slack column index.
    slack_of: Vec<usize>,
}

impl Tableau {
    fn rhs(&self, i: usize) -> &Rational {
        &self.t[i][self.cols]
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let p = self.t[r][c].clone();
        if !p.is_one() {
            for x in self.t[r].iter_mut() {
                if !x.is_zero() {
                    *x /= &p;
                }
            }
        }
        let nz: Vec<usize> = (0..=self.cols).filter(|&j| !self.t[r][j].is_zero()).collect();
        let prow = self.t[r].clone();
        for i in 0..self.t.len() {
            if i == r {
                continue;
            }
            let f = self.t[i][c].clone();
            if f.is_zero() {
                continue;
            }
            let row = &mut self.t[i];
            for &j in &nz {
                row[j] -= &f * &prow[j];
            }
        }
        let f = self.z[c].clone();
        if !f.is_zero() {
            for &j in &nz {
                self.z[j] -= &f * &prow[j];
            }
        }
        self.basis[r] = c;
    }

    fn set_objective(&mut self, c: &[Rational]) {
        let zero = Rational::zero();
        let cost = |j: usize| c.get(j).unwrap_or(&zero).clone();
        let mut z: Vec<Rational> = (0..=self.cols).map(|j| if j < self.cols { -cost(j) } else { Rational::zero() }).collect();
        for (i, &b) in self.basis.iter().enumerate() {
            let cb = cost(b);
            if cb.is_zero() {
                continue;
            }
            for (j, x) in self.t[i].iter().enumerate() {
                if !x.is_zero() {
                    z[j] += &cb * x;
                }
            }
        }
        self.z = z;
    }

    /// Primal simplex with Bland's rule.
    fn primal(&mut self) -> Outcome {
        loop {
            let Some(e) = (0..self.cols).find(|&j| self.allowed[j] && self.z[j].is_negative()) else {
                return Outcome::Optimal;
            };
            let mut leave: Option<(usize, Rational)> = None;
            for i in 0..self.t.len() {
                let a = &self.t[i][e];
                if a.is_positive() {
                    let ratio = self.rhs(i) / a;
                    let better = match &leave {
                        None => true,
                        Some((li, lr)) => ratio < *lr || (ratio == *lr && self.basis[i] < self.basis[*li]),
                    };
                    if better {
                        leave = Some((i, ratio));
                    }
                }
            }
            match leave {
                Some((r, _)) => self.pivot(r, e),
                None => return Outcome::Unbounded(e),
            }
        }
    }

    /// Dual simplex with the smallest-index rule; assumes `z >= 0`.
    /// Returns false when the problem is infeasible.
    fn dual(&mut self) -> bool {
        loop {
            let mut leave: Option<usize> = None;
            for i in 0..self.t.len() {
                if self.rhs(i).is_negative() && leave.is_none_or(|l| self.basis[i] < self.basis[l]) {
                    leave = Some(i);
                }
            }
            let Some(r) = leave else {
                return true;
            };
            let mut enter: Option<(usize, Rational)> = None;
            for j in 0..self.cols {
                let a = &self.t[r][j];
                if self.allowed[j] && a.is_negative() {
                    let ratio = &self.z[j] / -a;
                    if enter.as_ref().is_none_or(|(_, er)| ratio < *er) {
                        enter = Some((j, ratio));
                    }
                }
            }
            match enter {
                Some((c, _)) => self.pivot(r, c),
                None => return false,
            }
        }
    }

    fn primal_solution(&self) -> Vec<Rational> {
        let mut x = vec![Rational::zero(); self.dim];
        for (i, &b) in self.basis.iter().enumerate() {
            if b < self.dim {
                x[b] = self.rhs(i).clone();
            }
        }
        x
    }

    fn result(&self, objective: &[Rational]) -> LpResult {
        let primal = self.primal_solution();
        let value = objective.iter().zip(&primal).map(|(c, x)| c * x).sum();
        let dual = self.slack_of.iter().map(|&s| self.z[s].clone()).collect();
        LpResult { status: LpStatus::Optimal, value, primal, dual }
    }

    /// Adds `a·x <= b` to an optimal tableau and restores optimality.
    fn add_row(&mut self, a: &[Rational], b: &Rational) -> bool {
        let s = self.cols;
        self.cols += 1;
        for row in self.t.iter_mut() {
            let rhs = row.pop().unwrap();
            row.push(Rational::zero());
            row.push(rhs);
        }
        let rhs = self.z.pop().unwrap();
        self.z.push(Rational::zero());
        self.z.push(rhs);
        self.allowed.push(true);
        let mut row = vec![Rational::zero(); self.cols + 1];
        row[..self.dim].clone_from_slice(a);
        row[s] = Rational::one();
        row[self.cols] = b.clone();
        for (i, &bv) in self.basis.iter().enumerate() {
            let f = row[bv].clone();
            if f.is_zero() {
                continue;
            }
            for (j, x) in self.t[i].iter().enumerate() {
                if !x.is_zero() {
                    row[j] -= &f * x;
                }
            }
        }
        self.t.push(row);
        self.basis.push(s);
        self.slack_of.push(s);
        self.dual()
    }

    fn build(lp: &LinearProgram) -> (Tableau, Vec<usize>) {
        let m = lp.rows.len();
        let dim = lp.dim;
        let negs: Vec<usize> = (0..m).filter(|&i| lp.rows[i].1.is_negative()).collect();
        let cols = dim + m + negs.len();
        let mut t = Vec::with_capacity(m);
        let mut basis = Vec::with_capacity(m);
        let mut arts = Vec::new();
        for (i, (a, b)) in lp.rows.iter().enumerate() {
            let mut row = vec![Rational::zero(); cols + 1];
            let sign = if b.is_negative() { -Rational::one() } else { Rational::one() };
            for (j, x) in a.iter().enumerate() {
                row[j] = x * &sign;
            }
            row[dim + i] = sign.clone();
            row[cols] = b * &sign;
            if b.is_negative() {
                let art = dim + m + arts.len();
                row[art] = Rational::one();
                basis.push(art);
                arts.push(art);
            } else {
                basis.push(dim + i);
            }
            t.push(row);
        }
        let tab = Tableau {
            dim,
            cols,
            t,
            basis,
            z: Vec::new(),
            allowed: vec![true; cols],
            slack_of: (0..m).map(|i| dim + i).collect(),
        };
        (tab, arts)
    }
}

enum Solved {
    Optimal(Tableau),
    Unbounded(Tableau, usize),
    Infeasible,
}

fn solve_tableau(lp: &LinearProgram) -> Solved {
    let (mut tab, arts) = Tableau::build(lp);
    if !arts.is_empty() {
        let mut c1 = vec![Rational::zero(); tab.cols];
        for &a in &arts {
            c1[a] = -Rational::one();
        }
        tab.set_objective(&c1);
        tab.primal();
        if tab.z[tab.cols].is_negative() {
            return Solved::Infeasible;
        }
        for &a in &arts {
            tab.allowed[a] = false;
        }
        // drive zero-valued artificials out of the basis
        let mut i = 0;
        while i < tab.t.len() {
            if arts.contains(&tab.basis[i]) {
                match (0..tab.cols).find(|&j| tab.allowed[j] && !tab.t[i][j].is_zero()) {
                    Some(j) => tab.pivot(i, j),
                    None => {
                        // redundant row
                        tab.t.remove(i);
                        tab.basis.remove(i);
                        continue;
                    }
                }
            }
            i += 1;
        }
    }
    tab.set_objective(&lp.objective);
    match tab.primal() {
        Outcome::Optimal => Solved::Optimal(tab),
        Outcome::Unbounded(e) => Solved::Unbounded(tab, e),
    }
}

fn check_shape(lp: &LinearProgram) -> Result<()> {
    if lp.objective.len() != lp.dim || lp.rows.iter().any(|(a, _)| a.len() != lp.dim) {
        return Err(Error::InvalidArgument("row or objective width differs from dim".into()));
    }
    Ok(())
}

pub fn solve_lp(lp: &LinearProgram) -> Result<LpResult> {
    check_shape(lp)?;
    let m = lp.rows.len();
    Ok(match solve_tableau(lp) {
        Solved::Optimal(tab) => tab.result(&lp.objective),
        Solved::Unbounded(..) => LpResult::non_optimal(LpStatus::Unbounded, lp.dim, m),
        Solved::Infeasible => LpResult::non_optimal(LpStatus::Infeasible, lp.dim, m),
    })
}

#[derive(Clone, Debug)]
pub struct CuttingPlaneResult {
    pub lp: LpResult,
    /// Seed rows followed by generated rows; `lp.dual` is indexed the same way.
    pub rows: Vec<Row>,
    pub generated: usize,
}

fn violates(row: &Row, x: &[Rational]) -> bool {
    let lhs: Rational = row.0.iter().zip(x).map(|(a, b)| a * b).sum();
    lhs > row.1
}

/// Solve, separate, add the violated row, repeat. `separate` must return a
/// row violated by the given point, or `None`. While the relaxation is
/// unbounded the oracle is probed along the unbounded ray.
pub fn cutting_plane_maximize<F>(
    dim: usize,
    objective: &[Rational],
    seed_rows: Vec<Row>,
    max_iterations: usize,
    mut separate: F,
) -> Result<CuttingPlaneResult>
where
    F: FnMut(&[Rational]) -> Result<Option<Row>>,
{
    let mut lp = LinearProgram { dim, objective: objective.to_vec(), rows: seed_rows };
    check_shape(&lp)?;
    let mut iterations = 0;
    let seeds = lp.rows.len();
    let mut tab = loop {
        match solve_tableau(&lp) {
            Solved::Infeasible => {
                let res = LpResult::non_optimal(LpStatus::Infeasible, dim, lp.rows.len());
                return Ok(CuttingPlaneResult { lp: res, generated: lp.rows.len() - seeds, rows: lp.rows });
            }
            Solved::Optimal(tab) => break tab,
            Solved::Unbounded(tab, e) => {
                let base = tab.primal_solution();
                let mut ray = vec![Rational::zero(); dim];
                if e < dim {
                    ray[e] = Rational::one();
                }
                for (i, &b) in tab.basis.iter().enumerate() {
                    if b < dim {
                        ray[b] = -tab.t[i][e].clone();
                    }
                }
                let mut found = None;
                let mut scale = Rational::one();
                for _ in 0..64 {
                    let p: Vec<Rational> = base.iter().zip(&ray).map(|(x, d)| x + d * &scale).collect();
                    if let Some(row) = separate(&p)? {
                        if !violates(&row, &p) {
                            return Err(Error::Inconsistency("separation returned a satisfied row".into()));
                        }
                        found = Some(row);
                        break;
                    }
                    scale = scale * Rational::from_integer(2.into());
                }
                match found {
                    Some(row) => {
                        iterations += 1;
                        if iterations > max_iterations {
                            return Err(Error::NonConvergence(max_iterations));
                        }
                        lp.rows.push(row);
                    }
                    None => {
                        let res = LpResult::non_optimal(LpStatus::Unbounded, dim, lp.rows.len());
                        return Ok(CuttingPlaneResult { lp: res, generated: lp.rows.len() - seeds, rows: lp.rows });
                    }
                }
            }
        }
    };
    loop {
        let x = tab.primal_solution();
        let Some(row) = separate(&x)? else {
            let res = tab.result(objective);
            return Ok(CuttingPlaneResult { lp: res, generated: lp.rows.len() - seeds, rows: lp.rows });
        };
        if !violates(&row, &x) {
            return Err(Error::Inconsistency("separation returned a satisfied row".into()));
        }
        iterations += 1;
        if iterations > max_iterations {
            return Err(Error::NonConvergence(max_iterations));
        }
        if row.0.len() != dim {
            return Err(Error::InvalidArgument("separated row has wrong width".into()));
        }
        if !tab.add_row(&row.0, &row.1) {
            lp.rows.push(row);
            let res = LpResult::non_optimal(LpStatus::Infeasible, dim, lp.rows.len());
            return Ok(CuttingPlaneResult { lp: res, generated: lp.rows.len() - seeds, rows: lp.rows });
        }
        lp.rows.push(row);
    }
}

/// Checks feasibility, dual feasibility, complementary slackness and
/// strong duality exactly.
pub fn verify_optimal(lp: &LinearProgram, res: &LpResult) -> bool {
    if res.status != LpStatus::Optimal || res.dual.len() != lp.rows.len() {
        return false;
    }
    let x = &res.primal;
    let y = &res.dual;
    if x.iter().chain(y).any(|v| v.is_negative()) {
        return false;
    }
    for ((a, b), yi) in lp.rows.iter().zip(y) {
        let lhs: Rational = a.iter().zip(x).map(|(p, q)| p * q).sum();
        if lhs > *b || (!yi.is_zero() && lhs != *b) {
            return false;
        }
    }
    for j in 0..lp.dim {
        let col: Rational = lp.rows.iter().zip(y).map(|((a, _), yi)| &a[j] * yi).sum();
        if col < lp.objective[j] || (!x[j].is_zero() && col != lp.objective[j]) {
            return false;
        }
    }
    let primal: Rational = lp.objective.iter().zip(x).map(|(c, v)| c * v).sum();
    let dual: Rational = lp.rows.iter().zip(y).map(|((_, b), yi)| b * yi).sum();
    primal == res.value && dual == res.value
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    fn r(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| rat(x, 1)).collect()
    }

    #[test]
    fn single_bound() {
        let lp = LinearProgram { dim: 1, objective: r(&[1]), rows: vec![(r(&[1]), rat(1, 1))] };
        let res = solve_lp(&lp).unwrap();
        assert_eq!(res.status, LpStatus::Optimal);
        assert_eq!(res.value, rat(1, 1));
        assert!(verify_optimal(&lp, &res));
    }

    #[test]
    fn dual_weight() {
        let lp = LinearProgram { dim: 2, objective: r(&[1, 1]), rows: vec![(r(&[1, 1]), rat(1, 1))] };
        let res = solve_lp(&lp).unwrap();
        assert_eq!(res.value, rat(1, 1));
        assert_eq!(res.dual, vec![rat(1, 1)]);
        assert!(verify_optimal(&lp, &res));
    }

    #[test]
    fn unbounded_and_infeasible() {
        let lp = LinearProgram { dim: 1, objective: r(&[1]), rows: vec![] };
        assert_eq!(solve_lp(&lp).unwrap().status, LpStatus::Unbounded);
        // x <= -1 with x >= 0
        let lp = LinearProgram { dim: 1, objective: r(&[1]), rows: vec![(r(&[1]), rat(-1, 1))] };
        assert_eq!(solve_lp(&lp).unwrap().status, LpStatus::Infeasible);
    }

    #[test]
    fn negative_rhs_phase_one() {
        // max -x - y s.t. -x - y <= -2 (x + y >= 2), x <= 3
        let lp = LinearProgram {
            dim: 2,
            objective: r(&[-1, -1]),
            rows: vec![(r(&[-1, -1]), rat(-2, 1)), (r(&[1, 0]), rat(3, 1))],
        };
        let res = solve_lp(&lp).unwrap();
        assert_eq!(res.value, rat(-2, 1));
        assert!(verify_optimal(&lp, &res));
    }

    #[test]
    fn degenerate_classic() {
        // Beale's cycling example (as a max problem); Bland's rule terminates
        let lp = LinearProgram {
            dim: 4,
            objective: vec![rat(3, 4), rat(-150, 1), rat(1, 50), rat(-6, 1)],
            rows: vec![
                (vec![rat(1, 4), rat(-60, 1), rat(-1, 25), rat(9, 1)], rat(0, 1)),
                (vec![rat(1, 2), rat(-90, 1), rat(-1, 50), rat(3, 1)], rat(0, 1)),
                (vec![rat(0, 1), rat(0, 1), rat(1, 1), rat(0, 1)], rat(1, 1)),
            ],
        };
        let res = solve_lp(&lp).unwrap();
        assert_eq!(res.value, rat(1, 20));
        assert!(verify_optimal(&lp, &res));
    }

    #[test]
    fn cutting_plane_no_separation() {
        let seeds = vec![(r(&[1, 2]), rat(4, 1)), (r(&[3, 1]), rat(6, 1))];
        let cp = cutting_plane_maximize(2, &r(&[1, 1]), seeds.clone(), 10, |_| Ok(None)).unwrap();
        let direct = solve_lp(&LinearProgram { dim: 2, objective: r(&[1, 1]), rows: seeds }).unwrap();
        assert_eq!(cp.lp, direct);
        assert_eq!(cp.generated, 0);
    }

    #[test]
    fn cutting_plane_from_unbounded() {
        let cp = cutting_plane_maximize(1, &r(&[1]), vec![], 10, |x| {
            Ok((x[0] > rat(1, 2)).then(|| (r(&[1]), rat(1, 2))))
        })
        .unwrap();
        assert_eq!(cp.lp.value, rat(1, 2));
        assert_eq!(cp.generated, 1);
    }

    #[test]
    fn cutting_plane_matches_full_lp() {
        // all rows x_i + x_{i+1} <= 1 on a 5-cycle, handed out one at a time
        let rows: Vec<Row> = (0..5)
            .map(|i| {
                let mut a = vec![rat(0, 1); 5];
                a[i] = rat(1, 1);
                a[(i + 1) % 5] = rat(1, 1);
                (a, rat(1, 1))
            })
            .collect();
        let seeds: Vec<Row> = (0..5)
            .map(|i| {
                let mut a = vec![rat(0, 1); 5];
                a[i] = rat(1, 1);
                (a, rat(1, 1))
            })
            .collect();
        let cp = cutting_plane_maximize(5, &r(&[1, 1, 1, 1, 1]), seeds.clone(), 100, |x| {
            Ok(rows.iter().find(|row| violates(row, x)).cloned())
        })
        .unwrap();
        assert_eq!(cp.lp.value, rat(5, 2));
        let lp = LinearProgram { dim: 5, objective: r(&[1, 1, 1, 1, 1]), rows: cp.rows.clone() };
        assert!(verify_optimal(&lp, &cp.lp));
    }

    #[test]
    fn cutting_plane_iteration_cap() {
        let mut k = 1i64;
        let err = cutting_plane_maximize(1, &r(&[1]), vec![(r(&[1]), rat(1, 1))], 3, |_| {
            k += 1;
            Ok(Some((r(&[1]), rat(1, k))))
        })
        .unwrap_err();
        assert_eq!(err, Error::NonConvergence(3));
    }
}
