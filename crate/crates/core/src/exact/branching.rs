//! Bounded search trees for CC with few winners and a small bound.

use super::budget::SolverBudget;
use super::cc_witness;
use crate::election::MisrepMatrix;
use crate::error::{Error, Result};
use crate::instance::{Objective, ProblemInstance, Rule};
use crate::solution::Solution;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct BranchStats {
    /// Recursive calls.
    pub nodes: u64,
    /// Calls that returned without recursing.
    pub leaves: u64,
}

/// Every voter has at most `t+1` candidates within `t`, for all `t <= bound`.
pub fn check_sparsity(matrix: &MisrepMatrix, bound: u64) -> Result<()> {
    for v in 0..matrix.n() {
        let mut vals: Vec<u64> = matrix.row(v).iter().copied().filter(|&x| x <= bound).collect();
        vals.sort_unstable();
        for (i, &x) in vals.iter().enumerate() {
            // i+1 candidates have value <= x
            if i as u64 > x {
                return Err(Error::Precondition(format!(
                    "voter {v} has {} candidates within {x}; use subset enumeration",
                    i + 1
                )));
            }
        }
    }
    Ok(())
}

fn check_kind(instance: &ProblemInstance, objective: Objective) -> Result<()> {
    if instance.rule != Rule::Cc || instance.objective != objective {
        return Err(Error::Precondition(format!(
            "branching solver handles cc/{objective}, got {}/{}",
            instance.rule, instance.objective
        )));
    }
    check_sparsity(&instance.matrix, instance.bound)
}

/// CC sum decision at `instance.bound`.
pub fn solve_cc_branch_rk(instance: &ProblemInstance) -> Result<Option<Solution>> {
    Ok(solve_cc_branch_rk_with(instance, &SolverBudget::default())?.0)
}

pub fn solve_cc_branch_rk_with(instance: &ProblemInstance, budget: &SolverBudget) -> Result<(Option<Solution>, BranchStats)> {
    check_kind(instance, Objective::Sum)?;
    let mut t = SumTree {
        r: &instance.matrix,
        k: instance.k,
        budget,
        stats: BranchStats::default(),
    };
    let voters: Vec<usize> = (0..instance.n()).collect();
    let found = t.branch(&voters, instance.bound as i64, &mut Vec::new())?;
    let stats = t.stats;
    match found {
        Some(c) => Ok((Some(cc_witness(instance, &c)?), stats)),
        None => Ok((None, stats)),
    }
}

struct SumTree<'a> {
    r: &'a MisrepMatrix,
    k: usize,
    budget: &'a SolverBudget,
    stats: BranchStats,
}

impl SumTree<'_> {
    fn enter(&mut self) -> Result<()> {
        self.stats.nodes += 1;
        if self.stats.nodes > self.budget.max_branch_nodes {
            return Err(Error::Budget(format!(
                "search tree exceeded {} nodes",
                self.budget.max_branch_nodes
            )));
        }
        if self.stats.nodes.is_multiple_of(4096) {
            self.budget.check_deadline()?;
        }
        Ok(())
    }

    fn branch(&mut self, voters: &[usize], bound: i64, chosen: &mut Vec<usize>) -> Result<Option<Vec<usize>>> {
        self.enter()?;
        if bound < 0 || chosen.len() > self.k {
            self.stats.leaves += 1;
            return Ok(None);
        }
        let covered = !chosen.is_empty() || voters.is_empty();
        if covered {
            let cost: u64 = voters
                .iter()
                .map(|&w| chosen.iter().map(|&d| self.r.get(w, d)).min().unwrap_or(0))
                .sum();
            if cost as i64 <= bound {
                self.stats.leaves += 1;
                return Ok(Some(chosen.clone()));
            }
        }
        let (&v, rest) = voters.split_first().unwrap();
        let mut recursed = false;
        for c in 0..self.r.m() {
            let x = self.r.get(v, c) as i64;
            if x > bound {
                continue;
            }
            let added = !chosen.contains(&c);
            if added {
                chosen.push(c);
            }
            let next: Vec<usize> = rest.iter().copied().filter(|&w| self.r.get(w, c) != 0).collect();
            recursed = true;
            let res = self.branch(&next, bound - x, chosen)?;
            if added {
                chosen.pop();
            }
            if res.is_some() {
                return Ok(res);
            }
        }
        if !recursed {
            self.stats.leaves += 1;
        }
        Ok(None)
    }
}

/// CC minimax decision at `instance.bound`.
pub fn solve_minimax_cc_branch_rk(instance: &ProblemInstance) -> Result<Option<Solution>> {
    Ok(solve_minimax_cc_branch_rk_with(instance, &SolverBudget::default())?.0)
}

pub fn solve_minimax_cc_branch_rk_with(
    instance: &ProblemInstance,
    budget: &SolverBudget,
) -> Result<(Option<Solution>, BranchStats)> {
    check_kind(instance, Objective::Minimax)?;
    let mut stats = BranchStats::default();
    let voters: Vec<usize> = (0..instance.n()).collect();
    let mut chosen = Vec::new();
    let found = minimax_branch(instance, budget, &voters, instance.k, &mut chosen, &mut stats)?;
    match found {
        Some(c) => Ok((Some(cc_witness(instance, &c)?), stats)),
        None => Ok((None, stats)),
    }
}

fn minimax_branch(
    inst: &ProblemInstance,
    budget: &SolverBudget,
    voters: &[usize],
    left: usize,
    chosen: &mut Vec<usize>,
    stats: &mut BranchStats,
) -> Result<Option<Vec<usize>>> {
    stats.nodes += 1;
    if stats.nodes > budget.max_branch_nodes {
        return Err(Error::Budget(format!("search tree exceeded {} nodes", budget.max_branch_nodes)));
    }
    if voters.is_empty() {
        stats.leaves += 1;
        return Ok(Some(chosen.clone()));
    }
    if left == 0 {
        stats.leaves += 1;
        return Ok(None);
    }
    let r = &inst.matrix;
    let bound = inst.bound;
    let v = voters[0];
    let mut recursed = false;
    for c in 0..r.m() {
        if r.get(v, c) > bound {
            continue;
        }
        let next: Vec<usize> = voters.iter().copied().filter(|&w| r.get(w, c) > bound).collect();
        chosen.push(c);
        recursed = true;
        let res = minimax_branch(inst, budget, &next, left - 1, chosen, stats)?;
        chosen.pop();
        if res.is_some() {
            return Ok(res);
        }
    }
    if !recursed {
        stats.leaves += 1;
    }
    Ok(None)
}
