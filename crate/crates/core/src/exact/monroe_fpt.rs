//! Monroe decisions for small `(bound, k)` on Borda-like matrices.

use super::budget::SolverBudget;
use super::partition::solve_partition_enum_with;
use super::subset::solve_subset_enum_over;
use crate::election::MisrepMatrix;
use crate::error::{Error, Result};
use crate::instance::{Objective, ProblemInstance, Rule};
use crate::solution::Solution;

fn check(instance: &ProblemInstance, objective: Objective) -> Result<()> {
    if instance.rule != Rule::Monroe || instance.objective != objective {
        return Err(Error::Precondition(format!(
            "this solver handles monroe/{objective}, got {}/{}",
            instance.rule, instance.objective
        )));
    }
    if !instance.matrix.is_borda_like() {
        return Err(Error::Precondition("matrix rows must be Borda rankings".into()));
    }
    Ok(())
}

/// Candidates ranked first by at least one voter, ascending.
pub fn zero_candidates(matrix: &MisrepMatrix) -> Vec<usize> {
    (0..matrix.m())
        .filter(|&c| (0..matrix.n()).any(|v| matrix.get(v, c) == 0))
        .collect()
}

fn few_voters(instance: &ProblemInstance) -> bool {
    let cap = (instance.bound as u128 + 1) * instance.k as u128;
    instance.n() as u128 <= cap
}

fn within(sol: Solution, bound: u64) -> Option<Solution> {
    (sol.value <= bound).then_some(sol)
}

/// Monroe sum decision at `instance.bound`.
pub fn solve_m_mw_rk(instance: &ProblemInstance) -> Result<Option<Solution>> {
    solve_m_mw_rk_with(instance, &SolverBudget::default())
}

pub fn solve_m_mw_rk_with(instance: &ProblemInstance, budget: &SolverBudget) -> Result<Option<Solution>> {
    check(instance, Objective::Sum)?;
    let bound = instance.bound;
    if few_voters(instance) {
        return Ok(within(solve_partition_enum_with(instance, budget)?, bound));
    }
    // every committee within the bound is made of zero-candidates
    let zero = zero_candidates(&instance.matrix);
    if zero.len() as u128 > bound as u128 + instance.k as u128 || zero.len() < instance.k {
        return Ok(None);
    }
    Ok(within(solve_subset_enum_over(instance, &zero, budget)?, bound))
}

/// Monroe minimax decision at `instance.bound`.
pub fn solve_minimax_m_mw_rk(instance: &ProblemInstance) -> Result<Option<Solution>> {
    solve_minimax_m_mw_rk_with(instance, &SolverBudget::default())
}

pub fn solve_minimax_m_mw_rk_with(instance: &ProblemInstance, budget: &SolverBudget) -> Result<Option<Solution>> {
    check(instance, Objective::Minimax)?;
    let bound = instance.bound;
    if few_voters(instance) {
        return Ok(within(solve_partition_enum_with(instance, budget)?, bound));
    }
    let r = &instance.matrix;
    let need = instance.n() / instance.k;
    let pool: Vec<usize> = (0..instance.m())
        .filter(|&c| (0..instance.n()).filter(|&v| r.get(v, c) <= bound).count() >= need)
        .collect();
    if pool.len() < instance.k {
        return Ok(None);
    }
    Ok(within(solve_subset_enum_over(instance, &pool, budget)?, bound))
}
