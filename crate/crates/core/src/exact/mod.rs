//! Exact solvers for general profiles.

mod branching;
mod budget;
mod constant_r;
mod monroe_fpt;
mod partition;
mod r0;
mod subset;

pub use branching::{check_sparsity, solve_cc_branch_rk, solve_cc_branch_rk_with, solve_minimax_cc_branch_rk, solve_minimax_cc_branch_rk_with, BranchStats};
pub use budget::{binomial, SolverBudget};
pub use constant_r::{solve_constant_r, solve_constant_r_with};
pub use monroe_fpt::{solve_m_mw_rk, solve_m_mw_rk_with, solve_minimax_m_mw_rk, solve_minimax_m_mw_rk_with, zero_candidates};
pub use partition::{solve_partition_enum, solve_partition_enum_with};
pub use r0::solve_minimax_r0;
pub use subset::{solve_subset_enum, solve_subset_enum_over, solve_subset_enum_with};

use crate::assignment::{solve_cc_fixed, solve_monroe_fixed};
use crate::error::Result;
use crate::instance::{ProblemInstance, Rule};
use crate::solution::Solution;

/// Extends `winners` to `k` members with the smallest unused candidates.
pub fn pad_winners(winners: &[usize], k: usize, m: usize) -> Vec<usize> {
    let mut w = winners.to_vec();
    w.sort_unstable();
    w.dedup();
    let mut c = 0;
    while w.len() < k && c < m {
        if w.binary_search(&c).is_err() {
            w.push(c);
            w.sort_unstable();
        }
        c += 1;
    }
    w
}

/// Optimal solution for a fixed committee under the instance's rule and objective.
pub fn solve_fixed_committee(instance: &ProblemInstance, winners: &[usize]) -> Result<Solution> {
    match instance.rule {
        Rule::Cc => solve_cc_fixed(winners, &instance.matrix, instance.objective),
        Rule::Monroe => solve_monroe_fixed(winners, &instance.matrix, instance.objective),
    }
}

/// CC witness from a committee of at most `k` members: pad, then reassign.
pub(crate) fn cc_witness(instance: &ProblemInstance, winners: &[usize]) -> Result<Solution> {
    let w = pad_winners(winners, instance.k, instance.m());
    solve_cc_fixed(&w, &instance.matrix, instance.objective)
}
