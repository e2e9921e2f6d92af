use super::budget::{binomial, SolverBudget};
use super::solve_fixed_committee;
use crate::assignment::{assign_monroe_sum, solve_monroe_minimax_fixed};
use crate::error::{Error, Result};
use crate::instance::{Objective, ProblemInstance, Rule};
use crate::solution::Solution;
use rayon::prelude::*;

const CHUNKS: u64 = 256;

/// Optimum over all size-k committees. Ties go to the lexicographically
/// smallest committee.
pub fn solve_subset_enum(instance: &ProblemInstance) -> Result<Solution> {
    solve_subset_enum_with(instance, &SolverBudget::default())
}

pub fn solve_subset_enum_with(instance: &ProblemInstance, budget: &SolverBudget) -> Result<Solution> {
    let pool: Vec<usize> = (0..instance.m()).collect();
    solve_subset_enum_over(instance, &pool, budget)
}

/// Subset enumeration restricted to committees drawn from `pool`.
pub fn solve_subset_enum_over(instance: &ProblemInstance, pool: &[usize], budget: &SolverBudget) -> Result<Solution> {
    let k = instance.k;
    let mut pool = pool.to_vec();
    pool.sort_unstable();
    pool.dedup();
    if pool.len() < k {
        return Err(Error::Precondition(format!(
            "candidate pool of size {} cannot hold {k} winners",
            pool.len()
        )));
    }
    let total = binomial(pool.len(), k);
    if total > budget.max_subsets {
        return Err(Error::Budget(format!(
            "C({}, {k}) = {total} committees exceeds the subset cap {}",
            pool.len(),
            budget.max_subsets
        )));
    }
    let chunk = total.div_ceil(CHUNKS).max(1);
    let starts: Vec<u64> = (0..total).step_by(chunk as usize).collect();
    let best = starts
        .par_iter()
        .map(|&start| scan_chunk(instance, &pool, start, chunk.min(total - start), budget))
        .try_reduce(|| None, |a, b| Ok(better(a, b)))?;
    let (_, committee) = best.ok_or_else(|| Error::Internal("no committee examined".into()))?;
    solve_fixed_committee(instance, &committee)
}

type Best = Option<(u64, Vec<usize>)>;

fn better(a: Best, b: Best) -> Best {
    match (a, b) {
        (None, x) | (x, None) => x,
        (Some(a), Some(b)) => Some(if b < a { b } else { a }),
    }
}

fn scan_chunk(instance: &ProblemInstance, pool: &[usize], start: u64, len: u64, budget: &SolverBudget) -> Result<Best> {
    let k = instance.k;
    let mut idx = unrank(start, pool.len(), k);
    let mut best: Best = None;
    let mut committee = vec![0; k];
    for step in 0..len {
        if step % 1024 == 0 {
            budget.check_deadline()?;
        }
        for (slot, &i) in committee.iter_mut().zip(&idx) {
            *slot = pool[i];
        }
        let v = committee_value(instance, &committee)?;
        if best.as_ref().is_none_or(|(bv, _)| v < *bv) {
            best = Some((v, committee.clone()));
        }
        if !next_combination(&mut idx, pool.len()) {
            break;
        }
    }
    Ok(best)
}

/// Objective value of the best assignment for a committee.
pub(crate) fn committee_value(instance: &ProblemInstance, committee: &[usize]) -> Result<u64> {
    let r = &instance.matrix;
    match (instance.rule, instance.objective) {
        (Rule::Cc, obj) => {
            let per_voter = (0..r.n()).map(|v| committee.iter().map(|&c| r.get(v, c)).min().unwrap());
            Ok(match obj {
                Objective::Sum => per_voter.sum(),
                Objective::Minimax => per_voter.max().unwrap_or(0),
            })
        }
        (Rule::Monroe, Objective::Sum) => Ok(assign_monroe_sum(committee, r)?.value),
        (Rule::Monroe, Objective::Minimax) => Ok(solve_monroe_minimax_fixed(committee, r)?.value),
    }
}

/// Combination of rank `r` in lexicographic order.
fn unrank(mut r: u64, n: usize, k: usize) -> Vec<usize> {
    let mut out = Vec::with_capacity(k);
    let mut x = 0;
    for i in 0..k {
        loop {
            let cnt = binomial(n - x - 1, k - i - 1);
            if r < cnt {
                out.push(x);
                x += 1;
                break;
            }
            r -= cnt;
            x += 1;
        }
    }
    out
}

fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if idx[i] < n - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}
