use super::budget::SolverBudget;
use super::{cc_witness, pad_winners};
use crate::error::{Error, Result};
use crate::instance::{Objective, ProblemInstance, Rule};
use crate::matching::{min_cost_assignment, perfect_row_matching};
use crate::solution::{load_bounds, Assignment, Solution};

/// Enumerates partitions of the voters and matches blocks to candidates.
///
/// CC uses every partition into at most `k` nonempty blocks; Monroe uses
/// partitions into exactly `k` blocks with balanced sizes.
pub fn solve_partition_enum(instance: &ProblemInstance) -> Result<Solution> {
    solve_partition_enum_with(instance, &SolverBudget::default())
}

pub fn solve_partition_enum_with(instance: &ProblemInstance, budget: &SolverBudget) -> Result<Solution> {
    let n = instance.n();
    if n > budget.max_partition_voters {
        return Err(Error::Budget(format!(
            "partition enumeration limited to {} voters, got {n}",
            budget.max_partition_voters
        )));
    }
    let mut search = Search {
        inst: instance,
        budget,
        labels: vec![0; n],
        sizes: Vec::new(),
        visited: 0,
        best: None,
    };
    search.rec(0)?;
    let (value, winners, map) = search
        .best
        .ok_or_else(|| Error::Internal("no admissible partition".into()))?;
    let sol = match instance.rule {
        Rule::Cc => cc_witness(instance, &winners)?,
        Rule::Monroe => Solution::from_assignment(Assignment::new(winners, map), &instance.matrix, instance.objective, instance.k),
    };
    if sol.value != value {
        return Err(Error::Internal(format!(
            "partition value {value} but witness evaluates to {}",
            sol.value
        )));
    }
    Ok(sol)
}

struct Search<'a> {
    inst: &'a ProblemInstance,
    budget: &'a SolverBudget,
    labels: Vec<usize>,
    sizes: Vec<usize>,
    visited: u64,
    // (value, padded sorted winners, voter map)
    best: Option<(u64, Vec<usize>, Vec<usize>)>,
}

impl Search<'_> {
    fn rec(&mut self, v: usize) -> Result<()> {
        let n = self.inst.n();
        let k = self.inst.k;
        let monroe = self.inst.rule == Rule::Monroe;
        let (lo, hi) = load_bounds(n, k);
        if v == n {
            if monroe {
                let at_hi = self.sizes.iter().filter(|&&s| s == hi).count();
                if self.sizes.len() != k || self.sizes.iter().any(|&s| s < lo) || (hi > lo && at_hi != n % k) {
                    return Ok(());
                }
            }
            self.visited += 1;
            if self.visited.is_multiple_of(4096) {
                self.budget.check_deadline()?;
            }
            return self.evaluate();
        }
        let blocks = self.sizes.len();
        for b in 0..=blocks.min(k - 1) {
            if b == blocks {
                self.sizes.push(0);
            }
            if monroe && self.sizes[b] == hi {
                if b == blocks {
                    self.sizes.pop();
                }
                continue;
            }
            self.sizes[b] += 1;
            self.labels[v] = b;
            self.rec(v + 1)?;
            self.sizes[b] -= 1;
            if b == blocks {
                self.sizes.pop();
            }
        }
        Ok(())
    }

    fn evaluate(&mut self) -> Result<()> {
        let r = &self.inst.matrix;
        let (n, m) = (self.inst.n(), self.inst.m());
        let blocks = self.sizes.len();
        let (value, cols) = match self.inst.objective {
            Objective::Sum => {
                let mut cost = vec![vec![0i64; m]; blocks];
                for v in 0..n {
                    let row = &mut cost[self.labels[v]];
                    for (c, x) in row.iter_mut().enumerate() {
                        *x += r.get(v, c) as i64;
                    }
                }
                let (total, cols) = min_cost_assignment(&cost).ok_or_else(|| Error::Internal("more blocks than candidates".into()))?;
                (total as u64, cols)
            }
            Objective::Minimax => {
                let mut worst = vec![vec![0u64; m]; blocks];
                for v in 0..n {
                    let row = &mut worst[self.labels[v]];
                    for (c, x) in row.iter_mut().enumerate() {
                        *x = (*x).max(r.get(v, c));
                    }
                }
                let mut vals: Vec<u64> = worst.iter().flatten().copied().collect();
                vals.sort_unstable();
                vals.dedup();
                let mut found = None;
                for t in vals {
                    if let Some(cols) = perfect_row_matching(blocks, m, |b, c| worst[b][c] <= t) {
                        found = Some((t, cols));
                        break;
                    }
                }
                found.ok_or_else(|| Error::Internal("more blocks than candidates".into()))?
            }
        };
        if let Some((bv, bw, _)) = &self.best {
            if value > *bv {
                return Ok(());
            }
            let w = pad_winners(&cols, self.inst.k, m);
            if value == *bv && w >= *bw {
                return Ok(());
            }
        }
        let map = self.labels.iter().map(|&b| cols[b]).collect();
        let w = pad_winners(&cols, self.inst.k, m);
        self.best = Some((value, w, map));
        Ok(())
    }
}
