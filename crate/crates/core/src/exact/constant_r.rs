//! Enumeration over the few voters that may be represented imperfectly.

use super::budget::SolverBudget;
use super::cc_witness;
use crate::assignment::assign_monroe_sum;
use crate::error::{Error, Result};
use crate::instance::{Objective, ProblemInstance, Rule};
use crate::solution::{check_m_criterion, Assignment, Solution};

/// Sum decision at `instance.bound` by guessing which voters pay, and how much.
pub fn solve_constant_r(instance: &ProblemInstance) -> Result<Option<Solution>> {
    solve_constant_r_with(instance, &SolverBudget::default())
}

pub fn solve_constant_r_with(instance: &ProblemInstance, budget: &SolverBudget) -> Result<Option<Solution>> {
    if instance.objective != Objective::Sum {
        return Err(Error::Precondition("constant-bound solver handles the sum objective".into()));
    }
    let bound = instance.bound;
    if bound > budget.max_constant_bound {
        return Err(Error::Budget(format!(
            "constant-bound enumeration limited to bound {}, got {bound}",
            budget.max_constant_bound
        )));
    }
    let (n, m) = (instance.n(), instance.m());
    let r = &instance.matrix;
    // by_value[v][t] = the unique candidate with r(v,c) = t, for t <= bound
    let mut by_value = vec![vec![None; bound as usize + 1]; n];
    for (v, slots) in by_value.iter_mut().enumerate() {
        for c in 0..m {
            let x = r.get(v, c);
            if x <= bound {
                if slots[x as usize].is_some() {
                    return Err(Error::Precondition(format!(
                        "voter {v} has two candidates with value {x}"
                    )));
                }
                slots[x as usize] = Some(c);
            }
        }
        if slots[0].is_none() {
            return Err(Error::Precondition(format!("voter {v} has no zero-value candidate")));
        }
    }
    let base: Vec<usize> = by_value.iter().map(|s| s[0].unwrap()).collect();

    let mut best: Option<Solution> = None;
    let mut chosen = Vec::new();
    let mut values = Vec::new();
    let mut ctx = Ctx {
        inst: instance,
        budget,
        by_value: &by_value,
        base: &base,
        best: &mut best,
        visited: 0,
    };
    ctx.subsets(0, bound, &mut chosen, &mut values)?;
    Ok(best)
}

struct Ctx<'a> {
    inst: &'a ProblemInstance,
    budget: &'a SolverBudget,
    by_value: &'a [Vec<Option<usize>>],
    base: &'a [usize],
    best: &'a mut Option<Solution>,
    visited: u64,
}

impl Ctx<'_> {
    // Picks voters in increasing order, each with a value in 1..=left.
    fn subsets(&mut self, from: usize, left: u64, chosen: &mut Vec<usize>, values: &mut Vec<u64>) -> Result<()> {
        self.check(chosen, values)?;
        for v in from..self.inst.n() {
            for t in 1..=left {
                if self.by_value[v][t as usize].is_none() {
                    continue;
                }
                chosen.push(v);
                values.push(t);
                self.subsets(v + 1, left - t, chosen, values)?;
                chosen.pop();
                values.pop();
            }
        }
        Ok(())
    }

    fn check(&mut self, chosen: &[usize], values: &[u64]) -> Result<()> {
        self.visited += 1;
        if self.visited.is_multiple_of(4096) {
            self.budget.check_deadline()?;
        }
        let mut map = self.base.to_vec();
        for (&v, &t) in chosen.iter().zip(values) {
            map[v] = self.by_value[v][t as usize].unwrap();
        }
        let mut used = map.clone();
        used.sort_unstable();
        used.dedup();
        let k = self.inst.k;
        let sol = match self.inst.rule {
            Rule::Cc => {
                if used.len() > k {
                    return Ok(());
                }
                cc_witness(self.inst, &used)?
            }
            Rule::Monroe => {
                if used.len() != k || !check_m_criterion(&Assignment::new(used.clone(), map), k, self.inst.n()) {
                    return Ok(());
                }
                assign_monroe_sum(&used, &self.inst.matrix)?
            }
        };
        if sol.value > self.inst.bound {
            return Ok(());
        }
        let replace = match self.best.as_ref() {
            None => true,
            Some(b) => (sol.value, sol.winners()) < (b.value, b.winners()),
        };
        if replace {
            *self.best = Some(sol);
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::election::MisrepSpec;
    use crate::fixtures::{four_by_three, six_voters};

    fn inst(rule: Rule, k: usize, bound: u64) -> ProblemInstance {
        ProblemInstance::from_spec(four_by_three(), &MisrepSpec::Borda, rule, Objective::Sum, k, bound).unwrap()
    }

    #[test]
    fn examples() {
        let s = solve_constant_r(&inst(Rule::Cc, 3, 0)).unwrap().unwrap();
        assert_eq!(s.winners(), &[0, 1, 2]);
        let s = solve_constant_r(&inst(Rule::Cc, 2, 1)).unwrap().unwrap();
        assert_eq!(s.value, 1);
        assert!(solve_constant_r(&inst(Rule::Cc, 1, 1)).unwrap().is_none());
    }

    #[test]
    fn monroe_six_voters() {
        let i = ProblemInstance::from_spec(six_voters(), &MisrepSpec::Borda, Rule::Monroe, Objective::Sum, 3, 2).unwrap();
        let s = solve_constant_r(&i).unwrap().unwrap();
        assert_eq!((s.value, s.winners().to_vec()), (2, vec![0, 1, 2]));
        assert!(solve_constant_r(&i.with_bound(1)).unwrap().is_none());
    }

    #[test]
    fn bound_cap() {
        assert!(matches!(solve_constant_r(&inst(Rule::Cc, 1, 4)), Err(Error::Budget(_))));
    }
}
