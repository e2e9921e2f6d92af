//! Uniform entry points over all solvers, plus automatic routing.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::exact::{
    binomial, check_sparsity, solve_cc_branch_rk_with, solve_constant_r_with, solve_m_mw_rk_with,
    solve_minimax_cc_branch_rk_with, solve_minimax_m_mw_rk_with, solve_minimax_r0, solve_partition_enum_with,
    solve_subset_enum_with, SolverBudget,
};
use crate::instance::{Objective, ProblemInstance, Rule};
use crate::single_peaked::{check_single_troughed, detect_axis, solve_cc_minimax_sp, solve_cc_sum_sp, SocietalAxis};
use crate::solution::Solution;
use crate::stabbing::{decide_monroe_threshold_sp, solve_minimax_m_mw_sp, solve_monroe_sum_sp};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Solver {
    SubsetEnum,
    PartitionEnum,
    Branch,
    ConstantR,
    FptRk,
    MinimaxR0,
    SpDp,
    SpGreedy,
    SpStabbing,
}

impl Solver {
    pub const ALL: [Solver; 9] = [
        Solver::SubsetEnum,
        Solver::PartitionEnum,
        Solver::Branch,
        Solver::ConstantR,
        Solver::FptRk,
        Solver::MinimaxR0,
        Solver::SpDp,
        Solver::SpGreedy,
        Solver::SpStabbing,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Solver::SubsetEnum => "subset-enum",
            Solver::PartitionEnum => "partition-enum",
            Solver::Branch => "branch",
            Solver::ConstantR => "constant-r",
            Solver::FptRk => "fpt-rk",
            Solver::MinimaxR0 => "minimax-r0",
            Solver::SpDp => "sp-dp",
            Solver::SpGreedy => "sp-greedy",
            Solver::SpStabbing => "sp-stabbing",
        }
    }
}

impl fmt::Display for Solver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Solver {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Solver::ALL
            .into_iter()
            .find(|v| v.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Precondition(format!("unknown solver '{s}'")))
    }
}

/// Whether a call optimizes or decides at `instance.bound`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Optimize,
    Decide,
}

fn sp_axis(instance: &ProblemInstance) -> Option<SocietalAxis> {
    detect_axis(&instance.election).filter(|a| check_single_troughed(&instance.matrix, a))
}

fn need_axis(instance: &ProblemInstance) -> Result<SocietalAxis> {
    sp_axis(instance).ok_or_else(|| Error::Precondition("profile is not single-peaked".into()))
}

// no two candidates share a value within the bound in any row
fn unique_small_values(instance: &ProblemInstance) -> bool {
    let r = &instance.matrix;
    (0..r.n()).all(|v| {
        let mut vals: Vec<u64> = r.row(v).iter().copied().filter(|&x| x <= instance.bound).collect();
        let len = vals.len();
        vals.sort_unstable();
        vals.dedup();
        vals.len() == len
    })
}

/// Structural preconditions of `solver` for `instance` in `mode`, ignoring
/// budgets. Decision solvers used in optimize mode are driven through a
/// bound search, so their bound-dependent checks are made at the instance
/// bound only.
pub fn check_applicable(instance: &ProblemInstance, solver: Solver, mode: Mode) -> Result<()> {
    let fail = |msg: &str| Err(Error::Precondition(format!("{solver}: {msg}")));
    let (rule, obj) = (instance.rule, instance.objective);
    match solver {
        Solver::SubsetEnum | Solver::PartitionEnum => Ok(()),
        Solver::Branch => {
            if rule != Rule::Cc {
                return fail("needs the cc rule");
            }
            check_sparsity(&instance.matrix, instance.bound)
        }
        Solver::ConstantR => {
            if obj != Objective::Sum {
                return fail("needs the sum objective");
            }
            if !unique_small_values(instance) {
                return fail("some voter has two candidates with the same value within the bound");
            }
            Ok(())
        }
        Solver::FptRk => {
            if rule != Rule::Monroe || !instance.matrix.is_borda_like() {
                return fail("needs the monroe rule and Borda rows");
            }
            Ok(())
        }
        Solver::MinimaxR0 => {
            if obj != Objective::Minimax || !instance.matrix.is_borda_like() {
                return fail("needs the minimax objective and Borda rows");
            }
            if mode == Mode::Decide && instance.bound != 0 {
                return fail("decides bound 0 only");
            }
            Ok(())
        }
        Solver::SpDp | Solver::SpGreedy | Solver::SpStabbing => {
            let ok = match solver {
                Solver::SpDp => rule == Rule::Cc && obj == Objective::Sum,
                Solver::SpGreedy => rule == Rule::Cc && obj == Objective::Minimax,
                _ => {
                    rule == Rule::Monroe
                        && (obj == Objective::Minimax
                            || instance.matrix.is_binary()
                            || (mode == Mode::Decide && instance.bound == 0))
                }
            };
            if !ok {
                return fail("rule, objective or matrix not covered");
            }
            need_axis(instance).map(|_| ())
        }
    }
}

/// Solvers whose structural preconditions hold.
pub fn applicable_solvers(instance: &ProblemInstance, mode: Mode) -> Vec<Solver> {
    Solver::ALL
        .into_iter()
        .filter(|&s| check_applicable(instance, s, mode).is_ok())
        .collect()
}

/// Solver picked by `auto`: the single-peaked algorithms when the profile
/// allows, then (for decisions) the parameterized solvers when the bound
/// and committee size are small, then enumeration.
pub fn auto_solver(instance: &ProblemInstance, mode: Mode, budget: &SolverBudget) -> Solver {
    let ok = |s| check_applicable(instance, s, mode).is_ok();
    for s in [Solver::SpDp, Solver::SpGreedy, Solver::SpStabbing] {
        if ok(s) {
            return s;
        }
    }
    if mode == Mode::Decide {
        let (r, k) = (instance.bound, instance.k as u64);
        if instance.bound == 0 && ok(Solver::MinimaxR0) {
            return Solver::MinimaxR0;
        }
        let tree = (r + 1).checked_pow((r + k) as u32).unwrap_or(u64::MAX);
        if ok(Solver::Branch) && tree <= budget.max_branch_nodes {
            return Solver::Branch;
        }
        if ok(Solver::FptRk) && r + k <= 10 {
            return Solver::FptRk;
        }
    }
    if binomial(instance.m(), instance.k) <= budget.max_subsets || instance.n() > budget.max_partition_voters {
        Solver::SubsetEnum
    } else {
        Solver::PartitionEnum
    }
}

/// Decision at `instance.bound`: a solution with value at most the bound,
/// or `None`.
pub fn decide(instance: &ProblemInstance, solver: Solver, budget: &SolverBudget) -> Result<Option<Solution>> {
    check_applicable(instance, solver, Mode::Decide)?;
    budget.check_deadline()?;
    let bound = instance.bound;
    let within = |s: Solution| (s.value <= bound).then_some(s);
    let rule = instance.rule;
    let obj = instance.objective;
    match solver {
        Solver::SubsetEnum | Solver::PartitionEnum | Solver::SpDp => Ok(within(optimize(instance, solver, budget)?)),
        Solver::Branch => match obj {
            Objective::Sum => Ok(solve_cc_branch_rk_with(instance, budget)?.0),
            Objective::Minimax => Ok(solve_minimax_cc_branch_rk_with(instance, budget)?.0),
        },
        Solver::ConstantR => solve_constant_r_with(instance, budget),
        Solver::FptRk => match obj {
            Objective::Sum => solve_m_mw_rk_with(instance, budget),
            Objective::Minimax => solve_minimax_m_mw_rk_with(instance, budget),
        },
        Solver::MinimaxR0 => solve_minimax_r0(instance),
        Solver::SpGreedy => solve_cc_minimax_sp(instance, &need_axis(instance)?),
        Solver::SpStabbing => {
            debug_assert_eq!(rule, Rule::Monroe);
            let axis = need_axis(instance)?;
            match obj {
                Objective::Minimax => solve_minimax_m_mw_sp(instance, &axis),
                Objective::Sum if instance.matrix.is_binary() => Ok(within(solve_monroe_sum_sp(instance, &axis)?)),
                Objective::Sum => decide_monroe_threshold_sp(instance, &axis, 0),
            }
        }
    }
}

/// Optimal solution. Decision-only solvers are driven by a galloping search
/// over candidate bounds.
pub fn optimize(instance: &ProblemInstance, solver: Solver, budget: &SolverBudget) -> Result<Solution> {
    check_applicable(instance, solver, Mode::Optimize)?;
    budget.check_deadline()?;
    match solver {
        Solver::SubsetEnum => solve_subset_enum_with(instance, budget),
        Solver::PartitionEnum => solve_partition_enum_with(instance, budget),
        Solver::SpDp => solve_cc_sum_sp(instance, &need_axis(instance)?),
        Solver::SpStabbing if instance.objective == Objective::Sum => solve_monroe_sum_sp(instance, &need_axis(instance)?),
        _ => gallop(instance, solver, budget),
    }
}

fn gallop(instance: &ProblemInstance, solver: Solver, budget: &SolverBudget) -> Result<Solution> {
    let r = &instance.matrix;
    let candidates: Vec<u64> = match instance.objective {
        Objective::Minimax => r.distinct_values(),
        Objective::Sum => (0..=r.max_value() * instance.n() as u64).collect(),
    };
    let last = candidates.len() - 1;
    let probe = |i: usize| decide(&instance.with_bound(candidates[i]), solver, budget);

    // exponential probes 0, 1, 3, 7, ... until one succeeds
    let mut failed: Option<usize> = None;
    let mut step = 1usize;
    let mut i = 0usize;
    let (mut hi, mut best) = loop {
        if let Some(s) = probe(i)? {
            break (i, s);
        }
        if i == last {
            return Err(Error::Internal(format!("{solver} found no solution at the largest bound")));
        }
        failed = Some(i);
        i = (i + step).min(last);
        step *= 2;
    };
    let mut lo = failed.map_or(0, |f| f + 1);
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        match probe(mid)? {
            Some(s) => {
                hi = mid;
                best = s;
            }
            None => lo = mid + 1,
        }
    }
    if best.value != candidates[hi] {
        return Err(Error::Internal(format!(
            "{solver} returned value {} at tight bound {}",
            best.value, candidates[hi]
        )));
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::election::MisrepSpec;
    use crate::fixtures::{four_by_three, six_voters};

    fn inst(e: crate::election::Election, rule: Rule, obj: Objective, k: usize) -> ProblemInstance {
        ProblemInstance::from_spec(e, &MisrepSpec::Borda, rule, obj, k, 0).unwrap()
    }

    #[test]
    fn names_round_trip() {
        for s in Solver::ALL {
            assert_eq!(s.name().parse::<Solver>().unwrap(), s);
        }
        assert!("nope".parse::<Solver>().is_err());
    }

    #[test]
    fn auto_prefers_single_peaked() {
        let i = inst(four_by_three(), Rule::Cc, Objective::Sum, 1);
        let b = SolverBudget::default();
        assert_eq!(auto_solver(&i, Mode::Optimize, &b), Solver::SpDp);
        let s = optimize(&i, Solver::SpDp, &b).unwrap();
        assert_eq!((s.value, s.winners().to_vec()), (2, vec![1]));
    }

    #[test]
    fn every_applicable_solver_agrees() {
        let b = SolverBudget::default();
        for e in [four_by_three(), six_voters()] {
            for rule in [Rule::Cc, Rule::Monroe] {
                for obj in [Objective::Sum, Objective::Minimax] {
                    for k in 1..=3 {
                        let i = inst(e.clone(), rule, obj, k);
                        let want = optimize(&i, Solver::SubsetEnum, &b).unwrap().value;
                        for s in applicable_solvers(&i, Mode::Optimize) {
                            match optimize(&i, s, &b) {
                                Ok(got) => assert_eq!(got.value, want, "{s} {rule}/{obj} k={k}"),
                                Err(Error::Budget(_)) | Err(Error::Precondition(_)) => {}
                                Err(e) => panic!("{s}: {e}"),
                            }
                        }
                    }
                }
            }
        }
    }
}
