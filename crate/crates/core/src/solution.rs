//! Assignments, objective evaluation and solution verification.

use crate::election::MisrepMatrix;
use crate::error::{Error, Result};
use crate::instance::{Objective, ProblemInstance, Rule};
use std::fmt;

/// A committee and a map from voters to committee members.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Assignment {
    /// Sorted, distinct candidate indices.
    pub winners: Vec<usize>,
    /// `map[v]` is the candidate representing voter `v`.
    pub map: Vec<usize>,
}

impl Assignment {
    pub fn new(mut winners: Vec<usize>, map: Vec<usize>) -> Self {
        winners.sort_unstable();
        Assignment { winners, map }
    }

    /// Number of voters mapped to each winner, in `winners` order.
    pub fn loads(&self) -> Vec<usize> {
        self.winners
            .iter()
            .map(|&w| self.map.iter().filter(|&&c| c == w).count())
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Solution {
    pub assignment: Assignment,
    pub value: u64,
    pub m_criterion: bool,
}

impl Solution {
    /// Wraps an assignment, computing its value and M-criterion flag.
    pub fn from_assignment(assignment: Assignment, matrix: &MisrepMatrix, objective: Objective, k: usize) -> Self {
        let value = evaluate(&assignment, matrix, objective);
        let m_criterion = check_m_criterion(&assignment, k, matrix.n());
        Solution {
            assignment,
            value,
            m_criterion,
        }
    }

    pub fn winners(&self) -> &[usize] {
        &self.assignment.winners
    }
}

pub fn evaluate(assignment: &Assignment, matrix: &MisrepMatrix, objective: Objective) -> u64 {
    let costs = assignment.map.iter().enumerate().map(|(v, &c)| matrix.get(v, c));
    match objective {
        Objective::Sum => costs.sum(),
        Objective::Minimax => costs.max().unwrap_or(0),
    }
}

/// Lower and upper load bounds `(floor(n/k), ceil(n/k))`.
pub fn load_bounds(n: usize, k: usize) -> (usize, usize) {
    (n / k, n.div_ceil(k))
}

pub fn check_m_criterion(assignment: &Assignment, k: usize, n: usize) -> bool {
    if k == 0 || assignment.winners.len() != k || assignment.map.len() != n {
        return false;
    }
    let (lo, hi) = load_bounds(n, k);
    assignment.loads().iter().all(|&l| lo <= l && l <= hi)
}

/// Shape checks shared by verification and the CLI.
pub fn check_well_formed(assignment: &Assignment, n: usize, m: usize) -> Result<()> {
    if assignment.map.len() != n {
        return Err(Error::MalformedSolution(format!(
            "assignment has {} entries for {n} voters",
            assignment.map.len()
        )));
    }
    let w = &assignment.winners;
    if w.iter().any(|&c| c >= m) {
        return Err(Error::MalformedSolution("winner index out of range".into()));
    }
    if w.windows(2).any(|p| p[0] >= p[1]) {
        return Err(Error::MalformedSolution("winners are not sorted and distinct".into()));
    }
    for (v, &c) in assignment.map.iter().enumerate() {
        if w.binary_search(&c).is_err() {
            return Err(Error::MalformedSolution(format!(
                "voter {v} is mapped to candidate {c}, which is not a winner"
            )));
        }
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct VerifyReport {
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failed(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    fn push(&mut self, name: &'static str, passed: bool, detail: String) {
        self.checks.push(Check { name, passed, detail });
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let status = if c.passed { "passed" } else { "failed" };
            writeln!(f, "{} check {status}: {}", c.name, c.detail)?;
        }
        Ok(())
    }
}

/// Verifies a solution including the bound check.
pub fn verify_solution(instance: &ProblemInstance, solution: &Solution) -> Result<VerifyReport> {
    verify_solution_with(instance, solution, true)
}

/// Recomputes everything a solution claims. Malformed input is an error,
/// failed checks are reported.
pub fn verify_solution_with(
    instance: &ProblemInstance,
    solution: &Solution,
    check_bound: bool,
) -> Result<VerifyReport> {
    let a = &solution.assignment;
    check_well_formed(a, instance.n(), instance.m())?;
    let mut report = VerifyReport::default();
    let names = instance.election.names();

    let size = a.winners.len();
    report.push(
        "winner count",
        size == instance.k,
        format!("{size} winners, k = {}", instance.k),
    );

    let value = evaluate(a, &instance.matrix, instance.objective);
    report.push(
        "value",
        value == solution.value,
        format!("claimed {}, recomputed {value}", solution.value),
    );

    let mc = check_m_criterion(a, instance.k, instance.n());
    if instance.rule == Rule::Monroe {
        let (lo, hi) = load_bounds(instance.n(), instance.k);
        let loads = a.loads();
        let detail = match a.winners.iter().zip(&loads).find(|(_, &l)| l < lo || l > hi) {
            Some((&w, &l)) => format!("winner {} has load {l}, allowed {lo}..{hi}", names[w]),
            None if !mc => format!("{size} winners used, k = {}", instance.k),
            None => format!("all loads within {lo}..{hi}"),
        };
        report.push("m-criterion", mc, detail);
    }
    report.push(
        "m-criterion flag",
        mc == solution.m_criterion,
        format!("claimed {}, recomputed {mc}", solution.m_criterion),
    );

    if check_bound {
        report.push(
            "bound",
            value <= instance.bound,
            format!("value {value}, bound {}", instance.bound),
        );
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::election::{build_misrep, MisrepSpec};
    use crate::fixtures::four_by_three;

    fn borda() -> MisrepMatrix {
        build_misrep(&four_by_three(), &MisrepSpec::Borda).unwrap()
    }

    #[test]
    fn everyone_to_second_candidate() {
        let a = Assignment::new(vec![1], vec![1, 1, 1]);
        assert_eq!(evaluate(&a, &borda(), Objective::Sum), 2);
        assert_eq!(evaluate(&a, &borda(), Objective::Minimax), 1);
    }

    #[test]
    fn single_voter_top_is_zero() {
        let e = crate::election::Election::from_votes(3, vec![vec![2, 0, 1]]).unwrap();
        let r = build_misrep(&e, &MisrepSpec::Borda).unwrap();
        let a = Assignment::new(vec![2], vec![2]);
        assert_eq!(evaluate(&a, &r, Objective::Sum), 0);
        assert_eq!(evaluate(&a, &r, Objective::Minimax), 0);
    }

    #[test]
    fn m_criterion_loads() {
        let a = Assignment::new(vec![0, 1, 2], vec![0, 0, 1, 1, 2, 2]);
        assert!(check_m_criterion(&a, 3, 6));
        let a = Assignment::new(vec![0, 1, 2], vec![0, 0, 0, 1, 1, 2]);
        assert!(!check_m_criterion(&a, 3, 6));
        let a = Assignment::new(vec![0, 1, 2], vec![0, 0, 0, 1, 1, 2, 2]);
        assert!(check_m_criterion(&a, 3, 7));
    }

    #[test]
    fn verify_reports() {
        let e = four_by_three();
        let inst = ProblemInstance::from_spec(e.clone(), &MisrepSpec::Borda, Rule::Cc, Objective::Sum, 1, 2).unwrap();
        let good = Solution::from_assignment(Assignment::new(vec![1], vec![1, 1, 1]), &inst.matrix, Objective::Sum, 1);
        assert_eq!(good.value, 2);
        assert!(verify_solution(&inst, &good).unwrap().passed());

        let mut low = good.clone();
        low.value = 1;
        let rep = verify_solution(&inst, &low).unwrap();
        assert!(rep.failed().any(|c| c.name == "value"));

        let mon = ProblemInstance::from_spec(e, &MisrepSpec::Borda, Rule::Monroe, Objective::Sum, 3, 10).unwrap();
        let bad = Solution::from_assignment(Assignment::new(vec![0], vec![0, 0, 0]), &mon.matrix, Objective::Sum, 3);
        let rep = verify_solution(&mon, &bad).unwrap();
        assert!(rep.failed().any(|c| c.name == "m-criterion"));
    }

    #[test]
    fn malformed_is_error() {
        let inst = ProblemInstance::from_spec(four_by_three(), &MisrepSpec::Borda, Rule::Cc, Objective::Sum, 1, 2).unwrap();
        let s = Solution {
            assignment: Assignment::new(vec![1], vec![1, 2, 1]),
            value: 0,
            m_criterion: false,
        };
        assert!(matches!(verify_solution(&inst, &s), Err(Error::MalformedSolution(_))));
        let s = Solution {
            assignment: Assignment::new(vec![1], vec![1]),
            value: 0,
            m_criterion: false,
        };
        assert!(verify_solution(&inst, &s).is_err());
    }
}
