use crate::election::{build_misrep, Election, MisrepMatrix, MisrepSpec};
use crate::error::{Error, Result};
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Rule {
    /// Chamberlin-Courant: no load constraints.
    Cc,
    /// Monroe: balanced loads.
    Monroe,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Objective {
    Sum,
    Minimax,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Rule::Cc => "cc",
            Rule::Monroe => "monroe",
        })
    }
}

impl fmt::Display for Objective {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Objective::Sum => "sum",
            Objective::Minimax => "minimax",
        })
    }
}

impl FromStr for Rule {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "cc" => Ok(Rule::Cc),
            "monroe" => Ok(Rule::Monroe),
            other => Err(Error::Precondition(format!("unknown rule '{other}'"))),
        }
    }
}

impl FromStr for Objective {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "sum" => Ok(Objective::Sum),
            "minimax" => Ok(Objective::Minimax),
            other => Err(Error::Precondition(format!("unknown objective '{other}'"))),
        }
    }
}

/// A fully specified winner-determination problem.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProblemInstance {
    pub election: Election,
    pub matrix: MisrepMatrix,
    pub rule: Rule,
    pub objective: Objective,
    pub k: usize,
    /// Misrepresentation bound used by decision solvers.
    pub bound: u64,
}

impl ProblemInstance {
    pub fn new(
        election: Election,
        matrix: MisrepMatrix,
        rule: Rule,
        objective: Objective,
        k: usize,
        bound: u64,
    ) -> Result<Self> {
        matrix.check_monotone(&election)?;
        let (m, n) = (election.m(), election.n());
        if k == 0 || k > m.min(n) {
            return Err(Error::InvalidK { k, m, n });
        }
        Ok(ProblemInstance {
            election,
            matrix,
            rule,
            objective,
            k,
            bound,
        })
    }

    pub fn from_spec(
        election: Election,
        spec: &MisrepSpec,
        rule: Rule,
        objective: Objective,
        k: usize,
        bound: u64,
    ) -> Result<Self> {
        let matrix = build_misrep(&election, spec)?;
        Self::new(election, matrix, rule, objective, k, bound)
    }

    pub fn n(&self) -> usize {
        self.election.n()
    }

    pub fn m(&self) -> usize {
        self.election.m()
    }

    /// Same instance with another bound.
    pub fn with_bound(&self, bound: u64) -> Self {
        ProblemInstance {
            bound,
            ..self.clone()
        }
    }

    pub fn with_rule(&self, rule: Rule, objective: Objective) -> Self {
        ProblemInstance {
            rule,
            objective,
            ..self.clone()
        }
    }

    /// Same election with a replacement matrix (must stay monotone).
    pub fn with_matrix(&self, matrix: MisrepMatrix) -> Result<Self> {
        Self::new(
            self.election.clone(),
            matrix,
            self.rule,
            self.objective,
            self.k,
            self.bound,
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::four_by_three;

    #[test]
    fn k_bounds() {
        let e = four_by_three();
        for k in [0, 4] {
            let r = ProblemInstance::from_spec(e.clone(), &MisrepSpec::Borda, Rule::Cc, Objective::Sum, k, 0);
            assert!(matches!(r, Err(Error::InvalidK { .. })));
        }
        assert!(ProblemInstance::from_spec(e, &MisrepSpec::Borda, Rule::Monroe, Objective::Sum, 3, 0).is_ok());
    }

    #[test]
    fn parse_names() {
        assert_eq!("Monroe".parse::<Rule>().unwrap(), Rule::Monroe);
        assert_eq!("minimax".parse::<Objective>().unwrap(), Objective::Minimax);
        assert!("stv".parse::<Rule>().is_err());
    }
}
