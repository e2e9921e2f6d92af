//! TOML result records.

use serde::{Deserialize, Serialize};

use proprep_core::{Assignment, ProblemInstance, Solution};

use crate::error::CliError;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResultRecord {
    pub solver: String,
    /// `optimal`, `feasible` or `infeasible`.
    pub status: String,
    pub rule: String,
    pub objective: String,
    pub k: usize,
    /// Present for decision runs.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bound: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub value: Option<u64>,
    #[serde(default)]
    pub winners: Vec<String>,
    /// Representative of each voter, in voter order.
    #[serde(default)]
    pub assignment: Vec<String>,
    /// Voters per winner, in `winners` order.
    #[serde(default)]
    pub loads: Vec<usize>,
    #[serde(default)]
    pub m_criterion: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wall_ms: Option<f64>,
}

impl ResultRecord {
    pub fn new(inst: &ProblemInstance, solver: &str, status: &str, bound: Option<u64>, sol: Option<&Solution>) -> Self {
        let names = inst.election.names();
        let mut rec = ResultRecord {
            solver: solver.to_string(),
            status: status.to_string(),
            rule: inst.rule.to_string(),
            objective: inst.objective.to_string(),
            k: inst.k,
            bound,
            value: None,
            winners: Vec::new(),
            assignment: Vec::new(),
            loads: Vec::new(),
            m_criterion: false,
            wall_ms: None,
        };
        if let Some(s) = sol {
            let a = &s.assignment;
            rec.value = Some(s.value);
            rec.winners = a.winners.iter().map(|&c| names[c].clone()).collect();
            rec.assignment = a.map.iter().map(|&c| names[c].clone()).collect();
            rec.loads = a.loads();
            rec.m_criterion = s.m_criterion;
        }
        rec
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("result records always serialize")
    }

    pub fn from_toml(text: &str) -> Result<Self, CliError> {
        toml::from_str(text).map_err(|e| {
            let line = e
                .span()
                .map(|s| text[..s.start].matches('\n').count() + 1)
                .unwrap_or(1);
            CliError::parse(line, e.message().to_string())
        })
    }

    /// The claimed solution with names resolved against `inst`.
    pub fn solution(&self, inst: &ProblemInstance) -> Result<Solution, CliError> {
        let e = &inst.election;
        let lookup = |name: &String| {
            e.candidate_index(name)
                .ok_or_else(|| CliError::Usage(format!("solution names unknown candidate '{name}'")))
        };
        let value = self
            .value
            .ok_or_else(|| CliError::Usage("solution has no value".into()))?;
        let winners = self.winners.iter().map(lookup).collect::<Result<Vec<_>, _>>()?;
        let map = self.assignment.iter().map(lookup).collect::<Result<Vec<_>, _>>()?;
        Ok(Solution {
            assignment: Assignment::new(winners, map),
            value,
            m_criterion: self.m_criterion,
        })
    }
}
