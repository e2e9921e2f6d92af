use std::path::PathBuf;
use std::str::FromStr;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};

use proprep_core::{Mode, Objective, Rule, Solver, SolverBudget};

use crate::commands::{
    cmd_bench, cmd_detect_axis, cmd_gen, cmd_solve, cmd_verify, Family, GenOptions, Limits, Output, Overrides,
    SolveOptions,
};
use crate::error::CliError;

#[derive(Debug, Parser)]
#[command(name = "proprep", version, about = "Exact Chamberlin-Courant and Monroe winner determination")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Solve an election file and print a TOML result record.
    Solve(SolveArgs),
    /// Print a societal axis witnessing single-peakedness.
    DetectAxis { file: PathBuf },
    /// Generate an election file.
    Gen(GenArgs),
    /// Check a result record against an election file.
    Verify { instance: PathBuf, solution: PathBuf },
    /// Run every applicable solver on each file of a directory.
    Bench {
        dir: PathBuf,
        #[command(flatten)]
        budget: BudgetArgs,
    },
}

/// `auto` or a solver name.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverChoice(pub Option<Solver>);

impl FromStr for SolverChoice {
    type Err = proprep_core::Error;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.eq_ignore_ascii_case("auto") {
            Ok(SolverChoice(None))
        } else {
            s.parse().map(|s| SolverChoice(Some(s)))
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Optimize,
    Decide,
}

#[derive(Debug, Args)]
pub struct HeaderArgs {
    #[arg(long)]
    pub rule: Option<Rule>,
    #[arg(long)]
    pub objective: Option<Objective>,
    #[arg(long)]
    pub k: Option<usize>,
    /// Misrepresentation bound.
    #[arg(long = "R")]
    pub bound: Option<u64>,
}

#[derive(Debug, Args)]
pub struct BudgetArgs {
    /// Committees examined by subset enumeration.
    #[arg(long)]
    pub budget_subsets: Option<u64>,
    /// Voter limit for partition enumeration.
    #[arg(long)]
    pub budget_partition_voters: Option<usize>,
    /// Search-tree nodes for the branching solvers.
    #[arg(long)]
    pub budget_branch_nodes: Option<u64>,
    /// Largest bound for constant-r.
    #[arg(long)]
    pub budget_constant_r: Option<u64>,
    /// Wall-clock limit per solver run.
    #[arg(long)]
    pub budget_seconds: Option<f64>,
}

impl BudgetArgs {
    pub fn limits(&self) -> Result<Limits, CliError> {
        let d = SolverBudget::default();
        let time_limit = match self.budget_seconds {
            Some(s) => Some(
                Duration::try_from_secs_f64(s)
                    .map_err(|_| CliError::Usage(format!("bad --budget-seconds {s}")))?,
            ),
            None => None,
        };
        Ok(Limits {
            budget: SolverBudget {
                max_subsets: self.budget_subsets.unwrap_or(d.max_subsets),
                max_partition_voters: self.budget_partition_voters.unwrap_or(d.max_partition_voters),
                max_branch_nodes: self.budget_branch_nodes.unwrap_or(d.max_branch_nodes),
                max_constant_bound: self.budget_constant_r.unwrap_or(d.max_constant_bound),
                deadline: None,
            },
            time_limit,
        })
    }
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    pub file: PathBuf,
    /// `auto` or one of subset-enum, partition-enum, branch, constant-r,
    /// fpt-rk, minimax-r0, sp-dp, sp-greedy, sp-stabbing.
    #[arg(long, default_value = "auto")]
    pub solver: SolverChoice,
    #[arg(long, value_enum, default_value_t = ModeArg::Optimize)]
    pub mode: ModeArg,
    #[command(flatten)]
    pub header: HeaderArgs,
    #[command(flatten)]
    pub budget: BudgetArgs,
    /// Include the wall time in the record.
    #[arg(long)]
    pub timing: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Random,
    SinglePeaked,
    HsApproval,
    HsBorda,
    VcMinimax,
    Rx3cMonroe,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[arg(value_enum)]
    pub family: FamilyArg,
    /// Voters (random families), sets (hitting set), edges (vertex cover)
    /// or elements (rx3c).
    #[arg(long)]
    pub n: Option<usize>,
    /// Candidates (random families), universe size or vertices.
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long = "R")]
    pub bound: Option<u64>,
    #[arg(long)]
    pub rule: Option<Rule>,
    #[arg(long)]
    pub objective: Option<Objective>,
    /// Approval misrepresentation for the random families.
    #[arg(long)]
    pub approval: bool,
    /// Explicit set family with 1-based elements, e.g. "1,2;2,3".
    #[arg(long)]
    pub sets: Option<String>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Write to this file instead of standard output.
    #[arg(long, short)]
    pub out: Option<PathBuf>,
}

pub fn run(cli: Cli) -> Result<Output, CliError> {
    match cli.command {
        Command::Solve(a) => {
            let opts = SolveOptions {
                solver: a.solver.0,
                mode: match a.mode {
                    ModeArg::Optimize => Mode::Optimize,
                    ModeArg::Decide => Mode::Decide,
                },
                overrides: Overrides {
                    rule: a.header.rule,
                    objective: a.header.objective,
                    k: a.header.k,
                    bound: a.header.bound,
                },
                limits: a.budget.limits()?,
                timing: a.timing,
            };
            cmd_solve(&a.file, &opts)
        }
        Command::DetectAxis { file } => cmd_detect_axis(&file),
        Command::Gen(a) => {
            let family = match a.family {
                FamilyArg::Random => Family::Random,
                FamilyArg::SinglePeaked => Family::SinglePeaked,
                FamilyArg::HsApproval => Family::HsApproval,
                FamilyArg::HsBorda => Family::HsBorda,
                FamilyArg::VcMinimax => Family::VcMinimax,
                FamilyArg::Rx3cMonroe => Family::Rx3cMonroe,
            };
            let opts = GenOptions {
                n: a.n,
                m: a.m,
                k: a.k,
                bound: a.bound,
                rule: a.rule,
                objective: a.objective,
                approval: a.approval,
                sets: a.sets,
                seed: a.seed,
            };
            cmd_gen(family, &opts, a.out.as_deref())
        }
        Command::Verify { instance, solution } => cmd_verify(&instance, &solution),
        Command::Bench { dir, budget } => cmd_bench(&dir, &budget.limits()?),
    }
}
