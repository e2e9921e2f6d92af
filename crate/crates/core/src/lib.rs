//! Exact winner determination for Chamberlin-Courant and Monroe
//! proportional representation, in sum and minimax variants.

pub mod assignment;
pub mod election;
pub mod error;
pub mod exact;
pub mod fixtures;
pub mod generate;
pub mod hardness;
pub mod instance;
pub mod matching;
pub mod single_peaked;
pub mod solution;
pub mod solve;
pub mod stabbing;

pub use election::{build_misrep, Election, MisrepMatrix, MisrepSpec};
pub use error::{Error, Result};
pub use instance::{Objective, ProblemInstance, Rule};
pub use solution::{check_m_criterion, evaluate, verify_solution, Assignment, Solution, VerifyReport};
pub use solve::{applicable_solvers, auto_solver, decide, optimize, Mode, Solver};
pub use exact::SolverBudget;
pub use single_peaked::{detect_axis, SocietalAxis};
