use crate::error::{Error, Result};
use std::time::{Duration, Instant};

/// Work caps shared by the exact solvers. A solver that would exceed a cap
/// returns [`Error::Budget`] instead of a possibly non-optimal answer.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverBudget {
    /// Maximum number of committees examined by subset enumeration.
    pub max_subsets: u64,
    /// Maximum number of voters for partition enumeration.
    pub max_partition_voters: usize,
    /// Maximum number of search-tree nodes for the branching solvers.
    pub max_branch_nodes: u64,
    /// Largest bound accepted by the constant-bound enumeration.
    pub max_constant_bound: u64,
    pub deadline: Option<Instant>,
}

impl Default for SolverBudget {
    fn default() -> Self {
        SolverBudget {
            // C(20,10) = 184756; 2^20 covers every committee size for m <= 20
            max_subsets: 1 << 20,
            max_partition_voters: 9,
            max_branch_nodes: 5_000_000,
            max_constant_bound: 3,
            deadline: None,
        }
    }
}

impl SolverBudget {
    pub fn unlimited() -> Self {
        SolverBudget {
            max_subsets: u64::MAX,
            max_partition_voters: usize::MAX,
            max_branch_nodes: u64::MAX,
            max_constant_bound: u64::MAX,
            deadline: None,
        }
    }

    pub fn with_time_limit(mut self, limit: Duration) -> Self {
        self.deadline = Some(Instant::now() + limit);
        self
    }

    pub fn check_deadline(&self) -> Result<()> {
        match self.deadline {
            Some(d) if Instant::now() >= d => Err(Error::Budget("wall-clock limit reached".into())),
            _ => Ok(()),
        }
    }
}

/// `C(n, k)`, saturating at `u64::MAX`.
pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(8, 3), 56);
        assert_eq!(binomial(20, 10), 184_756);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(binomial(200, 100), u64::MAX);
    }

    #[test]
    fn expired_deadline() {
        let b = SolverBudget::default().with_time_limit(Duration::ZERO);
        assert!(b.check_deadline().is_err());
        assert!(SolverBudget::default().check_deadline().is_ok());
    }
}
