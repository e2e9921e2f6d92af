//! Assigning voters to a fixed committee.

mod flow;

pub use flow::{Circulation, FlowNetwork};

use crate::election::MisrepMatrix;
use crate::error::{Error, Result};
use crate::instance::Objective;
use crate::solution::{load_bounds, Assignment, Solution};

/// Guard for [`enumerate_balanced_assignments`].
pub const MAX_ENUM_VOTERS: usize = 10;

fn sorted_winners(winners: &[usize], m: usize) -> Result<Vec<usize>> {
    if winners.is_empty() {
        return Err(Error::Precondition("empty winner set".into()));
    }
    let mut w = winners.to_vec();
    w.sort_unstable();
    w.dedup();
    if w.len() != winners.len() {
        return Err(Error::Precondition("winner set has duplicates".into()));
    }
    if w[w.len() - 1] >= m {
        return Err(Error::Precondition("winner index out of range".into()));
    }
    Ok(w)
}

/// Each voter goes to a best winner, lowest index on ties. Optimal for
/// both objectives under CC.
pub fn assign_cc(winners: &[usize], matrix: &MisrepMatrix) -> Result<Assignment> {
    let w = sorted_winners(winners, matrix.m())?;
    let map = (0..matrix.n())
        .map(|v| *w.iter().min_by_key(|&&c| (matrix.get(v, c), c)).unwrap())
        .collect();
    Ok(Assignment::new(w, map))
}

/// CC solution for a fixed committee.
pub fn solve_cc_fixed(winners: &[usize], matrix: &MisrepMatrix, objective: Objective) -> Result<Solution> {
    let a = assign_cc(winners, matrix)?;
    Ok(Solution::from_assignment(a, matrix, objective, winners.len()))
}

fn check_monroe_size(k: usize, n: usize) -> Result<()> {
    if k > n {
        return Err(Error::Precondition(format!("{k} winners for {n} voters")));
    }
    Ok(())
}

/// Builds the balanced transportation network. `allowed(v, c)` filters arcs.
fn monroe_flow(
    w: &[usize],
    matrix: &MisrepMatrix,
    with_costs: bool,
    allowed: impl Fn(usize, usize) -> bool,
) -> Option<Assignment> {
    let (n, k) = (matrix.n(), w.len());
    let (lo, hi) = load_bounds(n, k);
    let s = 0;
    let t = k + n + 1;
    let mut net = FlowNetwork::new(k + n + 2);
    for i in 0..k {
        net.add_arc(s, 1 + i, lo as i64, hi as i64, 0);
    }
    let mut pairs = Vec::new();
    for (i, &c) in w.iter().enumerate() {
        for v in 0..n {
            if allowed(v, c) {
                let cost = if with_costs { matrix.get(v, c) as i64 } else { 0 };
                let id = net.add_arc(1 + i, 1 + k + v, 0, 1, cost);
                pairs.push((id, v, c));
            }
        }
    }
    for v in 0..n {
        net.add_arc(1 + k + v, t, 0, 1, 0);
    }
    net.add_arc(t, s, n as i64, n as i64, 0);
    let circ = net.min_cost_circulation()?;
    let mut map = vec![usize::MAX; n];
    for (id, v, c) in pairs {
        if circ.flow[id] == 1 {
            map[v] = c;
        }
    }
    debug_assert!(map.iter().all(|&c| c != usize::MAX));
    Some(Assignment::new(w.to_vec(), map))
}

/// Minimum-sum assignment satisfying the M-criterion.
pub fn assign_monroe_sum(winners: &[usize], matrix: &MisrepMatrix) -> Result<Solution> {
    let w = sorted_winners(winners, matrix.m())?;
    check_monroe_size(w.len(), matrix.n())?;
    let a = monroe_flow(&w, matrix, true, |_, _| true)
        .ok_or_else(|| Error::Internal("balanced flow infeasible with all arcs".into()))?;
    Ok(Solution::from_assignment(a, matrix, Objective::Sum, w.len()))
}

/// A balanced assignment using only pairs with `r(v,c) <= bound`, if any.
pub fn assign_monroe_minimax(winners: &[usize], matrix: &MisrepMatrix, bound: u64) -> Result<Option<Assignment>> {
    let w = sorted_winners(winners, matrix.m())?;
    check_monroe_size(w.len(), matrix.n())?;
    Ok(monroe_flow(&w, matrix, false, |v, c| matrix.get(v, c) <= bound))
}

/// Balanced assignment minimizing the maximum misrepresentation.
pub fn solve_monroe_minimax_fixed(winners: &[usize], matrix: &MisrepMatrix) -> Result<Solution> {
    let w = sorted_winners(winners, matrix.m())?;
    check_monroe_size(w.len(), matrix.n())?;
    let mut vals: Vec<u64> = (0..matrix.n())
        .flat_map(|v| w.iter().map(move |&c| (v, c)))
        .map(|(v, c)| matrix.get(v, c))
        .collect();
    vals.sort_unstable();
    vals.dedup();
    // the largest value admits every arc, so the search always succeeds
    let (mut lo, mut hi) = (0, vals.len() - 1);
    let mut best = None;
    while lo <= hi {
        let mid = (lo + hi) / 2;
        match assign_monroe_minimax(&w, matrix, vals[mid])? {
            Some(a) => {
                best = Some(a);
                if mid == 0 {
                    break;
                }
                hi = mid - 1;
            }
            None => lo = mid + 1,
        }
    }
    let a = best.ok_or_else(|| Error::Internal("minimax search found no assignment".into()))?;
    Ok(Solution::from_assignment(a, matrix, Objective::Minimax, w.len()))
}

/// Optimal Monroe solution for a fixed committee.
pub fn solve_monroe_fixed(winners: &[usize], matrix: &MisrepMatrix, objective: Objective) -> Result<Solution> {
    match objective {
        Objective::Sum => assign_monroe_sum(winners, matrix),
        Objective::Minimax => solve_monroe_minimax_fixed(winners, matrix),
    }
}

/// Lazily yields every balanced map of `n` voters onto `winners`.
pub fn enumerate_balanced_assignments(winners: &[usize], n: usize) -> Result<BalancedAssignments> {
    if n > MAX_ENUM_VOTERS {
        return Err(Error::Budget(format!(
            "balanced assignment enumeration limited to {MAX_ENUM_VOTERS} voters, got {n}"
        )));
    }
    if winners.is_empty() || winners.len() > n {
        return Err(Error::Precondition(format!(
            "{} winners for {n} voters",
            winners.len()
        )));
    }
    let mut w = winners.to_vec();
    w.sort_unstable();
    let k = w.len();
    let (lo, hi) = load_bounds(n, k);
    Ok(BalancedAssignments {
        winners: w,
        lo,
        hi,
        extra: n % k,
        slots: vec![0; n],
        loads: vec![0; k],
        used_extra: 0,
        state: IterState::Fresh,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum IterState {
    Fresh,
    Running,
    Done,
}

/// Iterator returned by [`enumerate_balanced_assignments`].
#[derive(Debug, Clone)]
pub struct BalancedAssignments {
    winners: Vec<usize>,
    lo: usize,
    hi: usize,
    extra: usize,
    slots: Vec<usize>,
    loads: Vec<usize>,
    used_extra: usize,
    state: IterState,
}

impl BalancedAssignments {
    fn can_take(&self, j: usize) -> bool {
        self.loads[j] < self.lo || (self.loads[j] == self.lo && self.hi > self.lo && self.used_extra < self.extra)
    }

    fn take(&mut self, i: usize, j: usize) {
        if self.loads[j] == self.lo && self.hi > self.lo {
            self.used_extra += 1;
        }
        self.loads[j] += 1;
        self.slots[i] = j;
    }

    fn release(&mut self, i: usize) {
        let j = self.slots[i];
        self.loads[j] -= 1;
        if self.loads[j] == self.lo && self.hi > self.lo {
            self.used_extra -= 1;
        }
    }

    // Fills slots from..n with the smallest admissible choices. Any prefix that
    // respects the caps can be completed, so this never gets stuck.
    fn fill_from(&mut self, from: usize) {
        for i in from..self.slots.len() {
            let j = (0..self.winners.len()).find(|&j| self.can_take(j)).unwrap();
            self.take(i, j);
        }
    }

    fn current(&self) -> Assignment {
        Assignment {
            winners: self.winners.clone(),
            map: self.slots.iter().map(|&j| self.winners[j]).collect(),
        }
    }
}

impl Iterator for BalancedAssignments {
    type Item = Assignment;

    fn next(&mut self) -> Option<Assignment> {
        match self.state {
            IterState::Done => return None,
            IterState::Fresh => {
                self.fill_from(0);
                self.state = IterState::Running;
                return Some(self.current());
            }
            IterState::Running => {}
        }
        let n = self.slots.len();
        for i in (0..n).rev() {
            let cur = self.slots[i];
            self.release(i);
            if let Some(j) = (cur + 1..self.winners.len()).find(|&j| self.can_take(j)) {
                self.take(i, j);
                self.fill_from(i + 1);
                return Some(self.current());
            }
        }
        self.state = IterState::Done;
        None
    }
}
