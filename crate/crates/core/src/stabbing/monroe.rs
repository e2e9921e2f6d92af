use super::dp::solve_max_bal_1rs;
use super::instance::{check_cover, Interval, StabbingCover, StabbingInstance};
use crate::election::MisrepMatrix;
use crate::error::{Error, Result};
use crate::exact::pad_winners;
use crate::instance::{Objective, ProblemInstance, Rule};
use crate::single_peaked::{check_single_troughed, representation_interval, SocietalAxis};
use crate::solution::{Assignment, Solution};

/// Stabbing instance built from the zero entries of a binary Monroe matrix.
#[derive(Debug, Clone)]
pub struct MonroeReduction {
    pub stabbing: StabbingInstance,
    /// Voter behind each input interval. Voters with no zero entry have none.
    pub voters: Vec<usize>,
}

impl MonroeReduction {
    /// Voter for the interval at sorted position `i`.
    pub fn voter_of(&self, i: usize) -> usize {
        self.voters[self.stabbing.source(i)]
    }
}

/// One interval per voter, spanning the candidates that represent them at
/// zero cost. Capacities use the full electorate size.
pub fn reduce_m_mw_sp(instance: &ProblemInstance, axis: &SocietalAxis) -> Result<MonroeReduction> {
    reduce_matrix(&instance.matrix, instance.k, axis)
}

fn reduce_matrix(matrix: &MisrepMatrix, k: usize, axis: &SocietalAxis) -> Result<MonroeReduction> {
    if !matrix.is_binary() {
        return Err(Error::Precondition("stabbing reduction needs a 0/1 matrix".into()));
    }
    if !check_single_troughed(matrix, axis) {
        return Err(Error::Precondition("matrix is not single-troughed on the axis".into()));
    }
    let mut intervals = Vec::new();
    let mut voters = Vec::new();
    for v in 0..matrix.n() {
        if let Some(iv) = representation_interval(v, matrix, axis, 0)? {
            intervals.push(Interval::new(iv.lo, iv.hi));
            voters.push(v);
        }
    }
    let stabbing = StabbingInstance::with_population(axis.len(), k, matrix.n(), intervals)?;
    Ok(MonroeReduction { stabbing, voters })
}

/// Turns a stabbing cover into a balanced Monroe assignment: covered voters
/// go to their line's candidate, the rest fill the remaining capacity in
/// voter order.
pub fn complete_assignment(
    instance: &ProblemInstance,
    axis: &SocietalAxis,
    reduction: &MonroeReduction,
    cover: &StabbingCover,
) -> Result<Solution> {
    check_cover(&reduction.stabbing, cover)?;
    let (n, m, k) = (instance.n(), instance.m(), instance.k);
    let lines: Vec<usize> = cover
        .lines
        .iter()
        .filter(|(_, g)| !g.is_empty())
        .map(|(x, _)| axis.order()[x - 1])
        .collect();
    let winners = pad_winners(&lines, k, m);

    let mut map = vec![usize::MAX; n];
    let mut load = vec![0usize; m];
    for (x, group) in &cover.lines {
        let c = axis.order()[x - 1];
        for &i in group {
            map[reduction.voter_of(i)] = c;
            load[c] += 1;
        }
    }

    let (capc, capf) = reduction.stabbing.caps();
    let (kc, _) = reduction.stabbing.line_counts();
    let mut large: Vec<usize> = winners.iter().copied().filter(|&w| load[w] > capf).collect();
    let mut rest: Vec<usize> = winners.iter().copied().filter(|&w| load[w] <= capf).collect();
    rest.sort_by_key(|&w| (std::cmp::Reverse(load[w]), w));
    large.extend(rest.into_iter().take(kc.saturating_sub(large.len())));
    let target = |w: usize| if large.contains(&w) { capc } else { capf };

    for slot in map.iter_mut() {
        if *slot != usize::MAX {
            continue;
        }
        let w = winners
            .iter()
            .copied()
            .find(|&w| load[w] < target(w))
            .ok_or_else(|| Error::Internal("no capacity left for an unrepresented voter".into()))?;
        *slot = w;
        load[w] += 1;
    }
    Ok(Solution::from_assignment(
        Assignment::new(winners, map),
        &instance.matrix,
        instance.objective,
        k,
    ))
}

/// Monroe sum optimum for a 0/1 matrix that is single-troughed on `axis`.
pub fn solve_monroe_sum_sp(instance: &ProblemInstance, axis: &SocietalAxis) -> Result<Solution> {
    if instance.rule != Rule::Monroe || instance.objective != Objective::Sum {
        return Err(Error::Precondition("stabbing optimizer handles monroe/sum".into()));
    }
    let red = reduce_m_mw_sp(instance, axis)?;
    let (covered, cover) = solve_max_bal_1rs(&red.stabbing)?;
    let sol = complete_assignment(instance, axis, &red, &cover)?;
    if sol.value != (instance.n() - covered) as u64 {
        return Err(Error::Internal(format!(
            "{covered} voters stabbed but assignment costs {}",
            sol.value
        )));
    }
    Ok(sol)
}

/// Monroe assignment in which every voter gets a candidate within `bound`,
/// found by stabbing the thresholded matrix. Evaluated under the
/// instance's own objective.
pub fn decide_monroe_threshold_sp(instance: &ProblemInstance, axis: &SocietalAxis, bound: u64) -> Result<Option<Solution>> {
    if instance.rule != Rule::Monroe {
        return Err(Error::Precondition("threshold stabbing handles monroe".into()));
    }
    if !check_single_troughed(&instance.matrix, axis) {
        return Err(Error::Precondition("matrix is not single-troughed on the axis".into()));
    }
    let red = reduce_matrix(&instance.matrix.threshold(bound), instance.k, axis)?;
    if red.voters.len() < instance.n() {
        return Ok(None);
    }
    let (covered, cover) = solve_max_bal_1rs(&red.stabbing)?;
    if covered < instance.n() {
        return Ok(None);
    }
    complete_assignment(instance, axis, &red, &cover).map(Some)
}

/// Monroe minimax decision at `instance.bound`.
pub fn solve_minimax_m_mw_sp(instance: &ProblemInstance, axis: &SocietalAxis) -> Result<Option<Solution>> {
    if instance.objective != Objective::Minimax {
        return Err(Error::Precondition("expected the minimax objective".into()));
    }
    decide_monroe_threshold_sp(instance, axis, instance.bound)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::election::{Election, MisrepSpec};
    use crate::exact::solve_subset_enum;

    fn approval(k: usize) -> ProblemInstance {
        // axis a b c d; approvals are prefixes of votes
        let e = Election::from_votes(
            4,
            vec![vec![0, 1, 2, 3], vec![1, 0, 2, 3], vec![1, 2, 0, 3], vec![3, 2, 1, 0], vec![2, 3, 1, 0]],
        )
        .unwrap();
        let spec = MisrepSpec::Approval(vec![vec![0], vec![1, 0], vec![1], vec![3], vec![2, 3]]);
        ProblemInstance::from_spec(e, &spec, Rule::Monroe, Objective::Sum, k, 0).unwrap()
    }

    #[test]
    fn matches_enumeration() {
        let axis = SocietalAxis::new(vec![0, 1, 2, 3]).unwrap();
        for k in 1..=4 {
            let i = approval(k);
            let s = solve_monroe_sum_sp(&i, &axis).unwrap();
            assert_eq!(s.value, solve_subset_enum(&i).unwrap().value, "k = {k}");
            assert!(s.m_criterion);
        }
    }

    #[test]
    fn threshold_minimax() {
        let e = crate::fixtures::four_by_three();
        let axis = SocietalAxis::new(vec![0, 1, 2, 3]).unwrap();
        for k in 1..=3 {
            let i = ProblemInstance::from_spec(e.clone(), &MisrepSpec::Borda, Rule::Monroe, Objective::Minimax, k, 0).unwrap();
            let opt = solve_subset_enum(&i).unwrap().value;
            for r in 0..4 {
                let got = solve_minimax_m_mw_sp(&i.with_bound(r), &axis).unwrap();
                assert_eq!(got.is_some(), opt <= r, "k = {k}, r = {r}");
                if let Some(s) = got {
                    assert!(s.value <= r);
                }
            }
        }
    }
}
