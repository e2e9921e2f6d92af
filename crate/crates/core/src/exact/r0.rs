use super::cc_witness;
use crate::error::{Error, Result};
use crate::instance::{Objective, ProblemInstance, Rule};
use crate::solution::{check_m_criterion, Assignment, Solution};

/// Minimax decision at bound 0 for Borda-like matrices: every voter must
/// get their unique top candidate.
pub fn solve_minimax_r0(instance: &ProblemInstance) -> Result<Option<Solution>> {
    if instance.objective != Objective::Minimax || instance.bound != 0 {
        return Err(Error::Precondition("bound-zero solver needs the minimax objective and bound 0".into()));
    }
    if !instance.matrix.is_borda_like() {
        return Err(Error::Precondition("matrix rows must be Borda rankings".into()));
    }
    let r = &instance.matrix;
    let map: Vec<usize> = (0..instance.n())
        .map(|v| (0..instance.m()).find(|&c| r.get(v, c) == 0).unwrap())
        .collect();
    let mut tops = map.clone();
    tops.sort_unstable();
    tops.dedup();
    let k = instance.k;
    match instance.rule {
        Rule::Cc => {
            if tops.len() > k {
                return Ok(None);
            }
            Ok(Some(cc_witness(instance, &tops)?))
        }
        Rule::Monroe => {
            let a = Assignment::new(tops, map);
            if !check_m_criterion(&a, k, instance.n()) {
                return Ok(None);
            }
            Ok(Some(Solution::from_assignment(a, r, Objective::Minimax, k)))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::election::MisrepSpec;
    use crate::fixtures::{four_by_three, six_voters};

    #[test]
    fn examples() {
        let i = ProblemInstance::from_spec(four_by_three(), &MisrepSpec::Borda, Rule::Cc, Objective::Minimax, 3, 0).unwrap();
        assert_eq!(solve_minimax_r0(&i).unwrap().unwrap().winners(), &[0, 1, 2]);
        let i = ProblemInstance::from_spec(four_by_three(), &MisrepSpec::Borda, Rule::Cc, Objective::Minimax, 2, 0).unwrap();
        assert!(solve_minimax_r0(&i).unwrap().is_none());
        let i = ProblemInstance::from_spec(six_voters(), &MisrepSpec::Borda, Rule::Monroe, Objective::Minimax, 3, 0).unwrap();
        assert!(solve_minimax_r0(&i).unwrap().is_none());
    }
}
