use super::axis::{check_single_troughed, representation_interval, SocietalAxis};
use crate::error::{Error, Result};
use crate::exact::cc_witness;
use crate::instance::{Objective, ProblemInstance, Rule};
use crate::solution::Solution;

/// CC minimax decision at `instance.bound` by stabbing representation
/// intervals greedily at their right ends.
pub fn solve_cc_minimax_sp(instance: &ProblemInstance, axis: &SocietalAxis) -> Result<Option<Solution>> {
    if instance.rule != Rule::Cc || instance.objective != Objective::Minimax {
        return Err(Error::Precondition("greedy stabbing handles cc/minimax".into()));
    }
    let r = &instance.matrix;
    if !check_single_troughed(r, axis) {
        return Err(Error::Precondition("matrix is not single-troughed on the axis".into()));
    }
    let mut ivs = Vec::with_capacity(instance.n());
    for v in 0..instance.n() {
        match representation_interval(v, r, axis, instance.bound)? {
            Some(iv) => ivs.push(iv),
            None => return Ok(None),
        }
    }
    ivs.sort_by_key(|iv| (iv.hi, iv.lo, iv.voter));
    let mut points: Vec<usize> = Vec::new();
    for iv in &ivs {
        let stabbed = points.last().is_some_and(|&p| iv.lo <= p);
        if !stabbed {
            points.push(iv.hi);
            if points.len() > instance.k {
                return Ok(None);
            }
        }
    }
    let winners: Vec<usize> = points.iter().map(|&p| axis.order()[p - 1]).collect();
    let sol = cc_witness(instance, &winners)?;
    debug_assert!(sol.value <= instance.bound);
    Ok(Some(sol))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::election::MisrepSpec;
    use crate::fixtures::four_by_three;

    fn inst(k: usize, bound: u64) -> ProblemInstance {
        ProblemInstance::from_spec(four_by_three(), &MisrepSpec::Borda, Rule::Cc, Objective::Minimax, k, bound).unwrap()
    }

    #[test]
    fn examples() {
        let axis = SocietalAxis::new(vec![0, 1, 2, 3]).unwrap();
        let s = solve_cc_minimax_sp(&inst(1, 1), &axis).unwrap().unwrap();
        assert_eq!(s.winners(), &[1]);
        assert!(solve_cc_minimax_sp(&inst(2, 0), &axis).unwrap().is_none());
        assert!(solve_cc_minimax_sp(&inst(1, 3), &axis).unwrap().is_some());
    }
}
