use super::axis::{check_single_troughed, SocietalAxis};
use crate::assignment::solve_cc_fixed;
use crate::error::{Error, Result};
use crate::instance::{Objective, ProblemInstance, Rule};
use crate::solution::Solution;

/// Work counters for the dynamic program.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct DpStats {
    /// Elementary table updates: one per voter term summed into a base or
    /// improvement entry, one per candidate predecessor examined.
    pub cell_updates: u64,
}

/// CC sum optimum for a matrix that is single-troughed on `axis`.
pub fn solve_cc_sum_sp(instance: &ProblemInstance, axis: &SocietalAxis) -> Result<Solution> {
    Ok(solve_cc_sum_sp_with_stats(instance, axis)?.0)
}

#[allow(clippy::needless_range_loop)]
pub fn solve_cc_sum_sp_with_stats(instance: &ProblemInstance, axis: &SocietalAxis) -> Result<(Solution, DpStats)> {
    if instance.rule != Rule::Cc || instance.objective != Objective::Sum {
        return Err(Error::Precondition("dynamic program handles cc/sum".into()));
    }
    let r = &instance.matrix;
    if !check_single_troughed(r, axis) {
        return Err(Error::Precondition("matrix is not single-troughed on the axis".into()));
    }
    let (n, m, k) = (instance.n(), instance.m(), instance.k);
    let col = |i: usize| axis.order()[i];
    let mut stats = DpStats::default();

    // d[p][i] for p < i: total improvement when c_i joins a set whose
    // rightmost member is c_p
    let mut d = vec![vec![0i64; m]; m];
    for i in 0..m {
        for p in 0..i {
            let mut s = 0i64;
            for v in 0..n {
                let (a, b) = (r.get(v, col(p)) as i64, r.get(v, col(i)) as i64);
                s += (a - b).max(0);
            }
            stats.cell_updates += n as u64;
            d[p][i] = s;
        }
    }

    const INF: i64 = i64::MAX / 4;
    // z[j][i]: best total with j winners, the rightmost being c_i
    let mut z = vec![vec![INF; m]; k + 1];
    let mut back = vec![vec![usize::MAX; m]; k + 1];
    for i in 0..m {
        z[1][i] = (0..n).map(|v| r.get(v, col(i)) as i64).sum();
        stats.cell_updates += n as u64;
    }
    for j in 2..=k {
        for i in (j - 1)..m {
            for p in (j - 2)..i {
                stats.cell_updates += 1;
                let cand = z[j - 1][p] - d[p][i];
                if cand < z[j][i] {
                    z[j][i] = cand;
                    back[j][i] = p;
                }
            }
        }
    }
    let (best_i, best) = ((k - 1)..m)
        .map(|i| (i, z[k][i]))
        .min_by_key(|&(i, v)| (v, i))
        .ok_or_else(|| Error::Internal("empty table".into()))?;

    let mut winners = Vec::with_capacity(k);
    let mut i = best_i;
    for j in (1..=k).rev() {
        winners.push(col(i));
        if j > 1 {
            i = back[j][i];
        }
    }
    let sol = solve_cc_fixed(&winners, r, Objective::Sum)?;
    if sol.value as i64 != best {
        return Err(Error::Internal(format!(
            "table optimum {best} but committee evaluates to {}",
            sol.value
        )));
    }
    Ok((sol, stats))
}
