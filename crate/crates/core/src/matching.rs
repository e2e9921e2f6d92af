//! Bipartite matching helpers used by partition enumeration.

/// Minimum-cost assignment of every row to a distinct column (rows <= cols).
/// Returns the total cost and the column chosen for each row.
///
/// Maximizing `T - cost` with `T` larger than any row cost is the same
/// problem, so this also serves the max-weight formulation.
pub fn min_cost_assignment(cost: &[Vec<i64>]) -> Option<(i64, Vec<usize>)> {
    let rows = cost.len();
    if rows == 0 {
        return Some((0, Vec::new()));
    }
    let cols = cost[0].len();
    if rows > cols {
        return None;
    }
    let inf = i64::MAX / 4;
    // 1-based potentials, e-maxx style
    let mut u = vec![0i64; rows + 1];
    let mut v = vec![0i64; cols + 1];
    let mut p = vec![0usize; cols + 1];
    let mut way = vec![0usize; cols + 1];
    for i in 1..=rows {
        p[0] = i;
        let mut j0 = 0;
        let mut minv = vec![inf; cols + 1];
        let mut used = vec![false; cols + 1];
        loop {
            used[j0] = true;
            let i0 = p[j0];
            let mut delta = inf;
            let mut j1 = 0;
            for j in 1..=cols {
                if !used[j] {
                    let cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
                    if cur < minv[j] {
                        minv[j] = cur;
                        way[j] = j0;
                    }
                    if minv[j] < delta {
                        delta = minv[j];
                        j1 = j;
                    }
                }
            }
            for j in 0..=cols {
                if used[j] {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
            if p[j0] == 0 {
                break;
            }
        }
        loop {
            let j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
            if j0 == 0 {
                break;
            }
        }
    }
    let mut assign = vec![0usize; rows];
    for j in 1..=cols {
        if p[j] != 0 {
            assign[p[j] - 1] = j - 1;
        }
    }
    let total = assign.iter().enumerate().map(|(i, &j)| cost[i][j]).sum();
    Some((total, assign))
}

/// Kuhn's augmenting paths: a matching saturating every row, if one exists.
pub fn perfect_row_matching(rows: usize, cols: usize, allowed: impl Fn(usize, usize) -> bool) -> Option<Vec<usize>> {
    let mut owner: Vec<Option<usize>> = vec![None; cols];
    for r in 0..rows {
        let mut seen = vec![false; cols];
        if !augment(r, cols, &allowed, &mut owner, &mut seen) {
            return None;
        }
    }
    let mut assign = vec![0; rows];
    for (c, o) in owner.iter().enumerate() {
        if let Some(r) = o {
            assign[*r] = c;
        }
    }
    Some(assign)
}

fn augment(
    r: usize,
    cols: usize,
    allowed: &impl Fn(usize, usize) -> bool,
    owner: &mut [Option<usize>],
    seen: &mut [bool],
) -> bool {
    for c in 0..cols {
        if allowed(r, c) && !seen[c] {
            seen[c] = true;
            if owner[c].is_none() || augment(owner[c].unwrap(), cols, allowed, owner, seen) {
                owner[c] = Some(r);
                return true;
            }
        }
    }
    false
}
