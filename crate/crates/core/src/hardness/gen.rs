use super::sets::{HittingSetInstance, RX3CInstance};
use crate::election::{default_names, Election, MisrepSpec};
use crate::error::{Error, Result};
use crate::instance::{Objective, ProblemInstance, Rule};
use crate::single_peaked::SocietalAxis;
use crate::solution::Assignment;

/// Size caps for [`gen_hs_borda`], applied to the family size, universe and
/// budget separately.
pub const HS_BORDA_CAP: usize = 4;

fn rest_ascending(m: usize, first: &[usize]) -> impl Iterator<Item = usize> + '_ {
    (0..m).filter(move |c| !first.contains(c))
}

/// Approval election whose optimum is 0 exactly when the family has a
/// hitting set of size `k`. One candidate per element; one voter per set
/// plus `n(k-1)` dummy voters approving everyone.
pub fn gen_hs_approval(hs: &HittingSetInstance, rule: Rule, objective: Objective) -> Result<ProblemInstance> {
    let (m, k) = (hs.universe(), hs.k());
    let mut votes = Vec::new();
    let mut approvals = Vec::new();
    for f in hs.sets() {
        let mut v = f.clone();
        v.extend(rest_ascending(m, f));
        votes.push(v);
        approvals.push(f.clone());
    }
    for _ in 0..hs.sets().len() * (k - 1) {
        votes.push((0..m).collect());
        approvals.push((0..m).collect());
    }
    let e = Election::new(default_names(m), votes)?;
    ProblemInstance::from_spec(e, &MisrepSpec::Approval(approvals), rule, objective, k, 0)
}

/// Borda election with `n*k` blocks of `z = n*m*k` blocker candidates.
///
/// Bound is `z` for the sum objective and `m - 1` for minimax.
pub fn gen_hs_borda(hs: &HittingSetInstance, rule: Rule, objective: Objective) -> Result<ProblemInstance> {
    let (n, m, k) = (hs.sets().len(), hs.universe(), hs.k());
    if n > HS_BORDA_CAP || m > HS_BORDA_CAP || k > HS_BORDA_CAP {
        return Err(Error::Budget(format!(
            "blocker construction needs n, m, k <= {HS_BORDA_CAP} (it adds n^2*m*k^2 candidates)"
        )));
    }
    let z = n * m * k;
    let blocks = n * k;
    let block = |i: usize| (0..z).map(move |j| m + i * z + j);
    let others = |i: usize| (0..blocks).filter(move |&b| b != i).flat_map(block);

    let mut names = default_names(m);
    for i in 0..blocks {
        for j in 0..z {
            names.push(format!("b{}_{}", i + 1, j + 1));
        }
    }
    let mut votes = Vec::new();
    for (i, f) in hs.sets().iter().enumerate() {
        let mut v = f.clone();
        v.extend(block(i));
        v.extend(rest_ascending(m, f));
        v.extend(others(i));
        votes.push(v);
    }
    for d in 0..n * (k - 1) {
        let mut v: Vec<usize> = (0..m).collect();
        v.extend(block(n + d));
        v.extend(others(n + d));
        votes.push(v);
    }
    let bound = match objective {
        Objective::Sum => z as u64,
        Objective::Minimax => m as u64 - 1,
    };
    let e = Election::new(names, votes)?;
    ProblemInstance::from_spec(e, &MisrepSpec::Borda, rule, objective, k, bound)
}

/// Borda minimax election from a vertex cover instance (two-element sets,
/// element frequency at most 3). Each edge voter ranks `bound - 1` private
/// padding candidates first, then its two endpoints, then the remaining
/// vertices and finally every other padding candidate.
pub fn gen_vc_minimax(hs: &HittingSetInstance, rule: Rule, bound: u64) -> Result<ProblemInstance> {
    if !hs.is_cubic_vertex_cover() {
        return Err(Error::Precondition("sets must be pairs and elements may occur at most three times".into()));
    }
    if bound == 0 {
        return Err(Error::Precondition("bound must be at least 1".into()));
    }
    let (m, n) = (hs.universe(), hs.sets().len());
    let pad = bound as usize - 1;
    let mut names = default_names(m);
    for v in 0..n {
        for t in 0..pad {
            names.push(format!("p{}_{}", v + 1, t + 1));
        }
    }
    let own = |v: usize| (0..pad).map(move |t| m + v * pad + t);
    let mut votes = Vec::new();
    for (v, f) in hs.sets().iter().enumerate() {
        let mut vote: Vec<usize> = own(v).collect();
        vote.extend_from_slice(f);
        vote.extend(rest_ascending(m, f));
        vote.extend((0..n).filter(|&w| w != v).flat_map(own));
        votes.push(vote);
    }
    let e = Election::new(names, votes)?;
    ProblemInstance::from_spec(e, &MisrepSpec::Borda, rule, Objective::Minimax, hs.k(), bound)
}

/// Single-peaked Monroe sum election whose optimum is at most `2n^2`
/// exactly when the instance has an exact cover. Candidates are the
/// elements `e1..en` followed by the sets `s1..sn`; voters are `v_i^x` for
/// each element and occurrence, then one `f_i` per element.
pub fn gen_rx3c_monroe(x: &RX3CInstance) -> Result<(ProblemInstance, SocietalAxis)> {
    let n = x.n();
    let big = 2 * (n * n) as u64 + 1;
    let mut rows = Vec::with_capacity(4 * n);
    for i in 0..n {
        for occ in 0..3 {
            let mut row = vec![0u64; 2 * n];
            for (z, x) in row[..n].iter_mut().enumerate() {
                *x = if z <= i { (i + z + 1) as u64 } else { big };
            }
            let hit = x.occurrence(i, occ);
            for j in 0..n {
                row[n + j] = u64::from(j != hit);
            }
            rows.push(row);
        }
    }
    for i in 0..n {
        let mut row = vec![big; 2 * n];
        row[i] = 0;
        rows.push(row);
    }
    let axis = SocietalAxis::new((n..2 * n).chain(0..n).collect()).unwrap();
    let votes = rows.iter().map(|r| vote_from_trough(r, &axis)).collect();
    let mut names: Vec<String> = (1..=n).map(|i| format!("e{i}")).collect();
    names.extend((1..=n).map(|j| format!("s{j}")));
    let e = Election::new(names, votes)?;
    let inst = ProblemInstance::from_spec(
        e,
        &MisrepSpec::Explicit(rows),
        Rule::Monroe,
        Objective::Sum,
        n / 3 + n,
        2 * (n * n) as u64,
    )?;
    Ok((inst, axis))
}

/// The assignment built from a known exact cover (set indices).
pub fn rx3c_cover_assignment(x: &RX3CInstance, cover: &[usize]) -> Assignment {
    let n = x.n();
    let mut winners: Vec<usize> = (0..n).collect();
    winners.extend(cover.iter().map(|&j| n + j));
    let mut map = Vec::with_capacity(4 * n);
    for i in 0..n {
        for occ in 0..3 {
            let j = x.occurrence(i, occ);
            map.push(if cover.contains(&j) { n + j } else { i });
        }
    }
    map.extend(0..n);
    Assignment::new(winners, map)
}

/// Vote grown outward from the leftmost minimum of a single-troughed row,
/// taking the cheaper side first and the left side on ties.
pub fn vote_from_trough(row: &[u64], axis: &SocietalAxis) -> Vec<usize> {
    let o = axis.order();
    let val = |p: usize| row[o[p]];
    let peak = (0..o.len()).min_by_key(|&p| (val(p), p)).unwrap_or(0);
    let mut vote = vec![o[peak]];
    let (mut l, mut r) = (peak, peak + 1);
    while vote.len() < o.len() {
        let take_left = l > 0 && (r >= o.len() || val(l - 1) <= val(r));
        if take_left {
            l -= 1;
            vote.push(o[l]);
        } else {
            vote.push(o[r]);
            r += 1;
        }
    }
    vote
}
