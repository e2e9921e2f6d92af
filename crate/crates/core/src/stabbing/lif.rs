use super::instance::{check_cover, StabbingCover, StabbingInstance};
use crate::error::{Error, Result};

/// Swaps conflicting pairs until the cover has the leftmost-interval-first
/// property with respect to the sorted interval order.
///
/// A pair conflicts when `u_i` sits on line `S`, a later `u_j` sits on a
/// line `S'` with `l(u_i) <= S' < S` and `u_j` reaches `S`. Swapping keeps
/// every line's load, and `sum(index * line)` strictly grows, so the loop
/// ends.
pub fn normalize_lif(inst: &StabbingInstance, cover: &StabbingCover) -> Result<StabbingCover> {
    let before = check_cover(inst, cover)?;
    let ivs = inst.intervals();
    let mut placed: Vec<(usize, usize)> = cover
        .lines
        .iter()
        .flat_map(|(x, g)| g.iter().map(move |&i| (i, *x)))
        .collect();
    loop {
        let mut swapped = false;
        'scan: for p in 0..placed.len() {
            for q in 0..placed.len() {
                let ((i, s), (j, s2)) = (placed[p], placed[q]);
                if j > i && ivs[i].lo <= s2 && s2 < s && ivs[j].hi >= s {
                    placed[p].1 = s2;
                    placed[q].1 = s;
                    swapped = true;
                    break 'scan;
                }
            }
        }
        if !swapped {
            break;
        }
    }
    let mut out = StabbingCover {
        lines: cover.lines.iter().map(|(x, _)| (*x, Vec::new())).collect(),
    };
    for (i, x) in placed {
        let slot = out.lines.iter_mut().find(|(y, _)| *y == x).unwrap();
        slot.1.push(i);
    }
    for (_, g) in &mut out.lines {
        g.sort_unstable();
    }
    let after = check_cover(inst, &out)?;
    if after != before {
        return Err(Error::Internal(format!("normalization changed the count from {before} to {after}")));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::super::instance::Interval;
    use super::*;

    #[test]
    fn swaps_conflicting_pair() {
        let s = StabbingInstance::new(3, 2, vec![Interval::new(1, 3), Interval::new(1, 3)]).unwrap();
        let c = StabbingCover {
            lines: vec![(1, vec![1]), (3, vec![0])],
        };
        let n = normalize_lif(&s, &c).unwrap();
        assert_eq!(n.lines, vec![(1, vec![0]), (3, vec![1])]);
    }
}
