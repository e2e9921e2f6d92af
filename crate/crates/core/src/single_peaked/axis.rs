use crate::election::{Election, MisrepMatrix};

/// A left-to-right ordering of the candidates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SocietalAxis {
    order: Vec<usize>,
    position: Vec<usize>,
}

impl SocietalAxis {
    /// `order` must be a permutation of `0..order.len()`.
    pub fn new(order: Vec<usize>) -> Option<Self> {
        let m = order.len();
        let mut position = vec![usize::MAX; m];
        for (i, &c) in order.iter().enumerate() {
            if c >= m || position[c] != usize::MAX {
                return None;
            }
            position[c] = i;
        }
        Some(SocietalAxis { order, position })
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    /// 0-based position of candidate `c`.
    pub fn position(&self, c: usize) -> usize {
        self.position[c]
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn reversed(&self) -> Self {
        let mut o = self.order.clone();
        o.reverse();
        SocietalAxis::new(o).unwrap()
    }

    /// Mirror image whose first element has the lower candidate index.
    pub fn canonical(self) -> Self {
        match (self.order.first(), self.order.last()) {
            (Some(a), Some(b)) if a > b => self.reversed(),
            _ => self,
        }
    }
}

/// Positions in the vote strictly worsen when moving away from its top
/// along the axis, on both sides.
pub fn check_compatible(vote: &[usize], axis: &SocietalAxis) -> bool {
    let m = vote.len();
    if m != axis.len() {
        return false;
    }
    let mut rank = vec![0; m];
    for (i, &c) in vote.iter().enumerate() {
        rank[c] = i;
    }
    let peak = axis.position(vote[0]);
    let o = axis.order();
    (peak + 1..m).all(|i| rank[o[i - 1]] < rank[o[i]]) && (1..=peak).all(|i| rank[o[i]] < rank[o[i - 1]])
}

/// An axis compatible with every vote, or `None` when the profile is not
/// single-peaked.
///
/// Works from the outside in: the candidates ranked last among the
/// unplaced ones by some voter must sit at the two open ends. Ambiguous
/// placements are resolved by backtracking.
pub fn detect_axis(election: &Election) -> Option<SocietalAxis> {
    let m = election.m();
    let mut st = Placement {
        e: election,
        left: Vec::new(),
        right: Vec::new(),
        placed: vec![false; m],
    };
    if !st.search() {
        return None;
    }
    let mut order = st.left.clone();
    order.extend(st.right.iter().rev());
    let axis = SocietalAxis::new(order).unwrap();
    debug_assert!(election.votes().iter().all(|v| check_compatible(v, &axis)));
    Some(axis.canonical())
}

struct Placement<'a> {
    e: &'a Election,
    left: Vec<usize>,
    right: Vec<usize>,
    placed: Vec<bool>,
}

impl Placement<'_> {
    fn search(&mut self) -> bool {
        let m = self.e.m();
        let remaining = m - self.left.len() - self.right.len();
        if remaining == 0 {
            let mut order = self.left.clone();
            order.extend(self.right.iter().rev());
            let axis = SocietalAxis::new(order).unwrap();
            return self.e.votes().iter().all(|v| check_compatible(v, &axis));
        }
        let mut last: Vec<usize> = Vec::new();
        for vote in self.e.votes() {
            let c = *vote.iter().rev().find(|&&c| !self.placed[c]).unwrap();
            if !last.contains(&c) {
                last.push(c);
            }
        }
        last.sort_unstable();
        match last.len() {
            1 => {
                let c = last[0];
                if self.try_place(&[c], &[]) {
                    return true;
                }
                // mirror placements at the very start are equivalent
                !self.left.is_empty() && self.try_place(&[], &[c])
            }
            2 => {
                let (a, b) = (last[0], last[1]);
                self.try_place(&[a], &[b]) || self.try_place(&[b], &[a])
            }
            _ => false,
        }
    }

    fn try_place(&mut self, l: &[usize], r: &[usize]) -> bool {
        for &c in l.iter().chain(r) {
            self.placed[c] = true;
        }
        self.left.extend_from_slice(l);
        self.right.extend_from_slice(r);
        let ok = self.consistent() && self.search();
        if !ok {
            for &c in l.iter().chain(r) {
                self.placed[c] = false;
            }
            self.left.truncate(self.left.len() - l.len());
            self.right.truncate(self.right.len() - r.len());
        }
        ok
    }

    // Every vote restricted to the placed candidates plus its favourite
    // unplaced one must fit the partial axis.
    fn consistent(&self) -> bool {
        let mut seq = self.left.clone();
        let mid = seq.len();
        seq.push(usize::MAX);
        seq.extend(self.right.iter().rev());
        let remaining = self.placed.iter().filter(|&&p| !p).count();
        for (v, vote) in self.e.votes().iter().enumerate() {
            let fav = if remaining > 0 {
                *vote.iter().find(|&&c| !self.placed[c]).unwrap()
            } else {
                usize::MAX
            };
            let rank = |c: usize| if c == usize::MAX { usize::MAX } else { self.e.pos(v, c) };
            let mut s = seq.clone();
            if fav == usize::MAX {
                s.remove(mid);
            } else {
                s[mid] = fav;
            }
            let top = (0..s.len()).min_by_key(|&i| rank(s[i])).unwrap();
            if !(top + 1..s.len()).all(|i| rank(s[i - 1]) < rank(s[i])) || !(1..=top).all(|i| rank(s[i]) < rank(s[i - 1])) {
                return false;
            }
        }
        true
    }
}

/// Every row is weakly decreasing then weakly increasing along the axis.
pub fn check_single_troughed(matrix: &MisrepMatrix, axis: &SocietalAxis) -> bool {
    if matrix.m() != axis.len() {
        return false;
    }
    (0..matrix.n()).all(|v| {
        let mut rising = false;
        for w in axis.order().windows(2) {
            let (a, b) = (matrix.get(v, w[0]), matrix.get(v, w[1]));
            if a < b {
                rising = true;
            } else if a > b && rising {
                return false;
            }
        }
        true
    })
}

/// Axis positions (1-based, inclusive) of the candidates within the bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RepresentationInterval {
    pub voter: usize,
    pub lo: usize,
    pub hi: usize,
}

/// The contiguous range of candidates representing `voter` within `bound`.
///
/// `Ok(None)` when no candidate qualifies; an error when the range is not
/// contiguous (the row is not single-troughed).
pub fn representation_interval(
    voter: usize,
    matrix: &MisrepMatrix,
    axis: &SocietalAxis,
    bound: u64,
) -> crate::error::Result<Option<RepresentationInterval>> {
    let inside: Vec<usize> = (0..axis.len())
        .filter(|&i| matrix.get(voter, axis.order()[i]) <= bound)
        .collect();
    let (Some(&lo), Some(&hi)) = (inside.first(), inside.last()) else {
        return Ok(None);
    };
    if hi - lo + 1 != inside.len() {
        return Err(crate::error::Error::Precondition(format!(
            "voter {voter}: candidates within {bound} are not contiguous on the axis"
        )));
    }
    Ok(Some(RepresentationInterval {
        voter,
        lo: lo + 1,
        hi: hi + 1,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::election::{build_misrep, MisrepSpec};
    use crate::fixtures::four_by_three;

    fn line(m: usize) -> SocietalAxis {
        SocietalAxis::new((0..m).collect()).unwrap()
    }

    #[test]
    fn compatibility() {
        assert!(check_compatible(&[1, 2, 3, 0], &line(4)));
        assert!(!check_compatible(&[0, 2, 1, 3], &line(4)));
        assert!(check_compatible(&[1, 0], &line(2)));
    }

    #[test]
    fn detects_small_profile_axis() {
        let a = detect_axis(&four_by_three()).unwrap();
        assert_eq!(a.order(), &[0, 1, 2, 3]);
    }

    #[test]
    fn cyclic_profile_has_no_axis() {
        let e = Election::from_votes(3, vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]]).unwrap();
        assert!(detect_axis(&e).is_none());
    }

    #[test]
    fn single_voter_axis() {
        let e = Election::from_votes(5, vec![vec![3, 1, 4, 0, 2]]).unwrap();
        let a = detect_axis(&e).unwrap();
        assert!(check_compatible(e.vote(0), &a));
    }

    #[test]
    fn troughs() {
        let e = four_by_three();
        let r = build_misrep(&e, &MisrepSpec::Borda).unwrap();
        assert!(check_single_troughed(&r, &line(4)));
        let bad = MisrepMatrix::from_rows(&[vec![1, 0, 1, 0]]).unwrap();
        assert!(!check_single_troughed(&bad, &line(4)));
        let block = MisrepMatrix::from_rows(&[vec![1, 0, 0, 1], vec![0, 0, 1, 1]]).unwrap();
        assert!(check_single_troughed(&block, &line(4)));
    }

    #[test]
    fn intervals() {
        let e = four_by_three();
        let r = build_misrep(&e, &MisrepSpec::Borda).unwrap();
        let iv = representation_interval(0, &r, &line(4), 1).unwrap().unwrap();
        assert_eq!((iv.lo, iv.hi), (1, 2));
        let iv = representation_interval(1, &r, &line(4), 3).unwrap().unwrap();
        assert_eq!((iv.lo, iv.hi), (1, 4));
        let none = MisrepMatrix::from_rows(&[vec![1, 1, 1]]).unwrap();
        assert!(representation_interval(0, &none, &line(3), 0).unwrap().is_none());
    }
}
