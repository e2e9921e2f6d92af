use crate::error::{Error, Result};
use crate::matching::perfect_row_matching;

/// Closed interval of line coordinates, 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Interval {
    pub lo: usize,
    pub hi: usize,
}

impl Interval {
    pub fn new(lo: usize, hi: usize) -> Self {
        Interval { lo, hi }
    }

    pub fn contains(&self, x: usize) -> bool {
        self.lo <= x && x <= self.hi
    }
}

/// Balanced capacitated stabbing with vertical lines at `1..=m`.
///
/// Capacities come from `population` (the number of voters in the Monroe
/// reduction, which may exceed the number of intervals): `n mod k` lines may
/// take `ceil(n/k)` intervals, the rest `floor(n/k)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StabbingInstance {
    m: usize,
    k: usize,
    population: usize,
    // sorted by lo, ties by input order
    intervals: Vec<Interval>,
    source: Vec<usize>,
}

impl StabbingInstance {
    pub fn new(m: usize, k: usize, intervals: Vec<Interval>) -> Result<Self> {
        let p = intervals.len();
        Self::with_population(m, k, p, intervals)
    }

    pub fn with_population(m: usize, k: usize, population: usize, intervals: Vec<Interval>) -> Result<Self> {
        if m == 0 || k == 0 {
            return Err(Error::Precondition("need m >= 1 and k >= 1".into()));
        }
        if population < intervals.len() {
            return Err(Error::Precondition(format!(
                "population {population} smaller than {} intervals",
                intervals.len()
            )));
        }
        for (i, iv) in intervals.iter().enumerate() {
            if iv.lo == 0 || iv.lo > iv.hi || iv.hi > m {
                return Err(Error::Precondition(format!(
                    "interval {i} = [{}, {}] is not inside [1, {m}]",
                    iv.lo, iv.hi
                )));
            }
        }
        let mut source: Vec<usize> = (0..intervals.len()).collect();
        source.sort_by_key(|&i| intervals[i].lo);
        let sorted = source.iter().map(|&i| intervals[i]).collect();
        Ok(StabbingInstance {
            m,
            k,
            population,
            intervals: sorted,
            source,
        })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn population(&self) -> usize {
        self.population
    }

    /// Intervals in normalized (sorted) order.
    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    /// Input position of the interval at sorted position `i`.
    pub fn source(&self, i: usize) -> usize {
        self.source[i]
    }

    /// `(ceil(n/k), floor(n/k))`.
    pub fn caps(&self) -> (usize, usize) {
        (self.population.div_ceil(self.k), self.population / self.k)
    }

    /// `(k_c, k_f)`: lines allowed the larger capacity, and the rest.
    pub fn line_counts(&self) -> (usize, usize) {
        let kc = self.population % self.k;
        (kc, self.k - kc)
    }
}

/// Chosen lines with the intervals (sorted positions) assigned to each.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct StabbingCover {
    pub lines: Vec<(usize, Vec<usize>)>,
}

impl StabbingCover {
    pub fn covered(&self) -> usize {
        self.lines.iter().map(|(_, a)| a.len()).sum()
    }
}

/// Validates a cover and returns its size.
pub fn check_cover(inst: &StabbingInstance, cover: &StabbingCover) -> Result<usize> {
    let (capc, capf) = inst.caps();
    let (kc, _) = inst.line_counts();
    if cover.lines.len() > inst.k() {
        return Err(Error::Internal(format!("{} lines for k = {}", cover.lines.len(), inst.k())));
    }
    let mut seen = vec![false; inst.intervals().len()];
    let mut lines_seen = Vec::new();
    let mut full = 0;
    for (x, assigned) in &cover.lines {
        if *x == 0 || *x > inst.m() || lines_seen.contains(x) {
            return Err(Error::Internal(format!("bad or repeated line {x}")));
        }
        lines_seen.push(*x);
        if assigned.len() > capc {
            return Err(Error::Internal(format!("line {x} carries {} > {capc}", assigned.len())));
        }
        if assigned.len() > capf {
            full += 1;
        }
        for &i in assigned {
            if i >= seen.len() || seen[i] || !inst.intervals()[i].contains(*x) {
                return Err(Error::Internal(format!("interval {i} cannot be assigned to line {x}")));
            }
            seen[i] = true;
        }
    }
    if full > kc {
        return Err(Error::Internal(format!("{full} lines above the small capacity, at most {kc} allowed")));
    }
    Ok(cover.covered())
}

/// Guards for [`brute_force_stabbing`].
pub const BRUTE_MAX_INTERVALS: usize = 8;
pub const BRUTE_MAX_LINES: usize = 6;

/// Exhaustive optimum over line subsets, capacity types and assignments.
pub fn brute_force_stabbing(inst: &StabbingInstance) -> Result<usize> {
    let ivs = inst.intervals();
    if ivs.len() > BRUTE_MAX_INTERVALS || inst.m() > BRUTE_MAX_LINES {
        return Err(Error::Budget(format!(
            "brute force limited to {BRUTE_MAX_INTERVALS} intervals and {BRUTE_MAX_LINES} lines"
        )));
    }
    if ivs.is_empty() {
        return Ok(0);
    }
    let (capc, capf) = inst.caps();
    let (kc, kf) = inst.line_counts();
    let m = inst.m();
    let mut best = 0;
    // each line is unused (0), small-capacity (1) or large-capacity (2)
    let mut types = vec![0u8; m];
    loop {
        let nc = types.iter().filter(|&&t| t == 2).count();
        let nf = types.iter().filter(|&&t| t == 1).count();
        if nc <= kc && nf <= kf {
            let mut slots = Vec::new();
            for (x, &t) in types.iter().enumerate() {
                let cap = match t {
                    1 => capf,
                    2 => capc,
                    _ => 0,
                };
                slots.extend(std::iter::repeat_n(x + 1, cap));
            }
            best = best.max(max_matched(ivs, &slots));
        }
        // odometer over {0,1,2}^m
        let mut p = 0;
        while p < m && types[p] == 2 {
            types[p] = 0;
            p += 1;
        }
        if p == m {
            break;
        }
        types[p] += 1;
    }
    Ok(best)
}

fn max_matched(ivs: &[Interval], slots: &[usize]) -> usize {
    // largest subset of intervals that can be matched into slots
    let n = ivs.len();
    let mut best = 0;
    for mask in 0u32..(1 << n) {
        let pick: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        if pick.len() <= best || pick.len() > slots.len() {
            continue;
        }
        if perfect_row_matching(pick.len(), slots.len(), |r, c| ivs[pick[r]].contains(slots[c])).is_some() {
            best = pick.len();
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalizes_and_validates() {
        let s = StabbingInstance::new(3, 2, vec![Interval::new(2, 3), Interval::new(1, 1)]).unwrap();
        assert_eq!(s.intervals()[0], Interval::new(1, 1));
        assert_eq!(s.source(0), 1);
        assert!(StabbingInstance::new(3, 2, vec![Interval::new(0, 1)]).is_err());
        assert!(StabbingInstance::new(3, 2, vec![Interval::new(2, 4)]).is_err());
    }

    #[test]
    fn brute_small_cases() {
        let s = StabbingInstance::new(3, 2, vec![Interval::new(1, 2), Interval::new(1, 1), Interval::new(2, 3)]).unwrap();
        assert_eq!(s.caps(), (2, 1));
        assert_eq!(brute_force_stabbing(&s).unwrap(), 3);
        let e = StabbingInstance::new(3, 2, vec![]).unwrap();
        assert_eq!(brute_force_stabbing(&e).unwrap(), 0);
        let full = StabbingInstance::with_population(4, 1, 5, vec![Interval::new(1, 4); 3]).unwrap();
        assert_eq!(brute_force_stabbing(&full).unwrap(), 3);
    }
}
