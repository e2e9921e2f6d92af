use crate::error::{Error, Result};

/// Family of subsets of `0..universe` and a budget `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HittingSetInstance {
    universe: usize,
    sets: Vec<Vec<usize>>,
    k: usize,
}

impl HittingSetInstance {
    /// Sets are deduplicated and sorted internally; every set must be
    /// nonempty and `1 <= k <= universe`.
    pub fn new(universe: usize, sets: Vec<Vec<usize>>, k: usize) -> Result<Self> {
        if k == 0 || k > universe {
            return Err(Error::Precondition(format!("budget {k} outside 1..={universe}")));
        }
        if sets.is_empty() {
            return Err(Error::Precondition("empty family".into()));
        }
        let mut clean = Vec::with_capacity(sets.len());
        for (i, mut s) in sets.into_iter().enumerate() {
            s.sort_unstable();
            s.dedup();
            if s.is_empty() || s.last().is_some_and(|&u| u >= universe) {
                return Err(Error::Precondition(format!("set {i} is empty or leaves the universe")));
            }
            clean.push(s);
        }
        Ok(HittingSetInstance {
            universe,
            sets: clean,
            k,
        })
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn sets(&self) -> &[Vec<usize>] {
        &self.sets
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn with_k(&self, k: usize) -> Result<Self> {
        Self::new(self.universe, self.sets.clone(), k)
    }

    /// Every set has two elements and no element is in more than three sets.
    pub fn is_cubic_vertex_cover(&self) -> bool {
        let mut freq = vec![0; self.universe];
        for s in &self.sets {
            if s.len() != 2 {
                return false;
            }
            for &u in s {
                freq[u] += 1;
            }
        }
        freq.iter().all(|&f| f <= 3)
    }
}

/// Elements `0..n` and `n` triples, every element in exactly three of them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RX3CInstance {
    n: usize,
    sets: Vec<[usize; 3]>,
}

impl RX3CInstance {
    pub fn new(n: usize, sets: Vec<[usize; 3]>) -> Result<Self> {
        if n == 0 || !n.is_multiple_of(3) {
            return Err(Error::Precondition(format!("element count {n} is not a positive multiple of 3")));
        }
        if sets.len() != n {
            return Err(Error::Precondition(format!("{} sets for {n} elements", sets.len())));
        }
        let mut freq = vec![0; n];
        for (j, s) in sets.iter().enumerate() {
            if s.iter().any(|&e| e >= n) || s[0] == s[1] || s[1] == s[2] || s[0] == s[2] {
                return Err(Error::Precondition(format!("set {j} is not three distinct elements")));
            }
            for &e in s {
                freq[e] += 1;
            }
        }
        if let Some(e) = freq.iter().position(|&f| f != 3) {
            return Err(Error::Precondition(format!("element {e} occurs {} times", freq[e])));
        }
        Ok(RX3CInstance { n, sets })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn sets(&self) -> &[[usize; 3]] {
        &self.sets
    }

    /// Set index of the `x`-th (0-based) occurrence of element `e`.
    pub fn occurrence(&self, e: usize, x: usize) -> usize {
        self.sets
            .iter()
            .enumerate()
            .filter(|(_, s)| s.contains(&e))
            .nth(x)
            .map(|(j, _)| j)
            .expect("every element occurs three times")
    }
}

pub const BRUTE_HS_MAX_UNIVERSE: usize = 12;
pub const BRUTE_X3C_MAX_N: usize = 9;

/// Whether some `k` elements meet every set.
pub fn brute_hitting_set(hs: &HittingSetInstance) -> Result<bool> {
    if hs.universe > BRUTE_HS_MAX_UNIVERSE {
        return Err(Error::Budget(format!("brute hitting set limited to {BRUTE_HS_MAX_UNIVERSE} elements")));
    }
    let masks: Vec<u32> = hs.sets.iter().map(|s| s.iter().fold(0, |m, &u| m | 1 << u)).collect();
    Ok((0u32..1 << hs.universe)
        .filter(|c| c.count_ones() as usize <= hs.k)
        .any(|c| masks.iter().all(|&s| s & c != 0)))
}

/// Whether `n/3` of the triples partition the elements.
pub fn brute_exact_3_cover(x: &RX3CInstance) -> Result<bool> {
    if x.n > BRUTE_X3C_MAX_N {
        return Err(Error::Budget(format!("brute exact cover limited to n <= {BRUTE_X3C_MAX_N}")));
    }
    fn go(sets: &[u32], full: u32, covered: u32) -> bool {
        if covered == full {
            return true;
        }
        // branch on the sets containing the lowest uncovered element
        let low = (!covered & full).trailing_zeros();
        sets.iter().any(|&s| s >> low & 1 == 1 && s & covered == 0 && go(sets, full, covered | s))
    }
    let sets: Vec<u32> = x.sets.iter().map(|s| s.iter().fold(0, |m, &e| m | 1 << e)).collect();
    Ok(go(&sets, (1 << x.n) - 1, 0))
}

/// Whether `k` vertices can take every edge, each edge assigned to one of
/// its chosen endpoints, with loads meeting the balanced bounds for `k`
/// winners. Used as the Monroe-side oracle for the vertex cover
/// construction.
pub fn brute_balanced_vertex_cover(hs: &HittingSetInstance) -> Result<bool> {
    if !hs.is_cubic_vertex_cover() {
        return Err(Error::Precondition("expected two-element sets".into()));
    }
    let e = hs.sets.len();
    if e > 16 {
        return Err(Error::Budget("balanced cover oracle limited to 16 edges".into()));
    }
    let k = hs.k;
    let (lo, hi) = crate::solution::load_bounds(e, k);
    for pick in 0u32..1 << e {
        let mut load = vec![0usize; hs.universe];
        for (i, s) in hs.sets.iter().enumerate() {
            load[s[(pick >> i & 1) as usize]] += 1;
        }
        let used: Vec<usize> = load.iter().copied().filter(|&l| l > 0).collect();
        if used.len() > k || used.iter().any(|&l| l < lo || l > hi) {
            continue;
        }
        // remaining winners represent nobody
        if used.len() < k && lo > 0 {
            continue;
        }
        return Ok(true);
    }
    Ok(false)
}
