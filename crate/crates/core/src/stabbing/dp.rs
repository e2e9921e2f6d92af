use std::collections::BTreeMap;

use super::instance::{check_cover, StabbingCover, StabbingInstance};
use crate::error::{Error, Result};

/// Table size above which the solver refuses to allocate.
pub const MAX_TABLE_ENTRIES: usize = 50_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Key {
    i: usize,
    x1: usize,
    x2: usize,
    a: usize,
    f: usize,
    b: usize,
}

#[derive(Debug, Clone, Copy)]
enum Pick {
    Base(usize),
    Alone,
    Stack(Key),
    Next(Key),
    Split { x: usize, left: Option<Key>, right: Option<Key> },
}

struct Table<'a> {
    inst: &'a StabbingInstance,
    lo: Vec<usize>,
    hi: Vec<usize>,
    m: usize,
    kc: usize,
    kf: usize,
    capc: usize,
    capf: usize,
    vals: Vec<i32>,
}

impl Table<'_> {
    fn cont(&self, j: usize, x: usize) -> bool {
        self.lo[j] <= x && x <= self.hi[j]
    }

    fn index(&self, k: Key) -> usize {
        ((((k.i * self.m + k.x1 - 1) * self.m + k.x2 - 1) * (self.kc + 1) + k.a) * (self.kf + 1) + k.f) * self.capc + k.b - 1
    }

    fn get(&self, k: Key) -> Option<usize> {
        let v = self.vals[self.index(k)];
        (v >= 0).then_some(v as usize)
    }

    fn rest(&self, k: Key) -> Vec<usize> {
        (k.i + 1..self.lo.len())
            .filter(|&j| k.x1 <= self.hi[j] && self.hi[j] <= k.x2)
            .collect()
    }

    // best entry opening a fresh line at some xp >= xs
    fn next_line(&self, cand: &[usize], xs: usize, x2: usize, a: usize, f: usize) -> (usize, Option<Key>) {
        let mut best = (0, None);
        for xp in xs..=x2 {
            for &j in cand {
                if !self.cont(j, xp) {
                    continue;
                }
                let mut try_key = |key: Key| {
                    if let Some(v) = self.get(key) {
                        if v > best.0 {
                            best = (v, Some(key));
                        }
                    }
                };
                if a > 0 && self.capc >= 1 {
                    try_key(Key { i: j, x1: xp, x2, a: a - 1, f, b: self.capc });
                }
                if f > 0 && self.capf >= 1 {
                    try_key(Key { i: j, x1: xp, x2, a, f: f - 1, b: self.capf });
                }
            }
        }
        best
    }

    fn compute(&self, k: Key) -> (usize, Pick) {
        let rest = self.rest(k);
        if k.a == 0 && k.f == 0 {
            let extra = rest.iter().filter(|&&j| self.cont(j, k.x1)).count();
            let v = k.b.min(1 + extra);
            return (v, Pick::Base(v - 1));
        }
        let mut best = (0, Pick::Alone);
        if k.b > 1 {
            for &j in &rest {
                if self.cont(j, k.x1) {
                    let key = Key { i: j, b: k.b - 1, ..k };
                    if let Some(v) = self.get(key) {
                        if v > best.0 {
                            best = (v, Pick::Stack(key));
                        }
                    }
                }
            }
        }
        if let (v, Some(key)) = self.next_line(&rest, k.x1 + 1, k.x2, k.a, k.f) {
            if v > best.0 {
                best = (v, Pick::Next(key));
            }
        }
        for x in k.x1 + 1..=self.hi[k.i] {
            if !self.cont(k.i, x) {
                continue;
            }
            let left: Vec<usize> = rest.iter().copied().filter(|&j| self.hi[j] < x).collect();
            let right: Vec<usize> = rest.iter().copied().filter(|&j| self.hi[j] >= x).collect();
            for al in 0..=k.a {
                let ar = k.a - al;
                for fl in 0..=k.f {
                    let fr = k.f - fl;
                    let mut ml = (0, None);
                    for &j in &left {
                        if self.cont(j, k.x1) {
                            let key = Key { i: j, x2: x - 1, a: al, f: fl, ..k };
                            if let Some(v) = self.get(key) {
                                if v > ml.0 {
                                    ml = (v, Some(key));
                                }
                            }
                        }
                    }
                    let mut mr: Option<(usize, Option<Key>)> = None;
                    let types = [(ar.checked_sub(1), Some(fr), self.capc), (Some(ar), fr.checked_sub(1), self.capf)];
                    for (ar2, fr2, cap) in types {
                        let (Some(ar2), Some(fr2)) = (ar2, fr2) else { continue };
                        if cap < 1 {
                            continue;
                        }
                        let mut cur = (0, None);
                        if cap >= 2 {
                            for &j in &right {
                                if self.cont(j, x) {
                                    let key = Key { i: j, x1: x, x2: k.x2, a: ar2, f: fr2, b: cap - 1 };
                                    if let Some(v) = self.get(key) {
                                        if v > cur.0 {
                                            cur = (v, Some(key));
                                        }
                                    }
                                }
                            }
                        }
                        let nx = self.next_line(&right, x + 1, k.x2, ar2, fr2);
                        if nx.0 > cur.0 {
                            cur = nx;
                        }
                        if mr.is_none_or(|m| cur.0 > m.0) {
                            mr = Some(cur);
                        }
                    }
                    let Some(mr) = mr else { continue };
                    if ml.0 + mr.0 > best.0 {
                        best = (ml.0 + mr.0, Pick::Split { x, left: ml.1, right: mr.1 });
                    }
                }
            }
        }
        (best.0 + 1, best.1)
    }

    fn replay(&self, k: Key, groups: &mut BTreeMap<usize, Vec<usize>>) {
        let (_, pick) = self.compute(k);
        match pick {
            Pick::Base(extra) => {
                let g = groups.entry(k.x1).or_default();
                g.push(k.i);
                g.extend(self.rest(k).into_iter().filter(|&j| self.cont(j, k.x1)).take(extra));
            }
            Pick::Alone => groups.entry(k.x1).or_default().push(k.i),
            Pick::Stack(sub) | Pick::Next(sub) => {
                groups.entry(k.x1).or_default().push(k.i);
                self.replay(sub, groups);
            }
            Pick::Split { x, left, right } => {
                groups.entry(x).or_default().push(k.i);
                for sub in [left, right].into_iter().flatten() {
                    self.replay(sub, groups);
                }
            }
        }
    }
}

/// Maximum number of intervals that can be stabbed under the balanced
/// capacities, with a cover attaining it.
///
/// Intervals in the cover are referenced by their sorted position.
pub fn solve_max_bal_1rs(inst: &StabbingInstance) -> Result<(usize, StabbingCover)> {
    let ivs = inst.intervals();
    if ivs.is_empty() {
        return Ok((0, StabbingCover::default()));
    }
    let (capc, capf) = inst.caps();
    let (kc, kf) = inst.line_counts();
    let m = inst.m();
    let n_iv = ivs.len();
    let size = n_iv
        .checked_mul(m * m)
        .and_then(|s| s.checked_mul((kc + 1) * (kf + 1)))
        .and_then(|s| s.checked_mul(capc))
        .filter(|&s| s <= MAX_TABLE_ENTRIES)
        .ok_or_else(|| Error::Budget(format!("stabbing table exceeds {MAX_TABLE_ENTRIES} entries")))?;
    let mut t = Table {
        inst,
        lo: ivs.iter().map(|v| v.lo).collect(),
        hi: ivs.iter().map(|v| v.hi).collect(),
        m,
        kc,
        kf,
        capc,
        capf,
        vals: vec![-1; size],
    };
    let k = inst.k();
    for span in 0..m {
        for x1 in 1..=m - span {
            let x2 = x1 + span;
            for a in 0..=kc {
                for f in 0..=kf {
                    if a + f > k - 1 {
                        continue;
                    }
                    for b in 1..=capc {
                        for i in 0..n_iv {
                            if !(t.hi[i] <= x2 && t.cont(i, x1)) {
                                continue;
                            }
                            let key = Key { i, x1, x2, a, f, b };
                            let v = t.compute(key).0;
                            let idx = t.index(key);
                            t.vals[idx] = v as i32;
                        }
                    }
                }
            }
        }
    }

    let mut best: (usize, Option<Key>) = (0, None);
    for i in 0..n_iv {
        for x1 in 1..=m {
            if !t.cont(i, x1) {
                continue;
            }
            let mut tops = Vec::with_capacity(2);
            if kc >= 1 {
                tops.push(Key { i, x1, x2: m, a: kc - 1, f: kf, b: capc });
            }
            if kf >= 1 && capf >= 1 {
                tops.push(Key { i, x1, x2: m, a: kc, f: kf - 1, b: capf });
            }
            for key in tops {
                if let Some(v) = t.get(key) {
                    if v > best.0 {
                        best = (v, Some(key));
                    }
                }
            }
        }
    }
    let Some(top) = best.1 else {
        return Ok((0, StabbingCover::default()));
    };
    let mut groups = BTreeMap::new();
    t.replay(top, &mut groups);
    let cover = StabbingCover {
        lines: groups.into_iter().collect(),
    };
    let got = check_cover(t.inst, &cover)?;
    if got != best.0 {
        return Err(Error::Internal(format!("table value {} but witness covers {got}", best.0)));
    }
    Ok((best.0, cover))
}

#[cfg(test)]
mod tests {
    use super::super::instance::{brute_force_stabbing, Interval};
    use super::*;

    fn iv(v: &[(usize, usize)]) -> Vec<Interval> {
        v.iter().map(|&(a, b)| Interval::new(a, b)).collect()
    }

    #[test]
    fn three_interval_cases() {
        let s = StabbingInstance::new(3, 2, iv(&[(1, 2), (1, 1), (2, 3)])).unwrap();
        assert_eq!(solve_max_bal_1rs(&s).unwrap().0, 3);
        let s = StabbingInstance::new(3, 3, iv(&[(1, 2), (1, 1), (3, 3)])).unwrap();
        assert_eq!(solve_max_bal_1rs(&s).unwrap().0, 3);
    }

    #[test]
    fn empty_is_zero() {
        let s = StabbingInstance::new(4, 2, vec![]).unwrap();
        assert_eq!(solve_max_bal_1rs(&s).unwrap().0, 0);
    }

    #[test]
    fn capacity_binds() {
        // population 4, k 2: two lines of two; all intervals pinned to line 1
        let s = StabbingInstance::with_population(3, 2, 4, iv(&[(1, 1), (1, 1), (1, 1), (3, 3)])).unwrap();
        assert_eq!(solve_max_bal_1rs(&s).unwrap().0, 3);
        assert_eq!(brute_force_stabbing(&s).unwrap(), 3);
    }
}
