//! Elections and misrepresentation matrices.

use crate::error::{Error, Result};
use num_integer::Integer;

/// A candidate set together with a profile of strict total orders.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Election {
    names: Vec<String>,
    votes: Vec<Vec<usize>>,
    // pos[v][c] = 0-based position of candidate c in vote v
    pos: Vec<Vec<usize>>,
}

impl Election {
    pub fn new(names: Vec<String>, votes: Vec<Vec<usize>>) -> Result<Self> {
        let m = names.len();
        if m == 0 {
            return Err(Error::InvalidElection("no candidates".into()));
        }
        if votes.is_empty() {
            return Err(Error::InvalidElection("no voters".into()));
        }
        let mut pos = Vec::with_capacity(votes.len());
        for (v, vote) in votes.iter().enumerate() {
            if vote.len() != m {
                return Err(Error::InvalidElection(format!(
                    "vote {v} ranks {} candidates, expected {m}",
                    vote.len()
                )));
            }
            let mut p = vec![usize::MAX; m];
            for (i, &c) in vote.iter().enumerate() {
                if c >= m {
                    return Err(Error::InvalidElection(format!(
                        "vote {v} names unknown candidate index {c}"
                    )));
                }
                if p[c] != usize::MAX {
                    return Err(Error::InvalidElection(format!(
                        "vote {v} ranks candidate {} twice",
                        names[c]
                    )));
                }
                p[c] = i;
            }
            pos.push(p);
        }
        Ok(Election { names, votes, pos })
    }

    /// Builds an election with default names `c1..cm`.
    pub fn from_votes(m: usize, votes: Vec<Vec<usize>>) -> Result<Self> {
        Self::new(default_names(m), votes)
    }

    pub fn m(&self) -> usize {
        self.names.len()
    }

    pub fn n(&self) -> usize {
        self.votes.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, c: usize) -> &str {
        &self.names[c]
    }

    pub fn votes(&self) -> &[Vec<usize>] {
        &self.votes
    }

    pub fn vote(&self, v: usize) -> &[usize] {
        &self.votes[v]
    }

    /// 0-based position of `c` in vote `v`.
    pub fn pos(&self, v: usize, c: usize) -> usize {
        self.pos[v][c]
    }

    pub fn top(&self, v: usize) -> usize {
        self.votes[v][0]
    }

    pub fn candidate_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|s| s == name)
    }
}

pub fn default_names(m: usize) -> Vec<String> {
    (1..=m).map(|i| format!("c{i}")).collect()
}

/// How misrepresentation values are obtained.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MisrepSpec {
    Borda,
    /// Per-voter approved candidates; 0 on the set, 1 elsewhere.
    Approval(Vec<Vec<usize>>),
    /// Explicit n x m matrix.
    Explicit(Vec<Vec<u64>>),
}

/// Exact nonnegative integer misrepresentation values, row-major by voter.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MisrepMatrix {
    n: usize,
    m: usize,
    data: Vec<u64>,
}

impl MisrepMatrix {
    pub fn from_rows(rows: &[Vec<u64>]) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::InvalidMisrep("matrix has no rows".into()));
        }
        let m = rows[0].len();
        if m == 0 {
            return Err(Error::InvalidMisrep("matrix has no columns".into()));
        }
        let mut data = Vec::with_capacity(n * m);
        for (v, row) in rows.iter().enumerate() {
            if row.len() != m {
                return Err(Error::InvalidMisrep(format!(
                    "row {v} has {} entries, expected {m}",
                    row.len()
                )));
            }
            data.extend_from_slice(row);
        }
        Ok(MisrepMatrix { n, m, data })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn get(&self, v: usize, c: usize) -> u64 {
        self.data[v * self.m + c]
    }

    pub fn row(&self, v: usize) -> &[u64] {
        &self.data[v * self.m..(v + 1) * self.m]
    }

    pub fn rows(&self) -> Vec<Vec<u64>> {
        (0..self.n).map(|v| self.row(v).to_vec()).collect()
    }

    pub fn max_value(&self) -> u64 {
        self.data.iter().copied().max().unwrap_or(0)
    }

    /// Sorted distinct entries.
    pub fn distinct_values(&self) -> Vec<u64> {
        let mut vals = self.data.clone();
        vals.sort_unstable();
        vals.dedup();
        vals
    }

    pub fn is_binary(&self) -> bool {
        self.data.iter().all(|&x| x <= 1)
    }

    /// 0 where the entry is at most `bound`, 1 elsewhere.
    pub fn threshold(&self, bound: u64) -> MisrepMatrix {
        MisrepMatrix {
            n: self.n,
            m: self.m,
            data: self.data.iter().map(|&x| u64::from(x > bound)).collect(),
        }
    }

    /// Submatrix keeping only the listed candidate columns, in order.
    pub fn select_columns(&self, cols: &[usize]) -> MisrepMatrix {
        let mut data = Vec::with_capacity(self.n * cols.len());
        for v in 0..self.n {
            for &c in cols {
                data.push(self.get(v, c));
            }
        }
        MisrepMatrix {
            n: self.n,
            m: cols.len(),
            data,
        }
    }

    /// True when every row is a permutation of `0..m`.
    pub fn is_borda_like(&self) -> bool {
        (0..self.n).all(|v| {
            let mut seen = vec![false; self.m];
            self.row(v).iter().all(|&x| {
                let x = x as usize;
                x < self.m && !std::mem::replace(&mut seen[x], true)
            })
        })
    }

    /// Checks monotonicity of every row against the votes.
    pub fn check_monotone(&self, election: &Election) -> Result<()> {
        if election.n() != self.n || election.m() != self.m {
            return Err(Error::InvalidMisrep(format!(
                "matrix is {}x{}, election has n={} m={}",
                self.n,
                self.m,
                election.n(),
                election.m()
            )));
        }
        for v in 0..self.n {
            let vote = election.vote(v);
            for w in vote.windows(2) {
                if self.get(v, w[0]) > self.get(v, w[1]) {
                    return Err(Error::NotMonotone {
                        voter: v,
                        better: w[0],
                        worse: w[1],
                    });
                }
            }
        }
        Ok(())
    }
}

/// Builds and validates the misrepresentation matrix for an election.
pub fn build_misrep(election: &Election, spec: &MisrepSpec) -> Result<MisrepMatrix> {
    let (n, m) = (election.n(), election.m());
    let matrix = match spec {
        MisrepSpec::Borda => {
            let rows: Vec<Vec<u64>> = (0..n)
                .map(|v| (0..m).map(|c| election.pos(v, c) as u64).collect())
                .collect();
            MisrepMatrix::from_rows(&rows)?
        }
        MisrepSpec::Approval(sets) => {
            if sets.len() != n {
                return Err(Error::InvalidMisrep(format!(
                    "{} approval sets for {n} voters",
                    sets.len()
                )));
            }
            let mut rows = vec![vec![1u64; m]; n];
            for (v, set) in sets.iter().enumerate() {
                for &c in set {
                    if c >= m {
                        return Err(Error::InvalidMisrep(format!(
                            "voter {v} approves unknown candidate {c}"
                        )));
                    }
                    rows[v][c] = 0;
                }
            }
            MisrepMatrix::from_rows(&rows)?
        }
        MisrepSpec::Explicit(rows) => MisrepMatrix::from_rows(rows)?,
    };
    matrix.check_monotone(election)?;
    Ok(matrix)
}

/// Scales rational rows `(num, den)` by the LCM of all denominators.
pub fn scale_rationals(rows: &[Vec<(u64, u64)>]) -> Result<Vec<Vec<u64>>> {
    let mut l: u64 = 1;
    for &(_, d) in rows.iter().flatten() {
        if d == 0 {
            return Err(Error::InvalidMisrep("zero denominator".into()));
        }
        l = l.lcm(&d);
    }
    rows.iter()
        .map(|row| {
            row.iter()
                .map(|&(p, q)| {
                    p.checked_mul(l / q)
                        .ok_or_else(|| Error::InvalidMisrep("scaled value overflows u64".into()))
                })
                .collect()
        })
        .collect()
}
