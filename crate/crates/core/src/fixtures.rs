//! Small hand-checkable profiles used by tests, docs and benches.

use crate::election::Election;

/// Votes `c1>c2>c3>c4`, `c2>c3>c4>c1`, `c3>c2>c1>c4`.
/// Single-peaked on the axis `c1 c2 c3 c4`.
pub fn four_by_three() -> Election {
    Election::from_votes(4, vec![vec![0, 1, 2, 3], vec![1, 2, 3, 0], vec![2, 1, 0, 3]]).unwrap()
}

/// Four voters `a>b>c>d` and two voters `c>b>a>d`.
pub fn six_voters() -> Election {
    let names = ["a", "b", "c", "d"].iter().map(|s| s.to_string()).collect();
    let mut votes = vec![vec![0, 1, 2, 3]; 4];
    votes.extend(vec![vec![2, 1, 0, 3]; 2]);
    Election::new(names, votes).unwrap()
}
