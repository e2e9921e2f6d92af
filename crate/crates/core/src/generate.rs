//! Seeded random instance families.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::election::{default_names, Election, MisrepSpec};
use crate::error::{Error, Result};
use crate::hardness::{HittingSetInstance, RX3CInstance};
use crate::single_peaked::SocietalAxis;

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn check_dims(n: usize, m: usize) -> Result<()> {
    if n == 0 || m == 0 {
        return Err(Error::InvalidElection("need at least one voter and one candidate".into()));
    }
    Ok(())
}

/// Uniformly random votes.
pub fn random_election<R: Rng>(n: usize, m: usize, rng: &mut R) -> Result<Election> {
    check_dims(n, m)?;
    let votes = (0..n)
        .map(|_| {
            let mut v: Vec<usize> = (0..m).collect();
            v.shuffle(rng);
            v
        })
        .collect();
    Election::new(default_names(m), votes)
}

/// Random axis, then each vote starts at a random peak and extends to the
/// left or right by a fair coin.
pub fn random_single_peaked<R: Rng>(n: usize, m: usize, rng: &mut R) -> Result<(Election, SocietalAxis)> {
    check_dims(n, m)?;
    let mut order: Vec<usize> = (0..m).collect();
    order.shuffle(rng);
    let axis = SocietalAxis::new(order).unwrap();
    let votes = (0..n).map(|_| single_peaked_vote(&axis, rng)).collect();
    Ok((Election::new(default_names(m), votes)?, axis))
}

pub fn single_peaked_vote<R: Rng>(axis: &SocietalAxis, rng: &mut R) -> Vec<usize> {
    let o = axis.order();
    let peak = rng.gen_range(0..o.len());
    let mut vote = vec![o[peak]];
    let (mut l, mut r) = (peak, peak + 1);
    while vote.len() < o.len() {
        let left = l > 0 && (r == o.len() || rng.gen_bool(0.5));
        if left {
            l -= 1;
            vote.push(o[l]);
        } else {
            vote.push(o[r]);
            r += 1;
        }
    }
    vote
}

/// Each voter approves a random-length prefix of their vote (possibly
/// empty, possibly everything). On a single-peaked profile the result is
/// single-troughed on the same axis.
pub fn random_prefix_approval<R: Rng>(election: &Election, rng: &mut R) -> MisrepSpec {
    let m = election.m();
    MisrepSpec::Approval(
        election
            .votes()
            .iter()
            .map(|v| v[..rng.gen_range(0..=m)].to_vec())
            .collect(),
    )
}

/// `sets` random nonempty subsets of `0..universe`.
pub fn random_hitting_set<R: Rng>(universe: usize, sets: usize, k: usize, rng: &mut R) -> Result<HittingSetInstance> {
    if universe == 0 || sets == 0 {
        return Err(Error::Precondition("need a nonempty universe and family".into()));
    }
    let family = (0..sets)
        .map(|_| {
            let size = rng.gen_range(1..=universe);
            let mut all: Vec<usize> = (0..universe).collect();
            all.shuffle(rng);
            all.truncate(size);
            all
        })
        .collect();
    HittingSetInstance::new(universe, family, k)
}

/// Random simple graph on `vertices` with `edges` edges and maximum degree
/// 3, as a family of pairs.
pub fn random_cubic_vertex_cover<R: Rng>(vertices: usize, edges: usize, k: usize, rng: &mut R) -> Result<HittingSetInstance> {
    if edges == 0 || 2 * edges > 3 * vertices {
        return Err(Error::Precondition(format!("{edges} edges do not fit {vertices} vertices of degree <= 3")));
    }
    for _ in 0..1000 {
        let mut deg = vec![0; vertices];
        let mut family: Vec<Vec<usize>> = Vec::new();
        let mut stuck = 0;
        while family.len() < edges && stuck < 200 {
            let (a, b) = (rng.gen_range(0..vertices), rng.gen_range(0..vertices));
            let e = vec![a.min(b), a.max(b)];
            if a == b || deg[a] == 3 || deg[b] == 3 || family.contains(&e) {
                stuck += 1;
                continue;
            }
            deg[a] += 1;
            deg[b] += 1;
            family.push(e);
        }
        if family.len() == edges {
            return HittingSetInstance::new(vertices, family, k);
        }
    }
    Err(Error::Precondition("could not place the requested edges".into()))
}

/// Random instance with every element in exactly three triples, by
/// shuffling three copies of each element and rejecting repeats.
pub fn random_rx3c<R: Rng>(n: usize, rng: &mut R) -> Result<RX3CInstance> {
    if n == 0 || !n.is_multiple_of(3) {
        return Err(Error::Precondition(format!("element count {n} is not a positive multiple of 3")));
    }
    if n == 3 {
        return RX3CInstance::new(3, vec![[0, 1, 2]; 3]);
    }
    let mut slots: Vec<usize> = (0..n).flat_map(|e| [e; 3]).collect();
    loop {
        slots.shuffle(rng);
        let sets: Vec<[usize; 3]> = slots.chunks(3).map(|c| [c[0], c[1], c[2]]).collect();
        if let Ok(x) = RX3CInstance::new(n, sets) {
            return Ok(x);
        }
    }
}
