//! Seeded inputs shared by the benchmarks in `benches/`.

use proprep_core::generate::{random_election, random_prefix_approval, random_single_peaked, seeded};
use proprep_core::stabbing::{reduce_m_mw_sp, StabbingInstance};
use proprep_core::{MisrepSpec, Objective, ProblemInstance, Rule, SocietalAxis};

pub fn borda(seed: u64, n: usize, m: usize, k: usize, rule: Rule, objective: Objective) -> ProblemInstance {
    let e = random_election(n, m, &mut seeded(seed)).unwrap();
    ProblemInstance::from_spec(e, &MisrepSpec::Borda, rule, objective, k, 0).unwrap()
}

pub fn single_peaked(seed: u64, n: usize, m: usize, k: usize, rule: Rule, objective: Objective) -> (ProblemInstance, SocietalAxis) {
    let (e, axis) = random_single_peaked(n, m, &mut seeded(seed)).unwrap();
    let inst = ProblemInstance::from_spec(e, &MisrepSpec::Borda, rule, objective, k, 0).unwrap();
    (inst, axis)
}

/// Monroe instance with prefix approvals on a single-peaked profile.
pub fn sp_approval(seed: u64, n: usize, m: usize, k: usize) -> (ProblemInstance, SocietalAxis) {
    let mut rng = seeded(seed);
    let (e, axis) = random_single_peaked(n, m, &mut rng).unwrap();
    let spec = random_prefix_approval(&e, &mut rng);
    let inst = ProblemInstance::from_spec(e, &spec, Rule::Monroe, Objective::Sum, k, 0).unwrap();
    (inst, axis)
}

/// The stabbing instance behind [`sp_approval`].
pub fn stabbing(seed: u64, n: usize, m: usize, k: usize) -> StabbingInstance {
    let (inst, axis) = sp_approval(seed, n, m, k);
    reduce_m_mw_sp(&inst, &axis).unwrap().stabbing
}
