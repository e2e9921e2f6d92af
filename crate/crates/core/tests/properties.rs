use proprep_core::assignment::{assign_cc, assign_monroe_minimax, assign_monroe_sum, enumerate_balanced_assignments};
use proprep_core::election::{build_misrep, Election, MisrepSpec};
use proprep_core::exact::{solve_subset_enum, SolverBudget};
use proprep_core::generate::{random_election, random_prefix_approval, random_single_peaked, seeded};
use proprep_core::single_peaked::{
    check_compatible, check_single_troughed, detect_axis, solve_cc_minimax_sp, solve_cc_sum_sp,
};
use proprep_core::{auto_solver, evaluate, optimize, verify_solution, Mode, Objective, ProblemInstance, Rule};
use proptest::prelude::*;

/// All permutations of `0..m` in lexicographic order.
fn permutations(m: usize) -> Vec<Vec<usize>> {
    let mut cur: Vec<usize> = (0..m).collect();
    let mut out = vec![cur.clone()];
    loop {
        let Some(i) = (1..m).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..m).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(cur.clone());
    }
}

/// (seed, n, m, k, approval, single-peaked)
fn params(max_n: usize, max_m: usize) -> impl Strategy<Value = (u64, usize, usize, usize, bool, bool)> {
    (any::<u64>(), 1..=max_n, 1..=max_m, 1usize..=3, any::<bool>(), any::<bool>())
        .prop_map(|(s, n, m, k, a, sp)| (s, n, m, k.min(n).min(m), a, sp))
}

fn build(p: (u64, usize, usize, usize, bool, bool), rule: Rule, obj: Objective) -> ProblemInstance {
    let (seed, n, m, k, approval, sp) = p;
    let mut rng = seeded(seed);
    let e = if sp {
        random_single_peaked(n, m, &mut rng).unwrap().0
    } else {
        random_election(n, m, &mut rng).unwrap()
    };
    let spec = if approval {
        random_prefix_approval(&e, &mut rng)
    } else {
        MisrepSpec::Borda
    };
    ProblemInstance::from_spec(e, &spec, rule, obj, k, 0).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn borda_rows_follow_votes(p in params(6, 7)) {
        let inst = build((p.0, p.1, p.2, p.3, false, p.5), Rule::Cc, Objective::Sum);
        for v in 0..inst.n() {
            for (i, &c) in inst.election.vote(v).iter().enumerate() {
                prop_assert_eq!(inst.matrix.get(v, c), i as u64);
            }
        }
        prop_assert!(inst.matrix.is_borda_like());
    }

    #[test]
    fn matrices_are_monotone(p in params(6, 7)) {
        let inst = build(p, Rule::Cc, Objective::Sum);
        let e = &inst.election;
        for v in 0..inst.n() {
            let vote = e.vote(v);
            for i in 0..vote.len() {
                for j in i + 1..vote.len() {
                    prop_assert!(inst.matrix.get(v, vote[i]) <= inst.matrix.get(v, vote[j]));
                }
            }
        }
    }

    #[test]
    fn minimax_never_exceeds_sum(p in params(6, 6), monroe in any::<bool>()) {
        let rule = if monroe { Rule::Monroe } else { Rule::Cc };
        let s = solve_subset_enum(&build(p, rule, Objective::Sum)).unwrap().value;
        let mm = solve_subset_enum(&build(p, rule, Objective::Minimax)).unwrap().value;
        prop_assert!(mm <= s);
    }

    #[test]
    fn monroe_flow_matches_enumeration(p in params(7, 6), pick in any::<u64>()) {
        let inst = build(p, Rule::Monroe, Objective::Sum);
        let (m, k) = (inst.m(), inst.k);
        // committee: k candidates chosen by the seed
        let mut pool: Vec<usize> = (0..m).collect();
        let mut x = pick;
        let mut w = Vec::new();
        for _ in 0..k {
            let i = (x % pool.len() as u64) as usize;
            x /= pool.len() as u64;
            w.push(pool.remove(i));
        }
        let all: Vec<_> = enumerate_balanced_assignments(&w, inst.n()).unwrap().collect();
        let brute = all.iter().map(|a| evaluate(a, &inst.matrix, Objective::Sum)).min().unwrap();
        prop_assert_eq!(assign_monroe_sum(&w, &inst.matrix).unwrap().value, brute);
        for b in inst.matrix.distinct_values() {
            let exists = all.iter().any(|a| evaluate(a, &inst.matrix, Objective::Minimax) <= b);
            prop_assert_eq!(assign_monroe_minimax(&w, &inst.matrix, b).unwrap().is_some(), exists);
        }
    }

    #[test]
    fn cc_assignment_is_pointwise_best(p in params(7, 7)) {
        let inst = build(p, Rule::Cc, Objective::Sum);
        let w: Vec<usize> = (0..inst.k).collect();
        let a = assign_cc(&w, &inst.matrix).unwrap();
        let best: Vec<u64> = (0..inst.n()).map(|v| w.iter().map(|&c| inst.matrix.get(v, c)).min().unwrap()).collect();
        prop_assert_eq!(evaluate(&a, &inst.matrix, Objective::Sum), best.iter().sum::<u64>());
        prop_assert_eq!(evaluate(&a, &inst.matrix, Objective::Minimax), *best.iter().max().unwrap());
    }

    #[test]
    fn axis_detection_is_exact(seed in any::<u64>(), n in 1usize..=4, m in 1usize..=6, sp in any::<bool>()) {
        let mut rng = seeded(seed);
        let e = if sp { random_single_peaked(n, m, &mut rng).unwrap().0 } else { random_election(n, m, &mut rng).unwrap() };
        let exists = permutations(m).into_iter().any(|o| {
            let axis = proprep_core::SocietalAxis::new(o).unwrap();
            e.votes().iter().all(|v| check_compatible(v, &axis))
        });
        match detect_axis(&e) {
            Some(axis) => {
                prop_assert!(e.votes().iter().all(|v| check_compatible(v, &axis)));
                prop_assert!(axis.order().first() <= axis.order().last());
            }
            None => prop_assert!(!exists),
        }
    }

    #[test]
    fn single_peaked_rows_are_troughed_and_mirror_safe(p in params(8, 8), bound in 0u64..4) {
        let inst = build((p.0, p.1, p.2, p.3, p.4, true), Rule::Cc, Objective::Sum);
        let axis = detect_axis(&inst.election).unwrap();
        let flipped = axis.reversed();
        prop_assert!(check_single_troughed(&inst.matrix, &axis));
        prop_assert!(check_single_troughed(&inst.matrix, &flipped));
        let a = solve_cc_sum_sp(&inst, &axis).unwrap().value;
        prop_assert_eq!(a, solve_cc_sum_sp(&inst, &flipped).unwrap().value);
        let mm = inst.with_rule(Rule::Cc, Objective::Minimax).with_bound(bound);
        prop_assert_eq!(
            solve_cc_minimax_sp(&mm, &axis).unwrap().is_some(),
            solve_cc_minimax_sp(&mm, &flipped).unwrap().is_some()
        );
    }

    #[test]
    fn auto_matches_enumeration(p in params(8, 8), monroe in any::<bool>(), minimax in any::<bool>()) {
        let rule = if monroe { Rule::Monroe } else { Rule::Cc };
        let obj = if minimax { Objective::Minimax } else { Objective::Sum };
        let inst = build(p, rule, obj);
        let b = SolverBudget::default();
        let s = optimize(&inst, auto_solver(&inst, Mode::Optimize, &b), &b).unwrap();
        prop_assert_eq!(s.value, solve_subset_enum(&inst).unwrap().value);
        prop_assert!(verify_solution(&inst.with_bound(s.value), &s).unwrap().passed());
    }
}

#[test]
fn cyclic_profile_has_no_axis_among_all_orders() {
    let e = Election::from_votes(3, vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]]).unwrap();
    assert!(detect_axis(&e).is_none());
    assert_eq!(permutations(3).len(), 6);
}

#[test]
fn approval_must_be_a_prefix() {
    let e = Election::from_votes(3, vec![vec![0, 1, 2]]).unwrap();
    assert!(build_misrep(&e, &MisrepSpec::Approval(vec![vec![1]])).is_err());
    assert!(build_misrep(&e, &MisrepSpec::Approval(vec![vec![0, 1]])).is_ok());
}
