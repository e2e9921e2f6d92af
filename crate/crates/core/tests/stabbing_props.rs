use proprep_core::stabbing::{brute_force_stabbing, check_cover, normalize_lif, solve_max_bal_1rs, Interval, StabbingInstance};
use proptest::prelude::*;

fn instance() -> impl Strategy<Value = StabbingInstance> {
    (1usize..=6, 1usize..=3, 0usize..=3)
        .prop_flat_map(|(m, k, extra)| {
            let iv = (1..=m, 1..=m).prop_map(|(a, b)| Interval::new(a.min(b), a.max(b)));
            (Just(m), Just(k), Just(extra), prop::collection::vec(iv, 0..=8))
        })
        .prop_map(|(m, k, extra, ivs)| {
            let pop = (ivs.len() + extra).max(k);
            StabbingInstance::with_population(m, k, pop, ivs).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(600))]

    #[test]
    fn dp_matches_brute_force(inst in instance()) {
        let (v, cover) = solve_max_bal_1rs(&inst).unwrap();
        prop_assert_eq!(v, brute_force_stabbing(&inst).unwrap());
        prop_assert_eq!(check_cover(&inst, &cover).unwrap(), v);
        let lif = normalize_lif(&inst, &cover).unwrap();
        prop_assert_eq!(lif.covered(), v);
    }
}
