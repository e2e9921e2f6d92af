use proprep_cli::commands::{generate, Family, GenOptions};
use proprep_cli::{parse_instance, render_instance};
use proprep_core::{Objective, Rule};
use proptest::prelude::*;

fn family() -> impl Strategy<Value = Family> {
    prop_oneof![
        Just(Family::Random),
        Just(Family::SinglePeaked),
        Just(Family::HsApproval),
        Just(Family::HsBorda),
        Just(Family::VcMinimax),
        Just(Family::Rx3cMonroe),
    ]
}

fn options(f: Family, seed: u64, a: usize, b: usize, approval: bool, monroe: bool, minimax: bool) -> GenOptions {
    let mut o = GenOptions {
        seed,
        approval,
        rule: Some(if monroe { Rule::Monroe } else { Rule::Cc }),
        objective: Some(if minimax { Objective::Minimax } else { Objective::Sum }),
        ..Default::default()
    };
    match f {
        Family::Random | Family::SinglePeaked => {
            o.n = Some(a);
            o.m = Some(b);
            o.k = Some(1 + seed as usize % a.min(b));
            o.bound = Some(seed % 5);
        }
        Family::HsApproval | Family::HsBorda => {
            o.n = Some(1 + a % 4);
            o.m = Some(1 + b % 4);
            o.k = Some(1 + seed as usize % (1 + b % 4));
        }
        Family::VcMinimax => {
            o.n = Some(1 + a % 5);
            o.m = Some(6);
            o.k = Some(1);
            o.bound = Some(1 + seed % 3);
        }
        Family::Rx3cMonroe => o.n = Some(3 * (1 + a % 3)),
    }
    o
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn parse_inverts_render(
        f in family(),
        seed in any::<u64>(),
        a in 1usize..=9,
        b in 1usize..=9,
        approval in any::<bool>(),
        monroe in any::<bool>(),
        minimax in any::<bool>(),
    ) {
        let inst = generate(f, &options(f, seed, a, b, approval, monroe, minimax)).unwrap();
        let text = render_instance(&inst).unwrap();
        let back = parse_instance(&text).unwrap();
        prop_assert_eq!(&back, &inst);
        prop_assert_eq!(render_instance(&back).unwrap(), text);
    }
}
