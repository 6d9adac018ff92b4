use std::collections::BTreeMap;

use proptest::prelude::*;
use truthbench::kripke::{enumerate_fixed_points, jump, least_fixed_point, Interpretation3, TruthValue3};
use truthbench::{Formula, SentenceSystem};

const NAMES: &[&str] = &["n0", "n1", "n2", "n3", "n4", "n5"];
const FACTS: &[(&str, bool)] = &[("p", true), ("q", false)];

fn body(n: usize, with_truth: bool) -> BoxedStrategy<Formula> {
    let mut leaves: Vec<BoxedStrategy<Formula>> =
        vec![Just(Formula::Falsum).boxed(), proptest::sample::select(vec!["p", "q"]).prop_map(Formula::atom).boxed()];
    if with_truth {
        leaves.push(proptest::sample::select(NAMES[..n].to_vec()).prop_map(Formula::truth_of).boxed());
        leaves.push(proptest::sample::select(NAMES[..n].to_vec()).prop_map(Formula::truth_of).boxed());
    }
    proptest::strategy::Union::new(leaves)
        .prop_recursive(3, 16, 2, |inner| {
            prop_oneof![
                (inner.clone(), inner.clone()).prop_map(|(l, r)| Formula::and(l, r)),
                (inner.clone(), inner.clone()).prop_map(|(l, r)| Formula::or(l, r)),
                (inner.clone(), inner).prop_map(|(l, r)| Formula::imp(l, r)),
            ]
        })
        .boxed()
}

fn system(with_truth: bool) -> impl Strategy<Value = SentenceSystem> {
    (1..=NAMES.len()).prop_flat_map(move |n| {
        proptest::collection::vec(body(n, with_truth), n).prop_map(|bodies| {
            let mut sys = SentenceSystem::new();
            for (name, v) in FACTS {
                sys = sys.with_fact(name, *v);
            }
            for (name, b) in NAMES.iter().zip(bodies) {
                sys = sys.with_definition(name, b);
            }
            sys
        })
    })
}

fn value() -> impl Strategy<Value = TruthValue3> {
    prop_oneof![Just(TruthValue3::T), Just(TruthValue3::F), Just(TruthValue3::U)]
}

/// A system with two interpretations `lo ⊑ hi` over its names.
fn system_with_pair() -> impl Strategy<Value = (SentenceSystem, Interpretation3, Interpretation3)> {
    system(true).prop_flat_map(|sys| {
        let n = sys.definitions.len();
        (Just(sys), proptest::collection::vec((value(), any::<bool>()), n)).prop_map(|(sys, vals)| {
            let names: Vec<&str> = sys.definitions.keys().map(String::as_str).collect();
            let hi = Interpretation3::from_pairs(names.iter().copied().zip(vals.iter().map(|(v, _)| *v)));
            let lo = Interpretation3::from_pairs(
                names.iter().copied().zip(vals.iter().map(|(v, keep)| if *keep { *v } else { TruthValue3::U })),
            );
            (sys, lo, hi)
        })
    })
}

/// Strong Kleene, written directly from the truth tables.
fn kleene(f: &Formula, i: &BTreeMap<String, TruthValue3>) -> TruthValue3 {
    use TruthValue3::*;
    match f {
        Formula::Falsum => F,
        Formula::Atom(a) => FACTS.iter().find(|(n, _)| n == a).map(|(_, v)| if *v { T } else { F }).unwrap(),
        Formula::TruthOf(s) => i[s],
        Formula::And(l, r) => match (kleene(l, i), kleene(r, i)) {
            (F, _) | (_, F) => F,
            (T, T) => T,
            _ => U,
        },
        Formula::Or(l, r) => match (kleene(l, i), kleene(r, i)) {
            (T, _) | (_, T) => T,
            (F, F) => F,
            _ => U,
        },
        Formula::Imp(l, r) => match (kleene(l, i), kleene(r, i)) {
            (F, _) | (_, T) => T,
            (T, F) => F,
            _ => U,
        },
        other => panic!("not generated: {other}"),
    }
}

fn classical(f: &Formula) -> bool {
    match f {
        Formula::Falsum => false,
        Formula::Atom(a) => FACTS.iter().find(|(n, _)| n == a).unwrap().1,
        Formula::And(l, r) => classical(l) && classical(r),
        Formula::Or(l, r) => classical(l) || classical(r),
        Formula::Imp(l, r) => !classical(l) || classical(r),
        other => panic!("not generated: {other}"),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1500))]

    #[test]
    fn jump_is_monotone((sys, lo, hi) in system_with_pair()) {
        prop_assert!(lo.below(&hi));
        let (jlo, jhi) = (jump(&sys, &lo).unwrap(), jump(&sys, &hi).unwrap());
        prop_assert!(jlo.below(&jhi), "{lo} ⊑ {hi} but {jlo} ⋢ {jhi}");
    }

    #[test]
    fn jump_matches_the_kleene_tables((sys, _, hi) in system_with_pair()) {
        let j = jump(&sys, &hi).unwrap();
        for (name, b) in &sys.definitions {
            prop_assert_eq!(j.get(name), Some(kleene(b, &hi.assignment)));
        }
    }

    #[test]
    fn lfp_is_least_and_fixed_points_are_fixed(sys in system(true)) {
        let (lfp, _) = least_fixed_point(&sys).unwrap();
        let all = enumerate_fixed_points(&sys, 12).unwrap();
        prop_assert!(all.contains(&lfp));
        for i in &all {
            prop_assert!(lfp.below(i));
            prop_assert_eq!(&jump(&sys, i).unwrap(), i);
        }
        prop_assert!(all.windows(2).all(|w| w[0] < w[1]), "lexicographic order");
    }

    #[test]
    fn stages_are_sound(sys in system(true)) {
        let (lfp, trace) = least_fixed_point(&sys).unwrap();
        prop_assert!(trace.stages[0].assignment.values().all(|v| *v == TruthValue3::U));
        prop_assert!(trace.stages.len() <= sys.definitions.len() + 2);
        prop_assert_eq!(trace.last(), &lfp);
        prop_assert_eq!(&jump(&sys, &lfp).unwrap(), &lfp);
        for w in trace.stages.windows(2) {
            prop_assert!(w[0].below(&w[1]));
        }
        for s in &trace.stages {
            prop_assert!(s.below(&lfp));
        }
    }

    #[test]
    fn classical_agreement(sys in system(false)) {
        let (lfp, trace) = least_fixed_point(&sys).unwrap();
        prop_assert_eq!(trace.stages.len(), 2);
        for (name, b) in &sys.definitions {
            prop_assert_eq!(trace.stages[1].get(name), Some(classical(b).into()));
            prop_assert_eq!(lfp.get(name), Some(classical(b).into()));
        }
    }
}

/// Brute force over all 3^n candidates, independent of the library's odometer.
#[test]
fn enumeration_agrees_with_brute_force_on_small_systems() {
    let runner_cases = [
        ("n0", Formula::neg(Formula::truth_of("n0"))),
        ("n1", Formula::truth_of("n1")),
        ("n2", Formula::or(Formula::truth_of("n0"), Formula::truth_of("n1"))),
    ];
    let mut sys = SentenceSystem::new();
    for (n, b) in &runner_cases {
        sys = sys.with_definition(n, b.clone());
    }
    let names: Vec<String> = sys.definitions.keys().cloned().collect();
    let values = [TruthValue3::F, TruthValue3::T, TruthValue3::U];
    let mut expected = Vec::new();
    for code in 0..27usize {
        let assignment: BTreeMap<String, TruthValue3> =
            names.iter().enumerate().map(|(k, n)| (n.clone(), values[(code / 3usize.pow(2 - k as u32)) % 3])).collect();
        if sys.definitions.iter().all(|(n, b)| kleene(b, &assignment) == assignment[n]) {
            expected.push(Interpretation3 { assignment });
        }
    }
    assert_eq!(enumerate_fixed_points(&sys, 12).unwrap(), expected);
    // n0 is the liar, n1 the truth-teller; n2 must follow n1
    assert_eq!(expected.len(), 3);
}
