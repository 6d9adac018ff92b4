mod common;

use common::{enumerate, formula, leaf, ATOMS};
use proptest::prelude::*;
use truthbench::syntax::{closure, format_with, Style};
use truthbench::{format, parse_formula, Formula, SentenceSystem};

fn roundtrips(f: &Formula) {
    let text = format(f);
    assert_eq!(parse_formula(&text).as_ref(), Ok(f), "{text}");
    let plain = format_with(f, Style { resugar: false });
    assert_eq!(parse_formula(&plain).as_ref(), Ok(f), "{plain}");
    assert!(!plain.contains('~') && !plain.contains("<->") && !plain.contains("true"), "{plain}");
}

fn all_leaves() -> Vec<Formula> {
    vec![
        Formula::Falsum,
        Formula::atom("a"),
        Formula::truth_of("s"),
        Formula::truth_at(2, "s"),
        Formula::truth_unknown("s"),
    ]
}

#[test]
fn roundtrip_exhaustive_to_depth_2() {
    let all = enumerate(&all_leaves(), 2);
    assert_eq!(all.len(), 21_765);
    all.iter().for_each(roundtrips);
}

#[test]
fn roundtrip_exhaustive_to_depth_3_single_leaf() {
    let all = enumerate(&[Formula::atom("a")], 3);
    assert_eq!(all.len(), 19_765);
    all.iter().for_each(roundtrips);
}

/// Every depth-5 formula whose nodes have at most one compound child, over
/// the two leaves `a` and `false`.
#[test]
fn roundtrip_exhaustive_depth_5_spines() {
    let leaves = [Formula::atom("a"), Formula::Falsum];
    let mut level: Vec<Formula> = leaves.to_vec();
    for _ in 0..5 {
        let mut next = Vec::new();
        for f in &level {
            next.push(Formula::boxed(f.clone()));
            for l in &leaves {
                for make in [Formula::and, Formula::or, Formula::imp] {
                    next.push(make(f.clone(), l.clone()));
                    next.push(make(l.clone(), f.clone()));
                }
            }
        }
        level = next;
    }
    assert_eq!(level.len(), 13usize.pow(5) * 2);
    level.iter().for_each(roundtrips);
}

fn system_of(fs: &[Formula]) -> SentenceSystem {
    let mut sys = SentenceSystem::new();
    for (i, f) in fs.iter().enumerate() {
        if i % 2 == 0 {
            sys = sys.with_definition(&format!("d{i}"), f.clone());
        } else {
            sys = sys.with_axiom(f.clone());
        }
    }
    sys
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(4000))]

    #[test]
    fn roundtrip_random_to_depth_5(f in formula(leaf(), 5)) {
        prop_assert!(common::depth(&f) <= 5);
        roundtrips(&f);
    }

    #[test]
    fn closure_is_bounded_and_closed(fs in proptest::collection::vec(formula(leaf(), 3), 0..4), extra in formula(leaf(), 3)) {
        let sys = system_of(&fs);
        let cl = closure(&sys, std::slice::from_ref(&extra));
        let nodes: usize = sys
            .definitions
            .iter()
            .map(|(n, b)| Formula::iff(Formula::atom(n.as_str()), b.clone()).size())
            .chain(sys.axioms.iter().map(Formula::size))
            .sum::<usize>()
            + extra.size();
        prop_assert!(cl.len() <= 4 * nodes);
        let inputs: Vec<Formula> = sys.definitions.iter()
            .map(|(n, b)| Formula::iff(Formula::atom(n.as_str()), b.clone()))
            .chain(sys.axioms.iter().cloned())
            .chain([extra])
            .collect();
        for input in &inputs {
            for g in truthbench::syntax::subformulas(input) {
                prop_assert!(cl.contains(&Formula::neg(g.clone())), "{}", format(&g));
                prop_assert!(cl.contains(&g));
            }
        }
        prop_assert!(cl.contains(&Formula::Falsum));
    }
}

#[test]
fn atoms_named_like_truth_predicates_survive() {
    for a in ATOMS {
        let f = Formula::and(Formula::atom(*a), Formula::truth_at(1, "s"));
        roundtrips(&f);
    }
}
