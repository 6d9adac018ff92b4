#![allow(dead_code)]

use proptest::prelude::*;
use truthbench::Formula;

pub const ATOMS: &[&str] = &["a", "b", "snow", "T", "T2", "x_1"];
pub const SENTENCES: &[&str] = &["s", "L", "K"];

pub fn leaf() -> impl Strategy<Value = Formula> {
    prop_oneof![
        Just(Formula::Falsum),
        proptest::sample::select(ATOMS).prop_map(Formula::atom),
        proptest::sample::select(SENTENCES).prop_map(Formula::truth_of),
        (1u32..4, proptest::sample::select(SENTENCES)).prop_map(|(k, s)| Formula::truth_at(k, s)),
        proptest::sample::select(SENTENCES).prop_map(Formula::truth_unknown),
    ]
}

/// Formulas of nesting depth at most `depth` over every constructor.
pub fn formula(leaves: impl Strategy<Value = Formula> + 'static, depth: u32) -> BoxedStrategy<Formula> {
    leaves
        .prop_recursive(depth, 64, 2, |inner| {
            prop_oneof![
                inner.clone().prop_map(Formula::boxed),
                (inner.clone(), inner.clone()).prop_map(|(l, r)| Formula::and(l, r)),
                (inner.clone(), inner.clone()).prop_map(|(l, r)| Formula::or(l, r)),
                (inner.clone(), inner).prop_map(|(l, r)| Formula::imp(l, r)),
            ]
        })
        .boxed()
}

/// Box-free, truth-free formulas over `names`.
pub fn propositional(names: &'static [&'static str], depth: u32) -> BoxedStrategy<Formula> {
    let leaves = prop_oneof![
        1 => Just(Formula::Falsum),
        4 => proptest::sample::select(names).prop_map(Formula::atom),
    ];
    leaves
        .prop_recursive(depth, 32, 2, |inner| {
            prop_oneof![
                (inner.clone(), inner.clone()).prop_map(|(l, r)| Formula::and(l, r)),
                (inner.clone(), inner.clone()).prop_map(|(l, r)| Formula::or(l, r)),
                (inner.clone(), inner).prop_map(|(l, r)| Formula::imp(l, r)),
            ]
        })
        .boxed()
}

/// Nesting depth: leaves are 0.
pub fn depth(f: &Formula) -> usize {
    match f {
        Formula::Box(b) => 1 + depth(b),
        Formula::And(l, r) | Formula::Or(l, r) | Formula::Imp(l, r) => 1 + depth(l).max(depth(r)),
        _ => 0,
    }
}

/// Every formula of depth at most `d` over `leaves`.
pub fn enumerate(leaves: &[Formula], d: usize) -> Vec<Formula> {
    let mut all: Vec<Formula> = leaves.to_vec();
    for _ in 0..d {
        let mut next = leaves.to_vec();
        for f in &all {
            next.push(Formula::boxed(f.clone()));
        }
        for l in &all {
            for r in &all {
                next.push(Formula::and(l.clone(), r.clone()));
                next.push(Formula::or(l.clone(), r.clone()));
                next.push(Formula::imp(l.clone(), r.clone()));
            }
        }
        all = next;
    }
    all
}
