use std::collections::BTreeSet;

use super::script::Justification;
use super::Theory;
use crate::syntax::{closure, Formula};

/// Unfolded formulas larger than this are not added to the closure.
const UNFOLD_LIMIT: usize = 256;

/// Hypotheses available to the prover for `goal`: the definitional
/// biconditionals, the axioms, co-reflection over the closure and K.
pub fn instantiate_schemas(th: &Theory, goal: &Formula) -> BTreeSet<Formula> {
    instantiate_schemas_at(th, goal, 1)
}

/// As [`instantiate_schemas`], with the closure seeded by up to `depth - 1`
/// rounds of unfolding definitions inside the goal and the definition bodies.
pub fn instantiate_schemas_at(th: &Theory, goal: &Formula, depth: usize) -> BTreeSet<Formula> {
    let mut out: BTreeSet<Formula> = th.biconditionals().into_iter().collect();
    out.extend(hypotheses(th, goal, depth).into_iter().map(|(f, _)| f));
    out
}

/// The same hypotheses as the prover sees them, each with the justification
/// that introduces it. Definitions come in their two directions.
pub(crate) fn hypotheses(th: &Theory, goal: &Formula, depth: usize) -> Vec<(Formula, Justification)> {
    let mut out = Vec::new();
    let mut seen = BTreeSet::new();
    let mut push = |f: Formula, j: Justification, out: &mut Vec<(Formula, Justification)>| {
        if seen.insert(f.clone()) {
            out.push((f, j));
        }
    };
    for (name, body) in &th.definitions {
        let sentence = Formula::atom(name.as_str());
        push(Formula::imp(sentence.clone(), body.clone()), Justification::DefL(name.clone()), &mut out);
        push(Formula::imp(body.clone(), sentence), Justification::DefR(name.clone()), &mut out);
    }
    for a in &th.axioms {
        push(a.clone(), Justification::Premise, &mut out);
    }
    let cl = closure(&th.to_system(), &seeds(th, goal, depth));
    for f in &cl {
        push(Formula::imp(f.clone(), Formula::boxed(f.clone())), Justification::CoReflection, &mut out);
    }
    // every `box (A -> B)` that occurs in the closure or boxes one of its members
    let boxed_imps: BTreeSet<(Formula, Formula)> = cl
        .iter()
        .filter_map(|f| match f {
            Formula::Imp(a, b) => Some(((**a).clone(), (**b).clone())),
            _ => None,
        })
        .collect();
    for (a, b) in boxed_imps {
        let k = Formula::imp(
            Formula::boxed(Formula::imp(a.clone(), b.clone())),
            Formula::imp(Formula::boxed(a), Formula::boxed(b)),
        );
        push(k, Justification::KDist, &mut out);
    }
    out
}

fn seeds(th: &Theory, goal: &Formula, depth: usize) -> Vec<Formula> {
    let mut seeds = vec![goal.clone()];
    let mut frontier: Vec<Formula> = std::iter::once(goal.clone()).chain(th.definitions.values().cloned()).collect();
    for _ in 1..depth {
        frontier = frontier.iter().map(|f| unfold(th, f)).filter(|f| f.size() <= UNFOLD_LIMIT).collect();
        seeds.extend(frontier.iter().cloned());
    }
    seeds
}

/// Replaces each defined sentence by its body, once.
fn unfold(th: &Theory, f: &Formula) -> Formula {
    f.map(&mut |g| match g {
        Formula::Atom(n) => th.definitions.get(n).cloned(),
        _ => None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse_formula;

    fn f(s: &str) -> Formula {
        parse_formula(s).unwrap()
    }

    #[test]
    fn liar_instances() {
        let th = Theory::new().with_definition("L", f("~box L"));
        let set = instantiate_schemas(&th, &f("~L"));
        assert!(set.contains(&f("L -> box L")));
        assert!(set.contains(&f("L <-> ~box L")));
        assert!(set.contains(&f("L -> ~box L")));
    }

    #[test]
    fn box_negation_liar_instances() {
        let th = Theory::new().with_definition("L2", f("box ~L2"));
        let set = instantiate_schemas(&th, &f("L2 -> box false"));
        assert!(set.contains(&f("L2 -> box L2")));
        assert!(set.contains(&f("box ~L2 -> box L2 -> box false")));
        assert!(set.contains(&f("L2 <-> box ~L2")));
    }

    #[test]
    fn base_case() {
        let set = instantiate_schemas(&Theory::new(), &f("a"));
        for g in ["a -> box a", "~a -> box ~a", "false -> box false", "~false -> box ~false"] {
            assert!(set.contains(&f(g)), "{g}");
        }
        assert!(set.contains(&f("box ~a -> box a -> box false")));
    }

    #[test]
    fn unfolding_grows_the_closure() {
        let th = Theory::new().with_definition("L", f("~box L"));
        let one = instantiate_schemas_at(&th, &f("L"), 1);
        let two = instantiate_schemas_at(&th, &f("L"), 2);
        assert!(one.is_subset(&two));
        assert!(two.contains(&f("~box ~box L -> box ~box ~box L")));
    }
}
