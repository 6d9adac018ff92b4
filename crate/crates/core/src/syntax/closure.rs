use std::collections::BTreeSet;

use super::{Formula, SentenceSystem};

/// All subformulas of `f`, including `f`.
pub fn subformulas(f: &Formula) -> BTreeSet<Formula> {
    let mut out = BTreeSet::new();
    f.visit(&mut |g| {
        out.insert(g.clone());
    });
    out
}

/// Subformula closure of the definitional biconditionals `name <-> body`,
/// the axioms and `extra`, together with `false` and one negation of every
/// member.
pub fn closure(sys: &SentenceSystem, extra: &[Formula]) -> BTreeSet<Formula> {
    let inputs: Vec<Formula> = sys
        .definitions
        .iter()
        .map(|(name, body)| Formula::iff(Formula::atom(name.as_str()), body.clone()))
        .chain(sys.axioms.iter().cloned())
        .chain(extra.iter().cloned())
        .collect();
    let mut base = BTreeSet::new();
    for f in &inputs {
        f.visit(&mut |g| {
            base.insert(g.clone());
        });
    }
    if base.is_empty() {
        return base;
    }
    base.insert(Formula::Falsum);
    let negations: Vec<Formula> = base.iter().map(|f| Formula::neg(f.clone())).collect();
    base.extend(negations);
    base
}
