//! The constructive provability calculus.
//!
//! `box A` reads "A has a proof". Theories carry self-referential
//! definitions, used in both directions, and axioms. Every instance of
//! `A -> box A` is available; `box A` to `A` is at most a rule on top-level
//! theorems and is off by default.

mod check;
mod ipc;
mod prove;
mod schemas;
pub mod script;

use indexmap::IndexMap;
use thiserror::Error;

use crate::syntax::{Formula, SentenceSystem};

pub use check::{check_proof, check_proof_of, CheckVerdict};
pub use prove::{prove, prove_with};
pub use schemas::{instantiate_schemas, instantiate_schemas_at};
pub use script::{Justification, ProofScript, ScriptError, Step};

/// Node budget used when none is configured.
pub const DEFAULT_BUDGET: u64 = 2_000_000;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Theory {
    pub definitions: IndexMap<String, Formula>,
    pub axioms: Vec<Formula>,
    pub reflection: bool,
}

impl From<&SentenceSystem> for Theory {
    fn from(sys: &SentenceSystem) -> Self {
        Theory {
            definitions: sys.definitions.clone(),
            axioms: sys.axioms.clone(),
            reflection: sys.options.reflection(),
        }
    }
}

impl Theory {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_definition(mut self, name: &str, body: Formula) -> Self {
        self.definitions.insert(name.to_string(), body);
        self
    }

    pub fn with_axiom(mut self, axiom: Formula) -> Self {
        self.axioms.push(axiom);
        self
    }

    /// `name <-> body` for every definition.
    pub fn biconditionals(&self) -> Vec<Formula> {
        self.definitions
            .iter()
            .map(|(name, body)| Formula::iff(Formula::atom(name.as_str()), body.clone()))
            .collect()
    }

    fn to_system(&self) -> SentenceSystem {
        SentenceSystem { definitions: self.definitions.clone(), axioms: self.axioms.clone(), ..Default::default() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sequent {
    pub hypotheses: Vec<Formula>,
    pub goal: Formula,
}

impl Sequent {
    pub fn new(hypotheses: Vec<Formula>, goal: Formula) -> Self {
        Sequent { hypotheses, goal }
    }

    pub fn theorem(goal: Formula) -> Self {
        Sequent { hypotheses: Vec::new(), goal }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IpcVerdict {
    Provable,
    Unprovable,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Consistency {
    Consistent,
    Inconsistent,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WeakFalsity {
    WeaklyFalse,
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum CalculusError {
    #[error("search budget of {0} nodes exceeded")]
    BudgetExceeded(u64),
    #[error("the reflection rule is enabled; proof search and the consistency check require it off")]
    ReflectionEnabled,
}

/// Decides intuitionistic provability of the sequent with the default budget.
pub fn ipc_decide(s: &Sequent) -> Result<IpcVerdict, CalculusError> {
    ipc_decide_with(s, DEFAULT_BUDGET)
}

pub fn ipc_decide_with(s: &Sequent, budget: u64) -> Result<IpcVerdict, CalculusError> {
    ipc::with_big_stack(|| {
        let mut arena = ipc::Arena::new();
        let hyps: Vec<_> = s.hypotheses.iter().map(|h| arena.intern(h)).collect();
        let goal = arena.intern(&s.goal);
        match ipc::Search::new(&mut arena, budget).run(&hyps, goal) {
            Ok(Some(_)) => Ok(IpcVerdict::Provable),
            Ok(None) => Ok(IpcVerdict::Unprovable),
            Err(ipc::BudgetExceeded) => Err(CalculusError::BudgetExceeded(budget)),
        }
    })
}

/// Replaces every `box G` by `true`.
pub fn erase_box(f: &Formula) -> Formula {
    f.map(&mut |g| match g {
        Formula::Box(_) => Some(Formula::verum()),
        _ => None,
    })
}

/// Consistent iff the erased definitions and axioms do not derive `false`.
pub fn consistency_check(th: &Theory) -> Result<Consistency, CalculusError> {
    consistency_check_with(th, DEFAULT_BUDGET)
}

pub fn consistency_check_with(th: &Theory, budget: u64) -> Result<Consistency, CalculusError> {
    if th.reflection {
        return Err(CalculusError::ReflectionEnabled);
    }
    let hypotheses = th.biconditionals().iter().chain(&th.axioms).map(erase_box).collect();
    Ok(match ipc_decide_with(&Sequent::new(hypotheses, Formula::Falsum), budget)? {
        IpcVerdict::Provable => Consistency::Inconsistent,
        IpcVerdict::Unprovable => Consistency::Consistent,
    })
}

/// `f` is weakly false when `f -> box false` is provable.
pub fn weak_falsity(th: &Theory, f: &Formula, depth: usize) -> Result<WeakFalsity, CalculusError> {
    let goal = Formula::imp(f.clone(), Formula::boxed(Formula::Falsum));
    Ok(match prove(th, &goal, depth)? {
        Some(_) => WeakFalsity::WeaklyFalse,
        None => WeakFalsity::Unknown,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse_formula;

    fn f(s: &str) -> Formula {
        parse_formula(s).unwrap()
    }

    fn decide(hyps: &[&str], goal: &str) -> IpcVerdict {
        ipc_decide(&Sequent::new(hyps.iter().map(|h| f(h)).collect(), f(goal))).unwrap()
    }

    #[test]
    fn decides_small_sequents() {
        assert_eq!(decide(&[], "a -> a"), IpcVerdict::Provable);
        assert_eq!(decide(&[], "((a -> b) -> a) -> a"), IpcVerdict::Unprovable);
        assert_eq!(decide(&[], "~~(a | ~a)"), IpcVerdict::Provable);
        assert_eq!(decide(&[], "a | ~a"), IpcVerdict::Unprovable);
        assert_eq!(decide(&["a", "a -> b"], "b"), IpcVerdict::Provable);
        assert_eq!(decide(&["box a"], "a"), IpcVerdict::Unprovable);
        assert_eq!(decide(&[], "~~~a -> ~a"), IpcVerdict::Provable);
        assert_eq!(decide(&[], "~~a -> a"), IpcVerdict::Unprovable);
    }

    #[test]
    fn tiny_budget_is_reported() {
        let s = Sequent::theorem(f("~~(a | ~a)"));
        assert_eq!(ipc_decide_with(&s, 2), Err(CalculusError::BudgetExceeded(2)));
    }

    #[test]
    fn erasure() {
        assert_eq!(erase_box(&f("box ~L2")), Formula::verum());
        assert_eq!(erase_box(&f("a & box b")), Formula::and(f("a"), Formula::verum()));
        assert_eq!(erase_box(&f("a")), f("a"));
    }

    #[test]
    fn consistency_verdicts() {
        let liar = Theory::new().with_definition("L", f("~box L"));
        assert_eq!(consistency_check(&liar), Ok(Consistency::Consistent));
        let absurd = Theory::new().with_axiom(Formula::Falsum);
        assert_eq!(consistency_check(&absurd), Ok(Consistency::Inconsistent));
        let global = Theory::new().with_definition("Lam", f("~T(Lam)")).with_axiom(f("T(Lam) <-> Lam"));
        assert_eq!(consistency_check(&global), Ok(Consistency::Inconsistent));
        let mut reflective = liar.clone();
        reflective.reflection = true;
        assert_eq!(consistency_check(&reflective), Err(CalculusError::ReflectionEnabled));
    }

    #[test]
    fn weak_falsity_verdicts() {
        let l2 = Theory::new().with_definition("L2", f("box ~L2"));
        assert_eq!(weak_falsity(&l2, &f("L2"), 1), Ok(WeakFalsity::WeaklyFalse));
        let global = Theory::new().with_definition("Lam", f("~T(Lam)")).with_axiom(f("box (T(Lam) <-> Lam)"));
        assert_eq!(weak_falsity(&global, &Formula::verum(), 1), Ok(WeakFalsity::WeaklyFalse));
        assert_eq!(weak_falsity(&Theory::new(), &f("a"), 1), Ok(WeakFalsity::Unknown));
    }
}
