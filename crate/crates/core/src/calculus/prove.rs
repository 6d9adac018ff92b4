//! Bounded proof search that emits checkable Fitch scripts.

use std::collections::{BTreeSet, HashMap};

use super::ipc::{self, Arena, Id, Node, Proof, BOT};
use super::schemas::hypotheses;
use super::script::{Justification, ProofScript, Step};
use super::{CalculusError, Theory, DEFAULT_BUDGET};
use crate::syntax::Formula;

/// Searches for a proof of `goal` from the theory and its schema instances.
/// `Ok(None)` means no proof at this depth, not that the goal is refutable.
pub fn prove(th: &Theory, goal: &Formula, depth: usize) -> Result<Option<ProofScript>, CalculusError> {
    prove_with(th, "goal", goal, depth, DEFAULT_BUDGET)
}

pub fn prove_with(
    th: &Theory,
    label: &str,
    goal: &Formula,
    depth: usize,
    budget: u64,
) -> Result<Option<ProofScript>, CalculusError> {
    if th.reflection {
        return Err(CalculusError::ReflectionEnabled);
    }
    let hyps = hypotheses(th, goal, depth.max(1));
    let script = ipc::with_big_stack(|| {
        let mut arena = Arena::new();
        let ids: Vec<Id> = hyps.iter().map(|(f, _)| arena.intern(f)).collect();
        let goal_id = arena.intern(goal);
        let found = ipc::Search::new(&mut arena, budget).run(&ids, goal_id);
        let proof = match found {
            Err(ipc::BudgetExceeded) => return Err(CalculusError::BudgetExceeded(budget)),
            Ok(None) => return Ok(None),
            Ok(Some(p)) => p,
        };
        let mut em = Emitter { arena: &mut arena, steps: Vec::new(), depth: 0, discharges: HashMap::new() };
        let mut ctx = HashMap::new();
        for ((f, j), id) in hyps.iter().zip(&ids) {
            if !ctx.contains_key(id) {
                let index = em.push(f.clone(), j.clone(), vec![]);
                ctx.insert(*id, index);
            }
        }
        let root = em.emit(&proof, &ctx, goal_id);
        Ok(Some(em.finish(label, root)))
    })?;
    if let Some(ps) = &script {
        debug_assert_eq!(super::check_proof_of(th, ps, goal), super::CheckVerdict::Valid, "{ps}");
    }
    Ok(script)
}

struct Emitter<'a> {
    arena: &'a mut Arena,
    steps: Vec<Step>,
    depth: usize,
    /// imp-intro step index to the assumption it discharges
    discharges: HashMap<usize, usize>,
}

type Ctx = HashMap<Id, usize>;

impl Emitter<'_> {
    fn push(&mut self, formula: Formula, justification: Justification, premises: Vec<usize>) -> usize {
        let index = self.steps.len() + 1;
        self.steps.push(Step { index, formula, justification, premises, depth: self.depth });
        index
    }

    fn derive(&mut self, id: Id, justification: Justification, premises: Vec<usize>) -> usize {
        let f = self.arena.formula(id);
        self.push(f, justification, premises)
    }

    fn assume(&mut self, id: Id) -> usize {
        self.depth += 1;
        self.derive(id, Justification::Assume, vec![])
    }

    /// Closes the innermost assumption `a` with the conclusion at step `c`.
    fn discharge(&mut self, a: usize, c: usize) -> usize {
        let f = Formula::imp(self.steps[a - 1].formula.clone(), self.steps[c - 1].formula.clone());
        self.depth -= 1;
        let i = self.push(f, Justification::ImpIntro, vec![c]);
        self.discharges.insert(i, a);
        i
    }

    /// `a -> goal` from a subproof under assumption `a`.
    fn hypothetical(&mut self, proof: &Proof, ctx: &Ctx, a: Id, goal: Id) -> usize {
        let s = self.assume(a);
        let mut inner = ctx.clone();
        inner.insert(a, s);
        let c = self.emit(proof, &inner, goal);
        self.discharge(s, c)
    }

    fn mk(&mut self, node: Node) -> Id {
        self.arena.mk(node)
    }

    /// Emits steps deriving `goal` from the visible steps in `ctx`; returns the
    /// index of the concluding step.
    fn emit(&mut self, proof: &Proof, ctx: &Ctx, goal: Id) -> usize {
        match proof {
            Proof::Axiom => ctx[&goal],
            Proof::BotLeft => {
                if goal == BOT {
                    ctx[&BOT]
                } else {
                    self.derive(goal, Justification::Efq, vec![ctx[&BOT]])
                }
            }
            Proof::AndLeft { hyp, next } => {
                let Node::And(a, b) = self.arena.node(*hyp) else { unreachable!() };
                let h = ctx[hyp];
                let mut ctx = ctx.clone();
                let l = self.derive(a, Justification::AndElimL, vec![h]);
                ctx.insert(a, l);
                let r = self.derive(b, Justification::AndElimR, vec![h]);
                ctx.insert(b, r);
                self.emit(next, &ctx, goal)
            }
            Proof::DropImp { next } => self.emit(next, ctx, goal),
            Proof::ModusPonens { imp, next } => {
                let Node::Imp(a, b) = self.arena.node(*imp) else { unreachable!() };
                let s = self.derive(b, Justification::ImpElim, vec![ctx[imp], ctx[&a]]);
                let mut ctx = ctx.clone();
                ctx.insert(b, s);
                self.emit(next, &ctx, goal)
            }
            Proof::ImpAnd { imp, next } => {
                let Node::Imp(cd, b) = self.arena.node(*imp) else { unreachable!() };
                let Node::And(c, d) = self.arena.node(cd) else { unreachable!() };
                let db = self.mk(Node::Imp(d, b));
                let cdb = self.mk(Node::Imp(c, db));
                let sc = self.assume(c);
                let sd = self.assume(d);
                let conj = self.derive(cd, Justification::AndIntro, vec![sc, sd]);
                let sb = self.derive(b, Justification::ImpElim, vec![ctx[imp], conj]);
                let inner = self.discharge(sd, sb);
                let outer = self.discharge(sc, inner);
                let mut ctx = ctx.clone();
                ctx.insert(cdb, outer);
                self.emit(next, &ctx, goal)
            }
            Proof::ImpOr { imp, next } => {
                let Node::Imp(cd, b) = self.arena.node(*imp) else { unreachable!() };
                let Node::Or(c, d) = self.arena.node(cd) else { unreachable!() };
                let mut ctx = ctx.clone();
                for (side, rule) in [(c, Justification::OrIntroL), (d, Justification::OrIntroR)] {
                    let s = self.assume(side);
                    let disj = self.derive(cd, rule, vec![s]);
                    let sb = self.derive(b, Justification::ImpElim, vec![ctx[imp], disj]);
                    let bi = self.discharge(s, sb);
                    ctx.insert(self.arena.mk(Node::Imp(side, b)), bi);
                }
                self.emit(next, &ctx, goal)
            }
            Proof::ImpImp { imp, left, right } => {
                let Node::Imp(cd, b) = self.arena.node(*imp) else { unreachable!() };
                let Node::Imp(c, d) = self.arena.node(cd) else { unreachable!() };
                let db = self.mk(Node::Imp(d, b));
                // D -> B, since from D we get C -> D
                let sd = self.assume(d);
                let sc = self.assume(c);
                let cdi = self.discharge(sc, sd);
                let sb = self.derive(b, Justification::ImpElim, vec![ctx[imp], cdi]);
                let dbi = self.discharge(sd, sb);
                let mut lctx = ctx.clone();
                lctx.insert(db, dbi);
                let k = self.emit(left, &lctx, cd);
                let sb = self.derive(b, Justification::ImpElim, vec![ctx[imp], k]);
                let mut rctx = ctx.clone();
                rctx.insert(b, sb);
                self.emit(right, &rctx, goal)
            }
            Proof::AndRight { left, right } => {
                let Node::And(a, b) = self.arena.node(goal) else { unreachable!() };
                let l = self.emit(left, ctx, a);
                let r = self.emit(right, ctx, b);
                self.derive(goal, Justification::AndIntro, vec![l, r])
            }
            Proof::OrRight { right, sub } => {
                let Node::Or(a, b) = self.arena.node(goal) else { unreachable!() };
                if *right {
                    let s = self.emit(sub, ctx, b);
                    self.derive(goal, Justification::OrIntroR, vec![s])
                } else {
                    let s = self.emit(sub, ctx, a);
                    self.derive(goal, Justification::OrIntroL, vec![s])
                }
            }
            Proof::ImpRight { sub } => {
                let Node::Imp(a, b) = self.arena.node(goal) else { unreachable!() };
                self.hypothetical(sub, ctx, a, b)
            }
            Proof::OrLeft { hyp, left, right } => {
                let Node::Or(a, b) = self.arena.node(*hyp) else { unreachable!() };
                let ag = self.hypothetical(left, ctx, a, goal);
                let bg = self.hypothetical(right, ctx, b, goal);
                self.derive(goal, Justification::OrElim, vec![ctx[hyp], ag, bg])
            }
        }
    }

    /// Keeps the steps the conclusion depends on and renumbers them.
    fn finish(self, label: &str, root: usize) -> ProofScript {
        let mut keep = BTreeSet::new();
        let mut work = vec![root];
        while let Some(i) = work.pop() {
            if !keep.insert(i) {
                continue;
            }
            work.extend(&self.steps[i - 1].premises);
            if let Some(a) = self.discharges.get(&i) {
                work.push(*a);
            }
        }
        let renumber: HashMap<usize, usize> = keep.iter().enumerate().map(|(n, i)| (*i, n + 1)).collect();
        let steps = keep
            .iter()
            .map(|i| {
                let s = &self.steps[i - 1];
                Step {
                    index: renumber[i],
                    formula: s.formula.clone(),
                    justification: s.justification.clone(),
                    premises: s.premises.iter().map(|p| renumber[p]).collect(),
                    depth: s.depth,
                }
            })
            .collect();
        ProofScript { goal_label: label.to_string(), steps }
    }
}
