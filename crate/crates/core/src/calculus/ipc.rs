//! Decision procedure for intuitionistic propositional logic.
//!
//! Dyckhoff's contraction-free calculus G4ip over hash-consed formulas.
//! `box G` and the truth predicates are opaque atoms here. Invertible rules
//! are applied eagerly; the non-invertible choices (right disjunction and the
//! nested-implication left rule) are backtracked over. Sequents that have a
//! classical countermodel are cut off early, which is sound because every
//! intuitionistic theorem is a classical one.

use std::collections::{HashMap, HashSet};
use std::rc::Rc;

use varisat::{ExtendFormula, Lit, Solver};

use crate::syntax::Formula;

pub(crate) type Id = u32;

pub(crate) const BOT: Id = 0;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub(crate) enum Node {
    Bot,
    Atom(u32),
    And(Id, Id),
    Or(Id, Id),
    Imp(Id, Id),
}

#[derive(Debug)]
pub(crate) struct Arena {
    nodes: Vec<Node>,
    lookup: HashMap<Node, Id>,
    atoms: Vec<Formula>,
    atom_lookup: HashMap<Formula, u32>,
}

impl Arena {
    pub(crate) fn new() -> Self {
        let mut arena =
            Arena { nodes: Vec::new(), lookup: HashMap::new(), atoms: Vec::new(), atom_lookup: HashMap::new() };
        arena.mk(Node::Bot);
        arena
    }

    pub(crate) fn mk(&mut self, node: Node) -> Id {
        if let Some(id) = self.lookup.get(&node) {
            return *id;
        }
        let id = self.nodes.len() as Id;
        self.nodes.push(node);
        self.lookup.insert(node, id);
        id
    }

    pub(crate) fn node(&self, id: Id) -> Node {
        self.nodes[id as usize]
    }

    pub(crate) fn intern(&mut self, f: &Formula) -> Id {
        match f {
            Formula::Falsum => BOT,
            Formula::And(l, r) => {
                let (l, r) = (self.intern(l), self.intern(r));
                self.mk(Node::And(l, r))
            }
            Formula::Or(l, r) => {
                let (l, r) = (self.intern(l), self.intern(r));
                self.mk(Node::Or(l, r))
            }
            Formula::Imp(l, r) => {
                let (l, r) = (self.intern(l), self.intern(r));
                self.mk(Node::Imp(l, r))
            }
            atomic => {
                let next = self.atoms.len() as u32;
                let a = *self.atom_lookup.entry(atomic.clone()).or_insert(next);
                if a == next {
                    self.atoms.push(atomic.clone());
                }
                self.mk(Node::Atom(a))
            }
        }
    }

    pub(crate) fn formula(&self, id: Id) -> Formula {
        match self.node(id) {
            Node::Bot => Formula::Falsum,
            Node::Atom(a) => self.atoms[a as usize].clone(),
            Node::And(l, r) => Formula::and(self.formula(l), self.formula(r)),
            Node::Or(l, r) => Formula::or(self.formula(l), self.formula(r)),
            Node::Imp(l, r) => Formula::imp(self.formula(l), self.formula(r)),
        }
    }
}

/// A G4ip derivation. Goals are implicit: each child's goal follows from the
/// rule and the parent goal.
#[derive(Debug)]
pub(crate) enum Proof {
    Axiom,
    BotLeft,
    AndLeft { hyp: Id, next: Rc<Proof> },
    OrLeft { hyp: Id, left: Rc<Proof>, right: Rc<Proof> },
    /// `A -> B` with `A` present, replaced by `B`.
    ModusPonens { imp: Id, next: Rc<Proof> },
    /// `false -> B`, or `A -> B` with `B` present, carries no information.
    DropImp { next: Rc<Proof> },
    /// `(C & D) -> B` becomes `C -> (D -> B)`.
    ImpAnd { imp: Id, next: Rc<Proof> },
    /// `(C | D) -> B` becomes `C -> B` and `D -> B`.
    ImpOr { imp: Id, next: Rc<Proof> },
    /// `(C -> D) -> B`: prove `C -> D` from `D -> B`, then continue with `B`.
    ImpImp { imp: Id, left: Rc<Proof>, right: Rc<Proof> },
    AndRight { left: Rc<Proof>, right: Rc<Proof> },
    OrRight { right: bool, sub: Rc<Proof> },
    ImpRight { sub: Rc<Proof> },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct BudgetExceeded;

pub(crate) type Outcome = Result<Option<Rc<Proof>>, BudgetExceeded>;

pub(crate) struct Search<'a> {
    arena: &'a mut Arena,
    budget: u64,
    used: u64,
    failed: HashSet<(Vec<Id>, Id)>,
    refuted: HashMap<(Vec<Id>, Id), bool>,
}

fn with(ctx: &[Id], remove: Option<Id>, add: &[Id]) -> Vec<Id> {
    let mut out: Vec<Id> = ctx.iter().copied().filter(|h| Some(*h) != remove).collect();
    out.extend_from_slice(add);
    out.sort_unstable();
    out.dedup();
    out
}

impl<'a> Search<'a> {
    pub(crate) fn new(arena: &'a mut Arena, budget: u64) -> Self {
        Search { arena, budget, used: 0, failed: HashSet::new(), refuted: HashMap::new() }
    }

    /// Searches for a derivation of `hyps ⊢ goal`.
    pub(crate) fn run(&mut self, hyps: &[Id], goal: Id) -> Outcome {
        let ctx = with(hyps, None, &[]);
        if self.countermodel(&ctx, goal) {
            return Ok(None);
        }
        self.search(&ctx, goal)
    }

    fn search(&mut self, ctx: &[Id], goal: Id) -> Outcome {
        self.used += 1;
        if self.used > self.budget {
            return Err(BudgetExceeded);
        }
        if ctx.binary_search(&goal).is_ok() {
            return Ok(Some(Rc::new(Proof::Axiom)));
        }
        if ctx.binary_search(&BOT).is_ok() {
            return Ok(Some(Rc::new(Proof::BotLeft)));
        }
        let key = (ctx.to_vec(), goal);
        if self.failed.contains(&key) {
            return Ok(None);
        }
        let found = self.step(ctx, goal)?;
        if found.is_none() {
            self.failed.insert(key);
        }
        Ok(found)
    }

    fn step(&mut self, ctx: &[Id], goal: Id) -> Outcome {
        // invertible left rules
        for &h in ctx {
            match self.arena.node(h) {
                Node::And(a, b) => {
                    let next = self.search(&with(ctx, Some(h), &[a, b]), goal)?;
                    return Ok(next.map(|next| Rc::new(Proof::AndLeft { hyp: h, next })));
                }
                Node::Imp(a, b) if a == BOT || ctx.binary_search(&b).is_ok() => {
                    let next = self.search(&with(ctx, Some(h), &[]), goal)?;
                    return Ok(next.map(|next| Rc::new(Proof::DropImp { next })));
                }
                Node::Imp(a, b) if ctx.binary_search(&a).is_ok() => {
                    let next = self.search(&with(ctx, Some(h), &[b]), goal)?;
                    return Ok(next.map(|next| Rc::new(Proof::ModusPonens { imp: h, next })));
                }
                Node::Imp(a, b) => match self.arena.node(a) {
                    Node::And(c, d) => {
                        let db = self.arena.mk(Node::Imp(d, b));
                        let cdb = self.arena.mk(Node::Imp(c, db));
                        let next = self.search(&with(ctx, Some(h), &[cdb]), goal)?;
                        return Ok(next.map(|next| Rc::new(Proof::ImpAnd { imp: h, next })));
                    }
                    Node::Or(c, d) => {
                        let cb = self.arena.mk(Node::Imp(c, b));
                        let db = self.arena.mk(Node::Imp(d, b));
                        let next = self.search(&with(ctx, Some(h), &[cb, db]), goal)?;
                        return Ok(next.map(|next| Rc::new(Proof::ImpOr { imp: h, next })));
                    }
                    _ => {}
                },
                _ => {}
            }
        }
        // invertible right rules
        match self.arena.node(goal) {
            Node::And(a, b) => {
                let Some(left) = self.search(ctx, a)? else { return Ok(None) };
                let Some(right) = self.search(ctx, b)? else { return Ok(None) };
                return Ok(Some(Rc::new(Proof::AndRight { left, right })));
            }
            Node::Imp(a, b) => {
                let sub = self.search(&with(ctx, None, &[a]), b)?;
                return Ok(sub.map(|sub| Rc::new(Proof::ImpRight { sub })));
            }
            _ => {}
        }
        // left disjunction: invertible but branching
        for &h in ctx {
            if let Node::Or(a, b) = self.arena.node(h) {
                let Some(left) = self.search(&with(ctx, Some(h), &[a]), goal)? else { return Ok(None) };
                let Some(right) = self.search(&with(ctx, Some(h), &[b]), goal)? else { return Ok(None) };
                return Ok(Some(Rc::new(Proof::OrLeft { hyp: h, left, right })));
            }
        }
        // non-invertible choices
        if self.countermodel(ctx, goal) {
            return Ok(None);
        }
        if let Node::Or(a, b) = self.arena.node(goal) {
            for (right, side) in [(false, a), (true, b)] {
                if let Some(sub) = self.search(ctx, side)? {
                    return Ok(Some(Rc::new(Proof::OrRight { right, sub })));
                }
            }
        }
        for &h in ctx {
            let Node::Imp(cd, b) = self.arena.node(h) else { continue };
            let Node::Imp(_, d) = self.arena.node(cd) else { continue };
            // Γ, B ⊢ G is implied by the sequent, so its failure is final
            let Some(right) = self.search(&with(ctx, Some(h), &[b]), goal)? else { return Ok(None) };
            let db = self.arena.mk(Node::Imp(d, b));
            if let Some(left) = self.search(&with(ctx, Some(h), &[db]), cd)? {
                return Ok(Some(Rc::new(Proof::ImpImp { imp: h, left, right })));
            }
        }
        Ok(None)
    }

    /// True if some classical valuation makes every hypothesis true and the goal false.
    fn countermodel(&mut self, ctx: &[Id], goal: Id) -> bool {
        let key = (ctx.to_vec(), goal);
        if let Some(r) = self.refuted.get(&key) {
            return *r;
        }
        let mut solver = Solver::new();
        let mut lits: HashMap<Id, Lit> = HashMap::new();
        for &h in ctx {
            let l = self.encode(h, &mut solver, &mut lits);
            solver.add_clause(&[l]);
        }
        let g = self.encode(goal, &mut solver, &mut lits);
        solver.add_clause(&[!g]);
        let sat = solver.solve().unwrap_or(false);
        self.refuted.insert(key, sat);
        sat
    }

    fn encode(&self, id: Id, solver: &mut Solver, lits: &mut HashMap<Id, Lit>) -> Lit {
        if let Some(l) = lits.get(&id) {
            return *l;
        }
        let x = solver.new_lit();
        match self.arena.node(id) {
            Node::Bot => solver.add_clause(&[!x]),
            Node::Atom(_) => {}
            Node::And(a, b) => {
                let (a, b) = (self.encode(a, solver, lits), self.encode(b, solver, lits));
                solver.add_clause(&[!x, a]);
                solver.add_clause(&[!x, b]);
                solver.add_clause(&[x, !a, !b]);
            }
            Node::Or(a, b) => {
                let (a, b) = (self.encode(a, solver, lits), self.encode(b, solver, lits));
                solver.add_clause(&[!x, a, b]);
                solver.add_clause(&[x, !a]);
                solver.add_clause(&[x, !b]);
            }
            Node::Imp(a, b) => {
                let (a, b) = (self.encode(a, solver, lits), self.encode(b, solver, lits));
                solver.add_clause(&[!x, !a, b]);
                solver.add_clause(&[x, a]);
                solver.add_clause(&[x, !b]);
            }
        }
        lits.insert(id, x);
        x
    }
}

/// Runs `f` on a thread with a large stack; the search and proof emission
/// recurse once per rule application.
pub(crate) fn with_big_stack<T: Send>(f: impl FnOnce() -> T + Send) -> T {
    std::thread::scope(|s| {
        std::thread::Builder::new()
            .stack_size(256 * 1024 * 1024)
            .spawn_scoped(s, f)
            .expect("spawn search thread")
            .join()
            .expect("search thread panicked")
    })
}
