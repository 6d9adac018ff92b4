//! Kripke's staged construction over a finite sentence system.
//!
//! A partial interpretation of the truth predicate assigns `t`, `f` or `u` to
//! every sentence name. The jump re-evaluates every definition under the
//! current interpretation with the Strong Kleene tables; iterating it from the
//! all-`u` interpretation reaches the least fixed point in at most `n + 1`
//! steps because the jump is monotone in the information order
//! (`u` below `t` and `f`).

use std::collections::BTreeMap;
use std::fmt;

use indexmap::IndexMap;
use thiserror::Error;

use crate::syntax::{Formula, SentenceSystem};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TruthValue3 {
    F,
    T,
    /// Not yet assigned.
    U,
}

impl TruthValue3 {
    pub const ALL: [TruthValue3; 3] = [TruthValue3::F, TruthValue3::T, TruthValue3::U];

    pub fn and(self, other: Self) -> Self {
        use TruthValue3::*;
        match (self, other) {
            (T, T) => T,
            (F, _) | (_, F) => F,
            _ => U,
        }
    }

    pub fn or(self, other: Self) -> Self {
        use TruthValue3::*;
        match (self, other) {
            (F, F) => F,
            (T, _) | (_, T) => T,
            _ => U,
        }
    }

    pub fn imp(self, other: Self) -> Self {
        use TruthValue3::*;
        match (self, other) {
            (F, _) | (_, T) => T,
            (T, F) => F,
            _ => U,
        }
    }

    pub fn is_determined(self) -> bool {
        self != TruthValue3::U
    }

    /// Information order: `u` is below everything, `t` and `f` only below themselves.
    pub fn below(self, other: Self) -> bool {
        self == TruthValue3::U || self == other
    }
}

impl From<bool> for TruthValue3 {
    fn from(b: bool) -> Self {
        if b {
            TruthValue3::T
        } else {
            TruthValue3::F
        }
    }
}

impl fmt::Display for TruthValue3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TruthValue3::T => "t",
            TruthValue3::F => "f",
            TruthValue3::U => "u",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum KripkeError {
    #[error("`box` is not interpreted by the staged semantics")]
    BoxPresent,
    #[error("indexed truth predicate T{index}({target}) is not interpreted by the staged semantics")]
    IndexedTruth { index: String, target: String },
    #[error("base atom `{0}` has no value")]
    MissingAtom(String),
    #[error("`{0}` is not in the domain of the interpretation")]
    UnknownSentence(String),
    #[error("sentence `{0}` is used as a proposition; refer to it through T({0})")]
    BareSentence(String),
    #[error("{names} sentences exceed the enumeration cap of {cap}")]
    CapExceeded { names: usize, cap: usize },
    #[error("interpretations have different domains")]
    DomainMismatch,
}

/// Three-valued assignment over sentence names, ordered by name.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Interpretation3 {
    pub assignment: BTreeMap<String, TruthValue3>,
}

impl Interpretation3 {
    /// Every name of `sys` mapped to `u`.
    pub fn undefined(sys: &SentenceSystem) -> Self {
        Self::constant(sys, TruthValue3::U)
    }

    pub fn constant(sys: &SentenceSystem, v: TruthValue3) -> Self {
        Interpretation3 { assignment: sys.definitions.keys().map(|n| (n.clone(), v)).collect() }
    }

    pub fn from_pairs<'a>(pairs: impl IntoIterator<Item = (&'a str, TruthValue3)>) -> Self {
        Interpretation3 { assignment: pairs.into_iter().map(|(n, v)| (n.to_string(), v)).collect() }
    }

    pub fn get(&self, name: &str) -> Option<TruthValue3> {
        self.assignment.get(name).copied()
    }

    /// Names evaluated true.
    pub fn extension(&self) -> impl Iterator<Item = &str> {
        self.with_value(TruthValue3::T)
    }

    /// Names evaluated false.
    pub fn anti_extension(&self) -> impl Iterator<Item = &str> {
        self.with_value(TruthValue3::F)
    }

    fn with_value(&self, v: TruthValue3) -> impl Iterator<Item = &str> {
        self.assignment.iter().filter(move |(_, x)| **x == v).map(|(n, _)| n.as_str())
    }

    pub fn determined(&self) -> usize {
        self.assignment.values().filter(|v| v.is_determined()).count()
    }

    /// `self ⊑ other` in the information order; false on different domains.
    pub fn below(&self, other: &Self) -> bool {
        self.assignment.len() == other.assignment.len()
            && self
                .assignment
                .iter()
                .all(|(n, v)| other.get(n).is_some_and(|w| v.below(w)))
    }
}

impl fmt::Display for Interpretation3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, v) in &self.assignment {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            write!(f, "{n}={v}")?;
        }
        Ok(())
    }
}

/// Strong Kleene evaluation of a `box`-free, unindexed formula.
pub fn sk_eval(
    f: &Formula,
    i: &Interpretation3,
    base: &IndexMap<String, bool>,
) -> Result<TruthValue3, KripkeError> {
    Ok(match f {
        Formula::Falsum => TruthValue3::F,
        Formula::Atom(a) => match base.get(a) {
            Some(v) => (*v).into(),
            None if i.assignment.contains_key(a) => return Err(KripkeError::BareSentence(a.clone())),
            None => return Err(KripkeError::MissingAtom(a.clone())),
        },
        Formula::TruthOf(s) => i.get(s).ok_or_else(|| KripkeError::UnknownSentence(s.clone()))?,
        Formula::TruthAt(k, s) => {
            return Err(KripkeError::IndexedTruth { index: k.to_string(), target: s.clone() })
        }
        Formula::Box(_) => return Err(KripkeError::BoxPresent),
        Formula::And(l, r) => sk_eval(l, i, base)?.and(sk_eval(r, i, base)?),
        Formula::Or(l, r) => sk_eval(l, i, base)?.or(sk_eval(r, i, base)?),
        Formula::Imp(l, r) => sk_eval(l, i, base)?.imp(sk_eval(r, i, base)?),
    })
}

/// One synchronous re-evaluation of every definition.
pub fn jump(sys: &SentenceSystem, i: &Interpretation3) -> Result<Interpretation3, KripkeError> {
    if i.assignment.len() != sys.definitions.len()
        || sys.definitions.keys().any(|n| !i.assignment.contains_key(n))
    {
        return Err(KripkeError::DomainMismatch);
    }
    let assignment = sys
        .definitions
        .iter()
        .map(|(n, body)| Ok((n.clone(), sk_eval(body, i, &sys.base_facts)?)))
        .collect::<Result<_, KripkeError>>()?;
    Ok(Interpretation3 { assignment })
}

/// Stages of the construction, starting from the all-`u` interpretation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StageTrace {
    pub stages: Vec<Interpretation3>,
}

impl StageTrace {
    pub fn last(&self) -> &Interpretation3 {
        self.stages.last().expect("trace is nonempty")
    }

    /// `stage k: name=v ...`, one line per stage.
    pub fn lines(&self) -> Vec<String> {
        self.stages
            .iter()
            .enumerate()
            .map(|(k, s)| if s.assignment.is_empty() { format!("stage {k}:") } else { format!("stage {k}: {s}") })
            .collect()
    }

    /// Index of the first stage at which `name` is `t`, if any.
    pub fn first_true(&self, name: &str) -> Option<usize> {
        self.stages.iter().position(|s| s.get(name) == Some(TruthValue3::T))
    }
}

/// Stage 0 is all-`u`; the trace continues with each jump result up to and
/// including the first one that is a fixed point. An empty system has no
/// jumps to perform.
pub fn least_fixed_point(sys: &SentenceSystem) -> Result<(Interpretation3, StageTrace), KripkeError> {
    let compiled = Compiled::new(sys)?;
    let mut stages = vec![vec![TruthValue3::U; compiled.len()]];
    if compiled.len() > 0 {
        let mut next = compiled.jump(&stages[0]);
        loop {
            let after = compiled.jump(&next);
            let fixed = after == next;
            stages.push(next);
            if fixed {
                break;
            }
            debug_assert!(stages.len() <= compiled.len() + 1);
            next = after;
        }
    }
    let stages: Vec<Interpretation3> = stages.iter().map(|s| compiled.interpretation(s)).collect();
    Ok((stages.last().expect("nonempty").clone(), StageTrace { stages }))
}

/// Every fixed point of the jump, by brute force over `{f, t, u}^names`, in
/// lexicographic order (names sorted, `f < t < u`).
pub fn enumerate_fixed_points(sys: &SentenceSystem, cap: usize) -> Result<Vec<Interpretation3>, KripkeError> {
    let compiled = Compiled::new(sys)?;
    let n = compiled.len();
    if n > cap {
        return Err(KripkeError::CapExceeded { names: n, cap });
    }
    let mut out = Vec::new();
    let mut digits = vec![0usize; n];
    let mut current: Vec<TruthValue3> = vec![TruthValue3::ALL[0]; n];
    loop {
        if compiled.jump(&current) == current {
            out.push(compiled.interpretation(&current));
        }
        // odometer over sorted names, last name fastest
        let mut pos = n;
        loop {
            if pos == 0 {
                return Ok(out);
            }
            pos -= 1;
            digits[pos] += 1;
            if digits[pos] < 3 {
                current[pos] = TruthValue3::ALL[digits[pos]];
                break;
            }
            digits[pos] = 0;
            current[pos] = TruthValue3::ALL[0];
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Classification {
    GroundedTrue,
    GroundedFalse,
    /// `u` under every fixed point.
    Paradoxical,
    /// Some fixed point determines the name; the witnesses are two fixed
    /// points that disagree on it.
    UngroundedNonParadoxical { witness_true: Interpretation3, witness_other: Interpretation3 },
}

/// Result of [`classify`]; the enumeration oracle may be out of reach.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Exact(Classification),
    /// The name is ungrounded; the enumeration cap prevented telling
    /// paradoxical from non-paradoxical.
    GroundednessOnly,
}

pub fn classify(sys: &SentenceSystem, name: &str, cap: usize) -> Result<Verdict, KripkeError> {
    if !sys.is_sentence(name) {
        return Err(KripkeError::UnknownSentence(name.to_string()));
    }
    let (lfp, _) = least_fixed_point(sys)?;
    match lfp.get(name) {
        Some(TruthValue3::T) => return Ok(Verdict::Exact(Classification::GroundedTrue)),
        Some(TruthValue3::F) => return Ok(Verdict::Exact(Classification::GroundedFalse)),
        _ => {}
    }
    let fixed = match enumerate_fixed_points(sys, cap) {
        Ok(all) => all,
        Err(KripkeError::CapExceeded { .. }) => return Ok(Verdict::GroundednessOnly),
        Err(e) => return Err(e),
    };
    let find = |v: TruthValue3| fixed.iter().find(|i| i.get(name) == Some(v));
    let first = find(TruthValue3::T).or_else(|| find(TruthValue3::F));
    Ok(Verdict::Exact(match first {
        None => Classification::Paradoxical,
        Some(w) => {
            let value = w.get(name).expect("name in domain");
            let opposite = if value == TruthValue3::T { TruthValue3::F } else { TruthValue3::T };
            let other = find(opposite).cloned().unwrap_or(lfp);
            Classification::UngroundedNonParadoxical { witness_true: w.clone(), witness_other: other }
        }
    }))
}

impl Classification {
    /// `NAME: grounded-true | grounded-false | paradoxical | ungrounded (witnesses: ...)`
    pub fn report_line(&self, name: &str) -> String {
        match self {
            Classification::GroundedTrue => format!("{name}: grounded-true"),
            Classification::GroundedFalse => format!("{name}: grounded-false"),
            Classification::Paradoxical => format!("{name}: paradoxical"),
            Classification::UngroundedNonParadoxical { witness_true, witness_other } => {
                format!("{name}: ungrounded (witnesses: {witness_true} ; {witness_other})")
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Comparison {
    Subordinate,
    Extends,
    Equal,
    Incomparable,
}

/// Compares two interpretations by extension and anti-extension inclusion.
pub fn compare(i1: &Interpretation3, i2: &Interpretation3) -> Result<Comparison, KripkeError> {
    if i1.assignment.len() != i2.assignment.len()
        || i1.assignment.keys().any(|n| !i2.assignment.contains_key(n))
    {
        return Err(KripkeError::DomainMismatch);
    }
    Ok(match (i1.below(i2), i2.below(i1)) {
        (true, true) => Comparison::Equal,
        (true, false) => Comparison::Subordinate,
        (false, true) => Comparison::Extends,
        (false, false) => Comparison::Incomparable,
    })
}

/// Definitions compiled against sorted name indices with base atoms folded in.
struct Compiled {
    names: Vec<String>,
    bodies: Vec<Expr>,
}

enum Expr {
    Const(TruthValue3),
    Sentence(usize),
    And(Box<Expr>, Box<Expr>),
    Or(Box<Expr>, Box<Expr>),
    Imp(Box<Expr>, Box<Expr>),
}

impl Compiled {
    fn new(sys: &SentenceSystem) -> Result<Self, KripkeError> {
        let mut names: Vec<String> = sys.definitions.keys().cloned().collect();
        names.sort();
        let index: BTreeMap<&str, usize> = names.iter().enumerate().map(|(k, n)| (n.as_str(), k)).collect();
        let bodies = names
            .iter()
            .map(|n| compile(&sys.definitions[n], &index, &sys.base_facts))
            .collect::<Result<_, _>>()?;
        Ok(Compiled { names, bodies })
    }

    fn len(&self) -> usize {
        self.names.len()
    }

    fn jump(&self, current: &[TruthValue3]) -> Vec<TruthValue3> {
        self.bodies.iter().map(|b| b.eval(current)).collect()
    }

    fn interpretation(&self, values: &[TruthValue3]) -> Interpretation3 {
        Interpretation3 { assignment: self.names.iter().cloned().zip(values.iter().copied()).collect() }
    }
}

fn compile(
    f: &Formula,
    index: &BTreeMap<&str, usize>,
    base: &IndexMap<String, bool>,
) -> Result<Expr, KripkeError> {
    let bin = |l: &Formula, r: &Formula| -> Result<(Box<Expr>, Box<Expr>), KripkeError> {
        Ok((Box::new(compile(l, index, base)?), Box::new(compile(r, index, base)?)))
    };
    Ok(match f {
        Formula::Falsum => Expr::Const(TruthValue3::F),
        Formula::Atom(a) => match base.get(a) {
            Some(v) => Expr::Const((*v).into()),
            None if index.contains_key(a.as_str()) => return Err(KripkeError::BareSentence(a.clone())),
            None => return Err(KripkeError::MissingAtom(a.clone())),
        },
        Formula::TruthOf(s) => {
            Expr::Sentence(*index.get(s.as_str()).ok_or_else(|| KripkeError::UnknownSentence(s.clone()))?)
        }
        Formula::TruthAt(k, s) => {
            return Err(KripkeError::IndexedTruth { index: k.to_string(), target: s.clone() })
        }
        Formula::Box(_) => return Err(KripkeError::BoxPresent),
        Formula::And(l, r) => {
            let (l, r) = bin(l, r)?;
            Expr::And(l, r)
        }
        Formula::Or(l, r) => {
            let (l, r) = bin(l, r)?;
            Expr::Or(l, r)
        }
        Formula::Imp(l, r) => {
            let (l, r) = bin(l, r)?;
            Expr::Imp(l, r)
        }
    })
}

impl Expr {
    fn eval(&self, current: &[TruthValue3]) -> TruthValue3 {
        match self {
            Expr::Const(v) => *v,
            Expr::Sentence(k) => current[*k],
            Expr::And(l, r) => l.eval(current).and(r.eval(current)),
            Expr::Or(l, r) => l.eval(current).or(r.eval(current)),
            Expr::Imp(l, r) => l.eval(current).imp(r.eval(current)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::{parse_formula, parse_system};
    use TruthValue3::{F, T, U};

    fn sys(text: &str) -> SentenceSystem {
        parse_system(text).unwrap()
    }

    fn interp(pairs: &[(&str, TruthValue3)]) -> Interpretation3 {
        Interpretation3::from_pairs(pairs.iter().copied())
    }

    const LIAR: &str = "sentence L := ~T(L)";
    const TRUTH_TELLER: &str = "sentence K := T(K)";
    const CHAIN: &str = "atom snow = true\nsentence s1 := T(s2)\nsentence s2 := snow";

    #[test]
    fn kleene_tables() {
        let none = IndexMap::new();
        let f = parse_formula("~T(L)").unwrap();
        assert_eq!(sk_eval(&f, &interp(&[("L", U)]), &none).unwrap(), U);
        let f = parse_formula("T(a) | ~T(a)").unwrap();
        assert_eq!(sk_eval(&f, &interp(&[("a", U)]), &none).unwrap(), U);
        let f = parse_formula("T(a) -> T(b)").unwrap();
        assert_eq!(sk_eval(&f, &interp(&[("a", F), ("b", U)]), &none).unwrap(), T);
        assert_eq!(sk_eval(&Formula::Falsum, &Interpretation3::default(), &none).unwrap(), F);
    }

    #[test]
    fn eval_rejects_uninterpreted_connectives() {
        let none = IndexMap::new();
        let i = interp(&[("s", U)]);
        assert_eq!(sk_eval(&parse_formula("box T(s)").unwrap(), &i, &none), Err(KripkeError::BoxPresent));
        assert!(matches!(
            sk_eval(&parse_formula("T1(s)").unwrap(), &i, &none),
            Err(KripkeError::IndexedTruth { .. })
        ));
        assert_eq!(
            sk_eval(&parse_formula("snow").unwrap(), &i, &none),
            Err(KripkeError::MissingAtom("snow".into()))
        );
        assert_eq!(
            sk_eval(&parse_formula("s").unwrap(), &i, &none),
            Err(KripkeError::BareSentence("s".into()))
        );
    }

    #[test]
    fn jump_examples() {
        let liar = sys(LIAR);
        assert_eq!(jump(&liar, &interp(&[("L", U)])).unwrap(), interp(&[("L", U)]));
        assert_eq!(jump(&liar, &interp(&[("L", T)])).unwrap(), interp(&[("L", F)]));
        let chain = sys(CHAIN);
        assert_eq!(
            jump(&chain, &Interpretation3::undefined(&chain)).unwrap(),
            interp(&[("s1", U), ("s2", T)])
        );
        assert_eq!(jump(&liar, &interp(&[("K", U)])), Err(KripkeError::DomainMismatch));
    }

    #[test]
    fn least_fixed_points() {
        let (lfp, trace) = least_fixed_point(&sys(LIAR)).unwrap();
        assert_eq!(lfp, interp(&[("L", U)]));
        assert_eq!(trace.stages.len(), 2);
        assert_eq!(trace.stages[0], trace.stages[1]);

        let (lfp, trace) = least_fixed_point(&sys(CHAIN)).unwrap();
        assert_eq!(lfp, interp(&[("s1", T), ("s2", T)]));
        // stage 0 all-u, stage 1 s2 determined, stage 2 both (a fixed point)
        assert_eq!(trace.stages.len(), 3);
        assert_eq!(trace.lines()[2], "stage 2: s1=t s2=t");

        let (lfp, trace) = least_fixed_point(&SentenceSystem::new()).unwrap();
        assert!(lfp.assignment.is_empty());
        assert_eq!(trace.stages.len(), 1);
        assert_eq!(trace.lines(), vec!["stage 0:"]);
    }

    #[test]
    fn fixed_point_enumeration() {
        assert_eq!(enumerate_fixed_points(&sys(LIAR), 12).unwrap(), vec![interp(&[("L", U)])]);
        assert_eq!(
            enumerate_fixed_points(&sys(TRUTH_TELLER), 12).unwrap(),
            vec![interp(&[("K", F)]), interp(&[("K", T)]), interp(&[("K", U)])]
        );
        let big: String = (0..13).map(|k| format!("sentence s{k} := T(s{k})\n")).collect();
        assert_eq!(
            enumerate_fixed_points(&sys(&big), 12),
            Err(KripkeError::CapExceeded { names: 13, cap: 12 })
        );
    }

    #[test]
    fn classification_examples() {
        assert_eq!(classify(&sys(LIAR), "L", 12).unwrap(), Verdict::Exact(Classification::Paradoxical));
        assert_eq!(
            classify(&sys(TRUTH_TELLER), "K", 12).unwrap(),
            Verdict::Exact(Classification::UngroundedNonParadoxical {
                witness_true: interp(&[("K", T)]),
                witness_other: interp(&[("K", F)]),
            })
        );
        assert_eq!(classify(&sys(CHAIN), "s1", 12).unwrap(), Verdict::Exact(Classification::GroundedTrue));
        let neg_chain = sys("atom snow = true\nsentence s := ~T(t)\nsentence t := snow");
        assert_eq!(classify(&neg_chain, "s", 12).unwrap(), Verdict::Exact(Classification::GroundedFalse));
        assert_eq!(classify(&sys(TRUTH_TELLER), "K", 0).unwrap(), Verdict::GroundednessOnly);
        assert!(classify(&sys(LIAR), "nope", 12).is_err());
    }

    #[test]
    fn report_lines() {
        assert_eq!(Classification::Paradoxical.report_line("L"), "L: paradoxical");
        let c = classify(&sys(TRUTH_TELLER), "K", 12).unwrap();
        let Verdict::Exact(c) = c else { panic!() };
        assert_eq!(c.report_line("K"), "K: ungrounded (witnesses: K=t ; K=f)");
    }

    #[test]
    fn comparisons() {
        let teller = sys(TRUTH_TELLER);
        let (lfp, _) = least_fixed_point(&teller).unwrap();
        assert_eq!(compare(&lfp, &interp(&[("K", T)])).unwrap(), Comparison::Subordinate);
        assert_eq!(compare(&interp(&[("K", T)]), &lfp).unwrap(), Comparison::Extends);
        assert_eq!(compare(&interp(&[("K", T)]), &interp(&[("K", F)])).unwrap(), Comparison::Incomparable);
        assert_eq!(compare(&lfp, &lfp).unwrap(), Comparison::Equal);
        assert_eq!(compare(&lfp, &interp(&[("J", U)])), Err(KripkeError::DomainMismatch));
    }
}
