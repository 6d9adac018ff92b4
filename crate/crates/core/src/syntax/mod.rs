//! Object language: formulas, the scenario file format, and structural helpers.
//!
//! Negation, verum and the biconditional are not constructors. `~A` is
//! `A -> false`, `true` is `false -> false` and `A <-> B` is
//! `(A -> B) & (B -> A)`. The parser desugars them and the printer can put
//! them back.

mod closure;
mod lexer;
mod parser;
mod printer;
mod system;

use std::fmt;

pub use closure::{closure, subformulas};
pub use parser::{parse_formula, ParseError};
pub use printer::{format, format_with, Style};
pub use system::{parse_system, Goal, Options, SentenceSystem, SystemError};

/// Index carried by an indexed truth predicate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Index {
    Level(u32),
    /// Written `T?`; resolved by level inference.
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    Falsum,
    /// A base atom, or (in the calculus) a sentence name used as a proposition.
    Atom(String),
    /// The global truth predicate applied to a named sentence.
    TruthOf(String),
    /// An indexed truth predicate `T<k>(s)`.
    TruthAt(Index, String),
    /// `box A`: "A is provable".
    Box(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Imp(Box<Formula>, Box<Formula>),
}

impl Formula {
    pub fn atom(name: impl Into<String>) -> Self {
        Formula::Atom(name.into())
    }

    pub fn truth_of(name: impl Into<String>) -> Self {
        Formula::TruthOf(name.into())
    }

    pub fn truth_at(level: u32, name: impl Into<String>) -> Self {
        Formula::TruthAt(Index::Level(level), name.into())
    }

    pub fn truth_unknown(name: impl Into<String>) -> Self {
        Formula::TruthAt(Index::Unknown, name.into())
    }

    pub fn boxed(body: Formula) -> Self {
        Formula::Box(Box::new(body))
    }

    pub fn and(l: Formula, r: Formula) -> Self {
        Formula::And(Box::new(l), Box::new(r))
    }

    pub fn or(l: Formula, r: Formula) -> Self {
        Formula::Or(Box::new(l), Box::new(r))
    }

    pub fn imp(l: Formula, r: Formula) -> Self {
        Formula::Imp(Box::new(l), Box::new(r))
    }

    pub fn neg(body: Formula) -> Self {
        Formula::imp(body, Formula::Falsum)
    }

    pub fn verum() -> Self {
        Formula::imp(Formula::Falsum, Formula::Falsum)
    }

    pub fn iff(l: Formula, r: Formula) -> Self {
        Formula::and(Formula::imp(l.clone(), r.clone()), Formula::imp(r, l))
    }

    /// `Some(A)` when `self` is `A -> false`.
    pub fn negated(&self) -> Option<&Formula> {
        match self {
            Formula::Imp(body, r) if **r == Formula::Falsum => Some(body),
            _ => None,
        }
    }

    /// `Some((A, B))` when `self` has the shape `(A -> B) & (B -> A)`.
    pub fn as_iff(&self) -> Option<(&Formula, &Formula)> {
        if let Formula::And(l, r) = self {
            if let (Formula::Imp(a, b), Formula::Imp(c, d)) = (&**l, &**r) {
                if a == d && b == c {
                    return Some((a, b));
                }
            }
        }
        None
    }

    pub fn is_verum(&self) -> bool {
        matches!(self, Formula::Imp(l, r) if **l == Formula::Falsum && **r == Formula::Falsum)
    }

    /// Number of AST nodes.
    pub fn size(&self) -> usize {
        match self {
            Formula::Falsum | Formula::Atom(_) | Formula::TruthOf(_) | Formula::TruthAt(..) => 1,
            Formula::Box(b) => 1 + b.size(),
            Formula::And(l, r) | Formula::Or(l, r) | Formula::Imp(l, r) => 1 + l.size() + r.size(),
        }
    }

    pub fn contains_box(&self) -> bool {
        self.any(&mut |f| matches!(f, Formula::Box(_)))
    }

    /// True if some node (including `self`) satisfies `pred`.
    pub fn any(&self, pred: &mut impl FnMut(&Formula) -> bool) -> bool {
        if pred(self) {
            return true;
        }
        match self {
            Formula::Box(b) => b.any(pred),
            Formula::And(l, r) | Formula::Or(l, r) | Formula::Imp(l, r) => l.any(pred) || r.any(pred),
            _ => false,
        }
    }

    /// Pre-order traversal.
    pub fn visit<'a>(&'a self, f: &mut impl FnMut(&'a Formula)) {
        f(self);
        match self {
            Formula::Box(b) => b.visit(f),
            Formula::And(l, r) | Formula::Or(l, r) | Formula::Imp(l, r) => {
                l.visit(f);
                r.visit(f);
            }
            _ => {}
        }
    }

    /// Rebuilds the formula bottom-up, letting `f` replace any node.
    pub fn map(&self, f: &mut impl FnMut(&Formula) -> Option<Formula>) -> Formula {
        if let Some(out) = f(self) {
            return out;
        }
        match self {
            Formula::Box(b) => Formula::boxed(b.map(f)),
            Formula::And(l, r) => Formula::and(l.map(f), r.map(f)),
            Formula::Or(l, r) => Formula::or(l.map(f), r.map(f)),
            Formula::Imp(l, r) => Formula::imp(l.map(f), r.map(f)),
            leaf => leaf.clone(),
        }
    }

    /// Sentence names referenced through a truth predicate, in order of occurrence.
    pub fn truth_targets(&self) -> Vec<(Option<Index>, &str)> {
        let mut out = Vec::new();
        self.visit(&mut |f| match f {
            Formula::TruthOf(s) => out.push((None, s.as_str())),
            Formula::TruthAt(k, s) => out.push((Some(*k), s.as_str())),
            _ => {}
        });
        out
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format(self))
    }
}

impl fmt::Display for Index {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Index::Level(k) => write!(f, "{k}"),
            Index::Unknown => f.write_str("?"),
        }
    }
}

/// Keywords that cannot be used as names.
pub const KEYWORDS: [&str; 3] = ["false", "true", "box"];

/// `[A-Za-z][A-Za-z0-9_]*`, excluding keywords.
pub fn is_valid_name(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
        && !KEYWORDS.contains(&s)
}
