//! Tarski's hierarchy of indexed truth predicates.
//!
//! `T<k>(s)` may only be applied to a sentence whose own level is below `k`,
//! and a sentence's level is the largest index occurring in its definition.
//! Under that restriction every sentence gets a classical value by evaluating
//! the levels in increasing order.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use indexmap::IndexMap;
use thiserror::Error;

use crate::syntax::{Formula, Index, SentenceSystem};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LevelMap {
    pub levels: BTreeMap<String, u32>,
}

impl LevelMap {
    pub fn get(&self, name: &str) -> Option<u32> {
        self.levels.get(name).copied()
    }

    /// `levels: name=k ...`
    pub fn report_line(&self) -> String {
        let mut line = String::from("levels:");
        for (n, k) in &self.levels {
            line.push_str(&format!(" {n}={k}"));
        }
        line
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ViolationReason {
    IndexTooLow,
    CyclicDependency,
}

impl fmt::Display for ViolationReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ViolationReason::IndexTooLow => "index-too-low",
            ViolationReason::CyclicDependency => "cyclic-dependency",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelViolation {
    pub name: String,
    pub index: Index,
    pub target: String,
    pub reason: ViolationReason,
}

impl fmt::Display for LevelViolation {
    /// `violation: <name> T<k>(<target>) <reason>`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "violation: {} T{}({}) {}", self.name, self.index, self.target, self.reason)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum TarskiError {
    #[error("{0}")]
    Violation(LevelViolation),
    #[error("`{name}` applies an unindexed truth predicate to `{target}`")]
    Unindexed { name: String, target: String },
    #[error("`{0}` contains `box`, which the hierarchy does not interpret")]
    BoxPresent(String),
    #[error("sentence `{0}` is used as a proposition; refer to it through an indexed T")]
    BareSentence(String),
    #[error("base atom `{0}` has no value")]
    MissingAtom(String),
}

struct Occurrence<'a> {
    index: Index,
    target: &'a str,
}

/// Truth occurrences of every definition, rejecting what the hierarchy does
/// not interpret. `allow_unknown` admits `T?`.
fn occurrences(sys: &SentenceSystem, allow_unknown: bool) -> Result<Vec<(&str, Vec<Occurrence<'_>>)>, TarskiError> {
    let mut out = Vec::new();
    for (name, body) in &sys.definitions {
        let mut occ = Vec::new();
        let mut err = None;
        body.visit(&mut |f| {
            if err.is_some() {
                return;
            }
            match f {
                Formula::Box(_) => err = Some(TarskiError::BoxPresent(name.clone())),
                Formula::TruthOf(s) => err = Some(TarskiError::Unindexed { name: name.clone(), target: s.clone() }),
                Formula::TruthAt(Index::Unknown, s) if !allow_unknown => {
                    err = Some(TarskiError::Unindexed { name: name.clone(), target: s.clone() })
                }
                Formula::TruthAt(k, s) => occ.push(Occurrence { index: *k, target: s }),
                Formula::Atom(a) if sys.is_sentence(a) => err = Some(TarskiError::BareSentence(a.clone())),
                _ => {}
            }
        });
        if let Some(e) = err {
            return Err(e);
        }
        out.push((name.as_str(), occ));
    }
    Ok(out)
}

/// Checks a fully indexed system and returns its levels.
pub fn check_levels(sys: &SentenceSystem) -> Result<LevelMap, TarskiError> {
    let occ = occurrences(sys, false)?;
    let levels: BTreeMap<String, u32> = occ
        .iter()
        .map(|(name, os)| {
            let k = os.iter().map(|o| level_of(o.index)).max().unwrap_or(0);
            (name.to_string(), k)
        })
        .collect();
    for (name, os) in &occ {
        for o in os {
            if levels[o.target] >= level_of(o.index) {
                return Err(violation(name, o, ViolationReason::IndexTooLow));
            }
        }
    }
    Ok(LevelMap { levels })
}

/// Pointwise-minimal levels when some indices are written `T?`, computed as
/// longest paths over the truth-dependency graph.
pub fn infer_levels(sys: &SentenceSystem) -> Result<LevelMap, TarskiError> {
    let occ = occurrences(sys, true)?;
    let edges: BTreeMap<&str, Vec<&str>> =
        occ.iter().map(|(n, os)| (*n, os.iter().map(|o| o.target).collect())).collect();
    for (name, os) in &occ {
        for o in os {
            if reaches(&edges, o.target, name) {
                return Err(violation(name, o, ViolationReason::CyclicDependency));
            }
        }
    }
    let by_name: BTreeMap<&str, &Vec<Occurrence>> = occ.iter().map(|(n, os)| (*n, os)).collect();
    let mut levels = BTreeMap::new();
    for (name, _) in &occ {
        longest_path(name, &by_name, &mut levels);
    }
    for (name, os) in &occ {
        for o in os {
            if let Index::Level(k) = o.index {
                if levels[o.target] >= k {
                    return Err(violation(name, o, ViolationReason::IndexTooLow));
                }
            }
        }
    }
    Ok(LevelMap { levels: levels.into_iter().map(|(n, k)| (n.to_string(), k)).collect() })
}

fn level_of(index: Index) -> u32 {
    match index {
        Index::Level(k) => k,
        Index::Unknown => 0,
    }
}

fn violation(name: &str, o: &Occurrence, reason: ViolationReason) -> TarskiError {
    TarskiError::Violation(LevelViolation {
        name: name.to_string(),
        index: o.index,
        target: o.target.to_string(),
        reason,
    })
}

fn reaches(edges: &BTreeMap<&str, Vec<&str>>, from: &str, to: &str) -> bool {
    let mut seen = BTreeSet::new();
    let mut stack = vec![from];
    while let Some(n) = stack.pop() {
        if n == to {
            return true;
        }
        if seen.insert(n) {
            stack.extend(edges.get(n).into_iter().flatten().copied());
        }
    }
    false
}

fn longest_path<'a>(
    name: &'a str,
    occ: &BTreeMap<&'a str, &Vec<Occurrence<'a>>>,
    memo: &mut BTreeMap<&'a str, u32>,
) -> u32 {
    if let Some(k) = memo.get(name) {
        return *k;
    }
    let mut level = 0;
    for o in occ[name].iter() {
        let need = match o.index {
            Index::Level(k) => k,
            Index::Unknown => longest_path(o.target, occ, memo) + 1,
        };
        level = level.max(need);
    }
    memo.insert(name, level);
    level
}

/// Replaces every `T?(s)` by `T<level(s)+1>(s)`, the least index it admits.
pub fn resolve_indices(sys: &SentenceSystem, lv: &LevelMap) -> SentenceSystem {
    let mut out = sys.clone();
    for body in out.definitions.values_mut() {
        *body = body.map(&mut |f| match f {
            Formula::TruthAt(Index::Unknown, s) => {
                Some(Formula::truth_at(lv.get(s).unwrap_or(0) + 1, s.as_str()))
            }
            _ => None,
        });
    }
    out
}

/// Classical value of every sentence, level by level. `T?` occurrences take
/// their least admissible index.
pub fn tarski_eval(sys: &SentenceSystem, lv: &LevelMap) -> Result<BTreeMap<String, bool>, TarskiError> {
    let resolved = resolve_indices(sys, lv);
    let mut order: Vec<(&String, &Formula)> = resolved.definitions.iter().collect();
    order.sort_by_key(|(n, _)| lv.get(n).unwrap_or(0));
    let mut values = BTreeMap::new();
    for (name, body) in order {
        let v = eval_indexed(body, &values, &sys.base_facts).map_err(|e| match e {
            TarskiError::Unindexed { target, .. } => TarskiError::Unindexed { name: name.clone(), target },
            TarskiError::BoxPresent(_) => TarskiError::BoxPresent(name.clone()),
            other => other,
        })?;
        values.insert(name.clone(), v);
    }
    Ok(values)
}

/// Classical value of `f` given already computed sentence values.
pub fn eval_indexed(
    f: &Formula,
    values: &BTreeMap<String, bool>,
    base: &IndexMap<String, bool>,
) -> Result<bool, TarskiError> {
    Ok(match f {
        Formula::Falsum => false,
        Formula::Atom(a) => match base.get(a) {
            Some(v) => *v,
            None if values.contains_key(a) => return Err(TarskiError::BareSentence(a.clone())),
            None => return Err(TarskiError::MissingAtom(a.clone())),
        },
        Formula::TruthAt(Index::Level(_), s) => match values.get(s) {
            Some(v) => *v,
            None => {
                return Err(TarskiError::Unindexed { name: "<formula>".into(), target: s.clone() })
            }
        },
        Formula::TruthAt(Index::Unknown, s) | Formula::TruthOf(s) => {
            return Err(TarskiError::Unindexed { name: "<formula>".into(), target: s.clone() })
        }
        Formula::Box(_) => return Err(TarskiError::BoxPresent("<formula>".into())),
        Formula::And(l, r) => eval_indexed(l, values, base)? && eval_indexed(r, values, base)?,
        Formula::Or(l, r) => eval_indexed(l, values, base)? || eval_indexed(r, values, base)?,
        Formula::Imp(l, r) => !eval_indexed(l, values, base)? || eval_indexed(r, values, base)?,
    })
}
