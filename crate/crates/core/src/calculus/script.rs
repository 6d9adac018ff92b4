//! Fitch-style proof scripts and their text format.
//!
//! ```text
//! proof notL
//! 1 | L -> ~box L | def-l L
//! 2 | L -> box L | coreflection
//! * 3 | L | assume
//! * 4 | ~box L | imp-elim 1 3
//! ```
//!
//! Each leading `*` marks one open assumption.

use std::fmt;

use thiserror::Error;

use crate::syntax::{format, is_valid_name, parse_formula, Formula};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Justification {
    /// A theory axiom.
    Premise,
    Assume,
    /// Discharges the innermost open assumption.
    ImpIntro,
    ImpElim,
    AndIntro,
    AndElimL,
    AndElimR,
    OrIntroL,
    OrIntroR,
    OrElim,
    /// From `false`, anything.
    Efq,
    /// `name -> body`
    DefL(String),
    /// `body -> name`
    DefR(String),
    /// `A -> box A`
    CoReflection,
    /// `box (A -> B) -> box A -> box B`
    KDist,
    /// From a top-level `box A`, conclude `A`. Only with the rule enabled.
    Reflection,
}

impl Justification {
    pub fn keyword(&self) -> &'static str {
        match self {
            Justification::Premise => "premise",
            Justification::Assume => "assume",
            Justification::ImpIntro => "imp-intro",
            Justification::ImpElim => "imp-elim",
            Justification::AndIntro => "and-intro",
            Justification::AndElimL => "and-elim-l",
            Justification::AndElimR => "and-elim-r",
            Justification::OrIntroL => "or-intro-l",
            Justification::OrIntroR => "or-intro-r",
            Justification::OrElim => "or-elim",
            Justification::Efq => "efq",
            Justification::DefL(_) => "def-l",
            Justification::DefR(_) => "def-r",
            Justification::CoReflection => "coreflection",
            Justification::KDist => "k-dist",
            Justification::Reflection => "reflection",
        }
    }

    /// Steps that stand on their own: axioms, assumptions and schema instances.
    pub fn takes_no_premises(&self) -> bool {
        matches!(
            self,
            Justification::Premise
                | Justification::Assume
                | Justification::DefL(_)
                | Justification::DefR(_)
                | Justification::CoReflection
                | Justification::KDist
        )
    }
}

impl fmt::Display for Justification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Justification::DefL(n) | Justification::DefR(n) => write!(f, "{} {n}", self.keyword()),
            other => f.write_str(other.keyword()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Step {
    /// 1-based position in the script.
    pub index: usize,
    pub formula: Formula,
    pub justification: Justification,
    pub premises: Vec<usize>,
    /// Open assumptions at this step, counting the step itself when it is an assumption.
    pub depth: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProofScript {
    pub goal_label: String,
    pub steps: Vec<Step>,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("proof script line {line}: {message}")]
pub struct ScriptError {
    pub line: usize,
    pub message: String,
}

impl ProofScript {
    pub fn new(goal_label: impl Into<String>) -> Self {
        ProofScript { goal_label: goal_label.into(), steps: Vec::new() }
    }

    /// Formula of the last step.
    pub fn conclusion(&self) -> Option<&Formula> {
        self.steps.last().map(|s| &s.formula)
    }

    pub fn parse(text: &str) -> Result<Self, ScriptError> {
        let mut script: Option<ProofScript> = None;
        for (n, raw) in text.lines().enumerate() {
            let line = n + 1;
            let err = |message: String| ScriptError { line, message };
            let code = raw.split('#').next().unwrap_or("").trim();
            if code.is_empty() {
                continue;
            }
            let Some(script) = script.as_mut() else {
                let label = code
                    .strip_prefix("proof")
                    .map(str::trim)
                    .filter(|l| is_valid_name(l))
                    .ok_or_else(|| err("expected header `proof <LABEL>`".into()))?;
                script = Some(ProofScript::new(label));
                continue;
            };
            let depth = code.chars().take_while(|c| *c == '*' || c.is_whitespace()).filter(|c| *c == '*').count();
            let body = code.trim_start_matches(|c: char| c == '*' || c.is_whitespace());
            let (num, rest) = body.split_once('|').ok_or_else(|| err("expected `<n> | <formula> | <rule>`".into()))?;
            let (formula, rule) =
                rest.rsplit_once('|').ok_or_else(|| err("expected `<n> | <formula> | <rule>`".into()))?;
            let index: usize = num.trim().parse().map_err(|_| err(format!("bad step number `{}`", num.trim())))?;
            let formula = parse_formula(formula).map_err(|e| err(format!("formula: {e}")))?;
            let mut words = rule.split_whitespace();
            let keyword = words.next().ok_or_else(|| err("missing justification".into()))?;
            let mut name_arg = || {
                words
                    .next()
                    .filter(|w| is_valid_name(w))
                    .map(str::to_string)
                    .ok_or_else(|| err(format!("`{keyword}` needs a sentence name")))
            };
            let justification = match keyword {
                "premise" => Justification::Premise,
                "assume" => Justification::Assume,
                "imp-intro" => Justification::ImpIntro,
                "imp-elim" => Justification::ImpElim,
                "and-intro" => Justification::AndIntro,
                "and-elim-l" => Justification::AndElimL,
                "and-elim-r" => Justification::AndElimR,
                "or-intro-l" => Justification::OrIntroL,
                "or-intro-r" => Justification::OrIntroR,
                "or-elim" => Justification::OrElim,
                "efq" => Justification::Efq,
                "def-l" => Justification::DefL(name_arg()?),
                "def-r" => Justification::DefR(name_arg()?),
                "coreflection" => Justification::CoReflection,
                "k-dist" => Justification::KDist,
                "reflection" => Justification::Reflection,
                other => return Err(err(format!("unknown justification `{other}`"))),
            };
            let premises = words
                .map(|w| w.parse::<usize>().map_err(|_| err(format!("bad premise index `{w}`"))))
                .collect::<Result<Vec<_>, _>>()?;
            script.steps.push(Step { index, formula, justification, premises, depth });
        }
        script.ok_or(ScriptError { line: 1, message: "empty proof script".into() })
    }
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for _ in 0..self.depth {
            f.write_str("* ")?;
        }
        write!(f, "{} | {} | {}", self.index, format(&self.formula), self.justification)?;
        for p in &self.premises {
            write!(f, " {p}")?;
        }
        Ok(())
    }
}

impl fmt::Display for ProofScript {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "proof {}", self.goal_label)?;
        for s in &self.steps {
            writeln!(f, "{s}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const SCRIPT: &str = "\
proof notL
# the provable liar refutes itself
1 | L -> ~box L | def-l L
2 | L -> box L | coreflection
* 3 | L | assume
* 4 | ~box L | imp-elim 1 3
* 5 | box L | imp-elim 2 3
* 6 | false | imp-elim 4 5
7 | ~L | imp-intro 6
";

    #[test]
    fn parses_and_prints() {
        let ps = ProofScript::parse(SCRIPT).unwrap();
        assert_eq!(ps.goal_label, "notL");
        assert_eq!(ps.steps.len(), 7);
        assert_eq!(ps.steps[0].justification, Justification::DefL("L".into()));
        assert_eq!(ps.steps[3].premises, vec![1, 3]);
        assert_eq!(ps.steps[3].depth, 1);
        assert_eq!(ps.steps[6].depth, 0);
        assert_eq!(ProofScript::parse(&ps.to_string()).unwrap(), ps);
    }

    #[test]
    fn formulas_may_contain_bars() {
        let ps = ProofScript::parse("proof g\n1 | a | b -> a | b | premise\n").unwrap();
        assert_eq!(ps.steps[0].formula, parse_formula("a | b -> a | b").unwrap());
    }

    #[test]
    fn rejects_malformed_lines() {
        assert!(ProofScript::parse("").is_err());
        assert!(ProofScript::parse("1 | a | premise").is_err());
        assert_eq!(ProofScript::parse("proof g\n1 | a | wave").unwrap_err().line, 2);
        assert!(ProofScript::parse("proof g\n1 | a | def-l").is_err());
        assert!(ProofScript::parse("proof g\n1 | a & | premise").is_err());
        assert!(ProofScript::parse("proof g\nx | a | premise").is_err());
        assert!(ProofScript::parse("proof g\n1 | a | imp-elim one").is_err());
        assert!(ProofScript::parse("proof g\n1 a premise").is_err());
    }
}
