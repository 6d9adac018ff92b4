use std::collections::BTreeMap;
use std::fmt;

use indexmap::IndexMap;
use thiserror::Error;

use super::lexer::{tokenize, Tok};
use super::parser::{ParseError, Parser};
use super::{format, is_valid_name, Formula};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Goal {
    pub label: String,
    pub formula: Formula,
}

/// Scenario options. The raw map preserves what the file said; the typed
/// accessors are validated when the file is parsed.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Options {
    raw: BTreeMap<String, String>,
}

impl Options {
    pub const KEYS: [&'static str; 4] = ["reflection", "cap", "depth", "budget"];
    pub const DEFAULT_CAP: usize = 12;
    pub const DEFAULT_DEPTH: usize = 1;

    pub fn raw(&self) -> &BTreeMap<String, String> {
        &self.raw
    }

    pub fn set(&mut self, key: &str, value: &str) -> Result<(), SystemError> {
        let bad = || SystemError::BadOption { key: key.to_string(), value: value.to_string() };
        match key {
            "reflection" => {
                parse_switch(value).ok_or_else(bad)?;
            }
            "cap" | "depth" => {
                value.parse::<usize>().map_err(|_| bad())?;
            }
            "budget" => {
                value.parse::<u64>().map_err(|_| bad())?;
            }
            _ => return Err(SystemError::UnknownOption(key.to_string())),
        }
        self.raw.insert(key.to_string(), value.to_string());
        Ok(())
    }

    /// Whether the reflection rule (from a proven `box A`, conclude `A`) is enabled.
    pub fn reflection(&self) -> bool {
        self.raw.get("reflection").and_then(|v| parse_switch(v)).unwrap_or(false)
    }

    pub fn cap(&self) -> usize {
        self.raw.get("cap").and_then(|v| v.parse().ok()).unwrap_or(Self::DEFAULT_CAP)
    }

    pub fn depth(&self) -> usize {
        self.raw.get("depth").and_then(|v| v.parse().ok()).unwrap_or(Self::DEFAULT_DEPTH)
    }

    pub fn budget(&self) -> Option<u64> {
        self.raw.get("budget").and_then(|v| v.parse().ok())
    }
}

fn parse_switch(v: &str) -> Option<bool> {
    match v {
        "true" | "on" => Some(true),
        "false" | "off" => Some(false),
        _ => None,
    }
}

/// A finite set of named, possibly self-referential sentences together with
/// base facts, axioms, goals and options.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SentenceSystem {
    pub definitions: IndexMap<String, Formula>,
    pub base_facts: IndexMap<String, bool>,
    pub axioms: Vec<Formula>,
    pub goals: Vec<Goal>,
    pub options: Options,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum SystemError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("undefined sentence `{name}` referenced by a truth predicate")]
    UndefinedName { name: String },
    #[error("`{0}` is declared both as a sentence and as an atom")]
    NamespaceClash(String),
    #[error("`{0}` is defined more than once")]
    Duplicate(String),
    #[error("unknown option `{0}`")]
    UnknownOption(String),
    #[error("invalid value `{value}` for option `{key}`")]
    BadOption { key: String, value: String },
}

impl SentenceSystem {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_definition(mut self, name: &str, body: Formula) -> Self {
        self.definitions.insert(name.to_string(), body);
        self
    }

    pub fn with_fact(mut self, atom: &str, value: bool) -> Self {
        self.base_facts.insert(atom.to_string(), value);
        self
    }

    pub fn with_axiom(mut self, axiom: Formula) -> Self {
        self.axioms.push(axiom);
        self
    }

    pub fn goal(&self, label: &str) -> Option<&Goal> {
        self.goals.iter().find(|g| g.label == label)
    }

    pub fn is_sentence(&self, name: &str) -> bool {
        self.definitions.contains_key(name)
    }

    /// Every formula carried by the system, in file order.
    pub fn formulas(&self) -> impl Iterator<Item = &Formula> {
        self.definitions
            .values()
            .chain(self.axioms.iter())
            .chain(self.goals.iter().map(|g| &g.formula))
    }

    /// Checks the namespace and reference invariants.
    pub fn validate(&self) -> Result<(), SystemError> {
        for atom in self.base_facts.keys() {
            if self.definitions.contains_key(atom) {
                return Err(SystemError::NamespaceClash(atom.clone()));
            }
        }
        for f in self.formulas() {
            for (_, target) in f.truth_targets() {
                if !self.definitions.contains_key(target) {
                    return Err(SystemError::UndefinedName { name: target.to_string() });
                }
            }
        }
        Ok(())
    }
}

/// Parses and validates a scenario file.
pub fn parse_system(text: &str) -> Result<SentenceSystem, SystemError> {
    let mut sys = SentenceSystem::new();
    for (n, raw) in text.lines().enumerate() {
        let lineno = n + 1;
        let code = raw.split('#').next().unwrap_or("");
        if code.trim().is_empty() {
            continue;
        }
        let keyword = code.split_whitespace().next().unwrap_or("");
        if keyword == "option" {
            parse_option(&mut sys, code, lineno)?;
            continue;
        }
        let toks = tokenize(code, lineno)?;
        let mut p = Parser::new(&toks);
        match p.bump() {
            Tok::Ident(k) if k == "sentence" => {
                let name = p.name()?;
                p.expect(Tok::Assign)?;
                let body = p.formula()?;
                p.expect_eof()?;
                if sys.definitions.insert(name.clone(), body).is_some() {
                    return Err(SystemError::Duplicate(name));
                }
            }
            Tok::Ident(k) if k == "atom" => {
                let name = p.name()?;
                p.expect(Tok::Eq)?;
                let value = match p.peek() {
                    Tok::Ident(v) if v == "true" => true,
                    Tok::Ident(v) if v == "false" => false,
                    _ => return Err(p.error(&["`true`", "`false`"]).into()),
                };
                p.bump();
                p.expect_eof()?;
                if sys.base_facts.insert(name.clone(), value).is_some() {
                    return Err(SystemError::Duplicate(name));
                }
            }
            Tok::Ident(k) if k == "axiom" => {
                let f = p.formula()?;
                p.expect_eof()?;
                sys.axioms.push(f);
            }
            Tok::Ident(k) if k == "goal" => {
                let label = p.name()?;
                p.expect(Tok::Colon)?;
                let formula = p.formula()?;
                p.expect_eof()?;
                if sys.goal(&label).is_some() {
                    return Err(SystemError::Duplicate(label));
                }
                sys.goals.push(Goal { label, formula });
            }
            _ => {
                return Err(ParseError {
                    line: lineno,
                    column: raw.find(keyword).map_or(1, |c| c + 1),
                    expected: ["`sentence`", "`atom`", "`axiom`", "`goal`", "`option`"]
                        .map(String::from)
                        .to_vec(),
                    found: format!("`{keyword}`"),
                }
                .into())
            }
        }
    }
    sys.validate()?;
    Ok(sys)
}

fn parse_option(sys: &mut SentenceSystem, code: &str, lineno: usize) -> Result<(), SystemError> {
    let rest = code.trim_start().strip_prefix("option").unwrap_or("");
    let err = |expected: &str, found: &str| ParseError {
        line: lineno,
        column: code.len() - rest.len() + 1,
        expected: vec![expected.to_string()],
        found: found.to_string(),
    };
    let (key, value) = rest.split_once('=').ok_or_else(|| err("KEY = VALUE", rest.trim()))?;
    let (key, value) = (key.trim(), value.trim());
    if !is_valid_name(key) {
        return Err(err("KEY", key).into());
    }
    if value.is_empty() || value.contains(char::is_whitespace) {
        return Err(err("VALUE", value).into());
    }
    sys.options.set(key, value)
}

impl fmt::Display for SentenceSystem {
    /// Canonical scenario text; parsing it yields an equal system.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (atom, v) in &self.base_facts {
            writeln!(f, "atom {atom} = {v}")?;
        }
        for (name, body) in &self.definitions {
            writeln!(f, "sentence {name} := {}", format(body))?;
        }
        for ax in &self.axioms {
            writeln!(f, "axiom {}", format(ax))?;
        }
        for g in &self.goals {
            writeln!(f, "goal {} : {}", g.label, format(&g.formula))?;
        }
        for (k, v) in self.options.raw() {
            writeln!(f, "option {k} = {v}")?;
        }
        Ok(())
    }
}
