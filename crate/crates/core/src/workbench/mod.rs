//! Commands, plain-text reports and the bundled demos.
//!
//! Every command has a text-level entry point (`*_report`) and a file-level
//! one through [`run`]. Reports are deterministic: identical inputs give
//! byte-identical output.

mod demo;
pub mod scenarios;

use std::fmt;
use std::path::PathBuf;

use crate::calculus::{self, CalculusError, Consistency, ProofScript, Theory};
use crate::kripke::{self, KripkeError, Verdict};
use crate::syntax::{parse_system, SentenceSystem};
use crate::tarski::{self, TarskiError};

pub use demo::{demo, DEMOS};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Command {
    Parse { file: PathBuf },
    Kripke { file: PathBuf, trace: bool, all_fixpoints: bool, cap: Option<usize> },
    Classify { file: PathBuf, name: String },
    Tarski { file: PathBuf, infer: bool },
    Check { file: PathBuf, script: PathBuf },
    Prove { file: PathBuf, goal: String, depth: Option<usize> },
    Consistency { file: PathBuf },
    Demo { name: String },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    /// A goal was not proved, a violation was found or the theory is inconsistent.
    Failed,
    IllFormed,
    BoundExceeded,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::Failed => 1,
            Status::IllFormed => 2,
            Status::BoundExceeded => 3,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub status: Status,
    pub lines: Vec<String>,
}

impl Report {
    fn new(status: Status, lines: Vec<String>) -> Self {
        Report { status, lines }
    }

    fn error(status: Status, message: impl fmt::Display) -> Self {
        Report::new(status, vec![format!("error: {message}")])
    }

    fn ill_formed(message: impl fmt::Display) -> Self {
        Report::error(Status::IllFormed, message)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for line in &self.lines {
            writeln!(f, "{line}")?;
        }
        Ok(())
    }
}

impl From<KripkeError> for Report {
    fn from(e: KripkeError) -> Self {
        match e {
            KripkeError::CapExceeded { .. } => Report::error(Status::BoundExceeded, e),
            other => Report::ill_formed(other),
        }
    }
}

impl From<CalculusError> for Report {
    fn from(e: CalculusError) -> Self {
        match e {
            CalculusError::BudgetExceeded(_) => Report::error(Status::BoundExceeded, e),
            CalculusError::ReflectionEnabled => Report::ill_formed(e),
        }
    }
}

/// Runs a command; the exit code is `report.status.exit_code()`.
pub fn run(c: &Command) -> (Report, i32) {
    let report = match c {
        Command::Parse { file } => with_file(file, parse_report),
        Command::Kripke { file, trace, all_fixpoints, cap } => {
            with_file(file, |text| kripke_report(text, *trace, *all_fixpoints, *cap))
        }
        Command::Classify { file, name } => with_file(file, |text| classify_report(text, name)),
        Command::Tarski { file, infer } => with_file(file, |text| tarski_report(text, *infer)),
        Command::Check { file, script } => {
            with_file(file, |text| with_file(script, |script_text| check_report(text, script_text)))
        }
        Command::Prove { file, goal, depth } => with_file(file, |text| prove_report(text, goal, *depth)),
        Command::Consistency { file } => with_file(file, consistency_report),
        Command::Demo { name } => demo(name),
    };
    let code = report.status.exit_code();
    (report, code)
}

fn with_file(path: &PathBuf, f: impl FnOnce(&str) -> Report) -> Report {
    match std::fs::read_to_string(path) {
        Ok(text) => f(&text),
        Err(e) => Report::ill_formed(format!("{}: {e}", path.display())),
    }
}

fn load(text: &str) -> Result<SentenceSystem, Report> {
    parse_system(text).map_err(Report::ill_formed)
}

macro_rules! try_report {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(e) => return Report::from(e),
        }
    };
}

/// Canonical form of the system.
pub fn parse_report(text: &str) -> Report {
    let sys = try_report!(load(text));
    Report::new(Status::Ok, sys.to_string().lines().map(str::to_string).collect())
}

/// `lfp: ...` and `stages: n`, optionally the trace and every fixed point.
pub fn kripke_report(text: &str, trace: bool, all_fixpoints: bool, cap: Option<usize>) -> Report {
    let sys = try_report!(load(text));
    let (lfp, stages) = try_report!(kripke::least_fixed_point(&sys));
    let mut lines = vec![format!("lfp: {lfp}").trim_end().to_string(), format!("stages: {}", stages.stages.len())];
    if trace {
        lines.extend(stages.lines());
    }
    if all_fixpoints {
        let all = try_report!(kripke::enumerate_fixed_points(&sys, cap.unwrap_or(sys.options.cap())));
        lines.push(format!("fixpoints: {}", all.len()));
        lines.extend(all.iter().map(|i| format!("fixpoint: {i}").trim_end().to_string()));
    }
    Report::new(Status::Ok, lines)
}

pub fn classify_report(text: &str, name: &str) -> Report {
    let sys = try_report!(load(text));
    let cap = sys.options.cap();
    match try_report!(kripke::classify(&sys, name, cap)) {
        Verdict::Exact(c) => {
            let mut lines = vec![c.report_line(name)];
            if c == kripke::Classification::Paradoxical {
                lines.push(format!("{name} never evaluates as true at any stage"));
            }
            Report::new(Status::Ok, lines)
        }
        Verdict::GroundednessOnly => Report::new(
            Status::BoundExceeded,
            vec![format!("{name}: ungrounded (groundedness only: more than {cap} sentences to enumerate)")],
        ),
    }
}

/// `levels: ...` and `values: ...`, or the first violation.
pub fn tarski_report(text: &str, infer: bool) -> Report {
    let sys = try_report!(load(text));
    let levels = if infer { tarski::infer_levels(&sys) } else { tarski::check_levels(&sys) };
    let levels = match levels {
        Ok(lv) => lv,
        Err(TarskiError::Violation(v)) => return Report::new(Status::Failed, vec![v.to_string()]),
        Err(e) => return Report::ill_formed(e),
    };
    let values = match tarski::tarski_eval(&sys, &levels) {
        Ok(v) => v,
        Err(e) => return Report::ill_formed(e),
    };
    let values: Vec<String> = values.iter().map(|(n, v)| format!("{n}={v}")).collect();
    Report::new(Status::Ok, vec![levels.report_line(), format!("values: {}", values.join(" ")).trim_end().to_string()])
}

/// Checks a proof script; its label selects the goal when the system has one.
pub fn check_report(text: &str, script: &str) -> Report {
    let sys = try_report!(load(text));
    let ps = match ProofScript::parse(script) {
        Ok(ps) => ps,
        Err(e) => return Report::ill_formed(e),
    };
    let th = Theory::from(&sys);
    let verdict = match sys.goal(&ps.goal_label) {
        Some(goal) => calculus::check_proof_of(&th, &ps, &goal.formula),
        None => calculus::check_proof(&th, &ps),
    };
    match verdict {
        calculus::CheckVerdict::Valid => Report::new(Status::Ok, vec![format!("{}: valid", ps.goal_label)]),
        calculus::CheckVerdict::Invalid { step, reason } => {
            Report::new(Status::Failed, vec![format!("{}: invalid at step {step}: {reason}", ps.goal_label)])
        }
    }
}

pub fn prove_report(text: &str, label: &str, depth: Option<usize>) -> Report {
    let sys = try_report!(load(text));
    let Some(goal) = sys.goal(label) else {
        return Report::ill_formed(format!("no goal labelled `{label}`"));
    };
    let th = Theory::from(&sys);
    let depth = depth.unwrap_or(sys.options.depth());
    let budget = sys.options.budget().unwrap_or(calculus::DEFAULT_BUDGET);
    match try_report!(calculus::prove_with(&th, label, &goal.formula, depth, budget)) {
        Some(ps) => Report::new(Status::Ok, ps.to_string().lines().map(str::to_string).collect()),
        None => Report::new(
            Status::Failed,
            vec![format!("{label}: not proved at depth {depth} (this is not a refutation)")],
        ),
    }
}

pub fn consistency_report(text: &str) -> Report {
    let sys = try_report!(load(text));
    let budget = sys.options.budget().unwrap_or(calculus::DEFAULT_BUDGET);
    match try_report!(calculus::consistency_check_with(&Theory::from(&sys), budget)) {
        Consistency::Consistent => Report::new(Status::Ok, vec!["consistent".into()]),
        Consistency::Inconsistent => Report::new(Status::Failed, vec!["inconsistent".into()]),
    }
}
