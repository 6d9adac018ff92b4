use super::scenarios;
use super::{Report, Status};
use crate::calculus::{self, CheckVerdict, Consistency, ProofScript, Theory, WeakFalsity};
use crate::kripke::{self, Classification, Verdict};
use crate::syntax::{parse_formula, parse_system, SentenceSystem};
use crate::tarski::{self, TarskiError};

pub const DEMOS: &[&str] = &[
    "liar",
    "truth-teller",
    "revenge",
    "tarski-liar",
    "provable-liar",
    "box-negation-liar",
    "global-truth",
    "proof-paradox",
];

type Outcome = Result<String, String>;

struct Demo {
    checks: Vec<(String, &'static str, Outcome)>,
}

impl Demo {
    fn check(&mut self, label: impl Into<String>, expected: &'static str, got: Outcome) {
        self.checks.push((label.into(), expected, got));
    }
}

fn system(file: &str) -> SentenceSystem {
    parse_system(scenarios::get(file).expect("bundled scenario")).expect("bundled scenarios parse")
}

fn theory(file: &str) -> Theory {
    Theory::from(&system(file))
}

fn classification(file: &str, name: &str) -> Outcome {
    let sys = system(file);
    match kripke::classify(&sys, name, sys.options.cap()).map_err(|e| e.to_string())? {
        Verdict::Exact(Classification::GroundedTrue) => Ok("grounded-true".into()),
        Verdict::Exact(Classification::GroundedFalse) => Ok("grounded-false".into()),
        Verdict::Exact(Classification::Paradoxical) => Ok("paradoxical".into()),
        Verdict::Exact(Classification::UngroundedNonParadoxical { .. }) => Ok("ungrounded".into()),
        Verdict::GroundednessOnly => Ok("groundedness only".into()),
    }
}

fn levels(file: &str, infer: bool) -> Outcome {
    let sys = system(file);
    let lv = if infer { tarski::infer_levels(&sys) } else { tarski::check_levels(&sys) };
    match lv {
        Ok(lv) => Ok(lv.report_line()),
        Err(TarskiError::Violation(v)) => Ok(v.reason.to_string()),
        Err(e) => Err(e.to_string()),
    }
}

fn proved(file: &str, label: &str) -> Outcome {
    let sys = system(file);
    let goal = sys.goal(label).ok_or_else(|| format!("no goal `{label}`"))?;
    let found = calculus::prove(&Theory::from(&sys), &goal.formula, sys.options.depth()).map_err(|e| e.to_string())?;
    Ok(if found.is_some() { "proved" } else { "not proved" }.into())
}

fn checked(file: &str, script: &str) -> Outcome {
    let sys = system(file);
    let ps = ProofScript::parse(scenarios::get(script).expect("bundled script")).map_err(|e| e.to_string())?;
    let goal = sys.goal(&ps.goal_label).ok_or_else(|| format!("no goal `{}`", ps.goal_label))?;
    Ok(match calculus::check_proof_of(&Theory::from(&sys), &ps, &goal.formula) {
        CheckVerdict::Valid => "valid".into(),
        CheckVerdict::Invalid { step, reason } => format!("invalid at step {step}: {reason}"),
    })
}

fn consistency(file: &str) -> Outcome {
    match calculus::consistency_check(&theory(file)).map_err(|e| e.to_string())? {
        Consistency::Consistent => Ok("consistent".into()),
        Consistency::Inconsistent => Ok("inconsistent".into()),
    }
}

fn weakly_false(file: &str, formula: &str) -> Outcome {
    let f = parse_formula(formula).map_err(|e| e.to_string())?;
    match calculus::weak_falsity(&theory(file), &f, 1).map_err(|e| e.to_string())? {
        WeakFalsity::WeaklyFalse => Ok("weakly-false".into()),
        WeakFalsity::Unknown => Ok("unknown".into()),
    }
}

/// Runs a bundled scenario end to end, printing expected and computed verdicts.
pub fn demo(name: &str) -> Report {
    let mut d = Demo { checks: Vec::new() };
    match name {
        "liar" => {
            d.check("classify L", "paradoxical", classification("liar.sys", "L"));
            d.check("tarski Lam := ~T1(Lam)", "index-too-low", levels("tarski-liar.sys", false));
        }
        "truth-teller" => {
            d.check("classify K", "ungrounded", classification("truth-teller.sys", "K"));
            let all = kripke::enumerate_fixed_points(&system("truth-teller.sys"), 12)
                .map(|v| v.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(" ; "))
                .map_err(|e| e.to_string());
            d.check("fixed points", "K=f ; K=t ; K=u", all);
            d.check("classify s1 (chain)", "grounded-true", classification("chain.sys", "s1"));
        }
        "revenge" => {
            d.check("classify R", "paradoxical", classification("revenge.sys", "R"));
            let never = kripke::least_fixed_point(&system("revenge.sys"))
                .map(|(_, trace)| match trace.first_true("R") {
                    None => "never true at any stage".to_string(),
                    Some(k) => format!("true at stage {k}"),
                })
                .map_err(|e| e.to_string());
            d.check("stages where R is true", "never true at any stage", never);
            d.check("level for Lam := ~T?(Lam)", "cyclic-dependency", levels("tarski-liar-infer.sys", true));
        }
        "tarski-liar" => {
            d.check("check Lam := ~T1(Lam)", "index-too-low", levels("tarski-liar.sys", false));
            d.check("infer Lam := ~T?(Lam)", "cyclic-dependency", levels("tarski-liar-infer.sys", true));
            d.check("infer chain", "levels: s0=0 s1=1 s2=2", levels("tarski-infer.sys", true));
            d.check("check stratified", "levels: s0=0 s1=1 s2=2", levels("tarski-stratified.sys", false));
        }
        "provable-liar" => {
            d.check("script notL", "valid", checked("provable-liar.sys", "provable-liar-notL.proof"));
            d.check("script notnotboxL", "valid", checked("provable-liar.sys", "provable-liar-notnotboxL.proof"));
            d.check("prove ~L", "proved", proved("provable-liar.sys", "notL"));
            d.check("prove ~~box L", "proved", proved("provable-liar.sys", "notnotboxL"));
            d.check("consistency", "consistent", consistency("provable-liar.sys"));
        }
        "box-negation-liar" => {
            d.check("prove ~~L2", "proved", proved("box-negation-liar.sys", "notnotL2"));
            d.check("prove L2 -> box false", "proved", proved("box-negation-liar.sys", "weakL2"));
            d.check("weak falsity of L2", "weakly-false", weakly_false("box-negation-liar.sys", "L2"));
            d.check("consistency", "consistent", consistency("box-negation-liar.sys"));
        }
        "global-truth" => {
            d.check("unboxed consistency", "inconsistent", consistency("global-truth.sys"));
            d.check("boxed: prove box false", "proved", proved("global-truth-boxed.sys", "boxfalse"));
            d.check("boxed consistency", "consistent", consistency("global-truth-boxed.sys"));
        }
        "proof-paradox" => {
            d.check("prove ~~R", "proved", proved("proof-paradox.sys", "notnotR"));
            d.check("prove R -> box false", "proved", proved("proof-paradox.sys", "weakR"));
            d.check("consistency", "consistent", consistency("proof-paradox.sys"));
        }
        other => {
            return Report::ill_formed(format!("unknown demo `{other}` (available: {})", DEMOS.join(", ")));
        }
    }
    let mut lines = Vec::new();
    let mut matched = 0;
    for (label, expected, got) in &d.checks {
        let got = match got {
            Ok(v) => v.clone(),
            Err(e) => format!("error: {e}"),
        };
        let ok = got == *expected;
        matched += usize::from(ok);
        lines.push(format!("{label}: expected {expected}, got {got} [{}]", if ok { "ok" } else { "MISMATCH" }));
    }
    lines.push(format!("demo {name}: {matched}/{} checks match", d.checks.len()));
    Report::new(if matched == d.checks.len() { Status::Ok } else { Status::Failed }, lines)
}
