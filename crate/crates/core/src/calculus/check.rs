use std::collections::BTreeSet;

use super::script::{Justification, ProofScript, Step};
use super::Theory;
use crate::syntax::{format, Formula};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CheckVerdict {
    Valid,
    Invalid { step: usize, reason: String },
}

impl CheckVerdict {
    pub fn is_valid(&self) -> bool {
        *self == CheckVerdict::Valid
    }
}

/// Checks every step locally and the assumption bracketing. The first
/// offending step is reported.
pub fn check_proof(th: &Theory, ps: &ProofScript) -> CheckVerdict {
    match check_steps(th, &ps.steps) {
        Ok(()) => CheckVerdict::Valid,
        Err((step, reason)) => CheckVerdict::Invalid { step, reason },
    }
}

/// [`check_proof`], additionally requiring the script to conclude `goal`.
pub fn check_proof_of(th: &Theory, ps: &ProofScript, goal: &Formula) -> CheckVerdict {
    let verdict = check_proof(th, ps);
    if !verdict.is_valid() {
        return verdict;
    }
    let last = ps.steps.last().expect("valid scripts are nonempty");
    if last.formula != *goal {
        return CheckVerdict::Invalid {
            step: last.index,
            reason: format!("concludes {}, goal is {}", format(&last.formula), format(goal)),
        };
    }
    CheckVerdict::Valid
}

type Failure = (usize, String);

fn check_steps(th: &Theory, steps: &[Step]) -> Result<(), Failure> {
    if steps.is_empty() {
        return Err((0, "empty proof".into()));
    }
    // one frame per open assumption, frame 0 is the top level
    let mut frames: Vec<Vec<usize>> = vec![Vec::new()];
    let mut visible: BTreeSet<usize> = BTreeSet::new();
    for (pos, step) in steps.iter().enumerate() {
        let k = pos + 1;
        let fail = |reason: String| Err((k, reason));
        if step.index != k {
            return fail(format!("step is numbered {}, expected {k}", step.index));
        }
        let open = frames.len() - 1;
        let expected_depth = match step.justification {
            Justification::Assume => open + 1,
            Justification::ImpIntro if open == 0 => return fail("no open assumption to discharge".into()),
            Justification::ImpIntro => open - 1,
            _ => open,
        };
        if step.depth != expected_depth {
            return fail(format!("nesting depth {} where {expected_depth} is required", step.depth));
        }
        for &p in &step.premises {
            if !visible.contains(&p) {
                return fail(format!("premise {p} is not visible here"));
            }
        }
        let cited: Vec<&Formula> = step.premises.iter().map(|&p| &steps[p - 1].formula).collect();
        check_rule(th, steps, step, &cited, &frames).map_err(|reason| (k, reason))?;
        match step.justification {
            Justification::Assume => frames.push(vec![k]),
            Justification::ImpIntro => {
                for gone in frames.pop().expect("checked above") {
                    visible.remove(&gone);
                }
                frames.last_mut().expect("top level").push(k);
            }
            _ => frames.last_mut().expect("top level").push(k),
        }
        visible.insert(k);
    }
    if frames.len() > 1 {
        return Err((steps.len(), "proof ends with an open assumption".into()));
    }
    Ok(())
}

fn arity(cited: &[&Formula], n: usize) -> Result<(), String> {
    if cited.len() == n {
        Ok(())
    } else {
        Err(format!("expects {n} premise(s), got {}", cited.len()))
    }
}

fn check_rule(
    th: &Theory,
    steps: &[Step],
    step: &Step,
    cited: &[&Formula],
    frames: &[Vec<usize>],
) -> Result<(), String> {
    let f = &step.formula;
    let mismatch = || Err(format!("{} does not match {}", format(f), step.justification.keyword()));
    if step.justification.takes_no_premises() {
        arity(cited, 0)?;
    }
    match &step.justification {
        Justification::Premise => {
            if !th.axioms.contains(f) {
                return Err(format!("{} is not an axiom", format(f)));
            }
        }
        Justification::Assume => {}
        Justification::ImpIntro => {
            arity(cited, 1)?;
            let assumption = &steps[frames.last().expect("open frame")[0] - 1].formula;
            match f {
                Formula::Imp(a, b) if **a == *assumption && **b == *cited[0] => {}
                _ => {
                    return Err(format!(
                        "discharging {} from {} cannot give {}",
                        format(assumption),
                        format(cited[0]),
                        format(f)
                    ))
                }
            }
        }
        Justification::ImpElim => {
            arity(cited, 2)?;
            match cited[0] {
                Formula::Imp(a, b) if **a == *cited[1] && **b == *f => {}
                _ => return mismatch(),
            }
        }
        Justification::AndIntro => {
            arity(cited, 2)?;
            if *f != Formula::and(cited[0].clone(), cited[1].clone()) {
                return mismatch();
            }
        }
        Justification::AndElimL | Justification::AndElimR => {
            arity(cited, 1)?;
            match cited[0] {
                Formula::And(l, _) if step.justification == Justification::AndElimL && **l == *f => {}
                Formula::And(_, r) if step.justification == Justification::AndElimR && **r == *f => {}
                _ => return mismatch(),
            }
        }
        Justification::OrIntroL | Justification::OrIntroR => {
            arity(cited, 1)?;
            match f {
                Formula::Or(l, _) if step.justification == Justification::OrIntroL && **l == *cited[0] => {}
                Formula::Or(_, r) if step.justification == Justification::OrIntroR && **r == *cited[0] => {}
                _ => return mismatch(),
            }
        }
        Justification::OrElim => {
            arity(cited, 3)?;
            let Formula::Or(a, b) = cited[0] else { return mismatch() };
            if *cited[1] != Formula::imp((**a).clone(), f.clone()) || *cited[2] != Formula::imp((**b).clone(), f.clone()) {
                return mismatch();
            }
        }
        Justification::Efq => {
            arity(cited, 1)?;
            if *cited[0] != Formula::Falsum {
                return mismatch();
            }
        }
        Justification::DefL(name) | Justification::DefR(name) => {
            let body = th.definitions.get(name).ok_or_else(|| format!("`{name}` is not defined"))?;
            let sentence = Formula::atom(name.as_str());
            let expected = if matches!(step.justification, Justification::DefL(_)) {
                Formula::imp(sentence, body.clone())
            } else {
                Formula::imp(body.clone(), sentence)
            };
            if *f != expected {
                return mismatch();
            }
        }
        Justification::CoReflection => match f {
            Formula::Imp(a, b) if **b == Formula::boxed((**a).clone()) => {}
            _ => return mismatch(),
        },
        Justification::KDist => {
            let ok = match f {
                Formula::Imp(l, r) => match (&**l, &**r) {
                    (Formula::Box(ab), Formula::Imp(ba, bb)) => match (&**ab, &**ba, &**bb) {
                        (Formula::Imp(a, b), Formula::Box(a2), Formula::Box(b2)) => a == a2 && b == b2,
                        _ => false,
                    },
                    _ => false,
                },
                _ => false,
            };
            if !ok {
                return mismatch();
            }
        }
        Justification::Reflection => {
            if !th.reflection {
                return Err("reflection disabled".into());
            }
            arity(cited, 1)?;
            if steps[step.premises[0] - 1].depth != 0 {
                return Err("reflection applies only to top-level theorems".into());
            }
            if *cited[0] != Formula::boxed(f.clone()) {
                return mismatch();
            }
        }
    }
    Ok(())
}
