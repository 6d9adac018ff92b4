//! Python bindings: sentence systems, the three semantics and the command reports.

use std::collections::BTreeMap;

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use truthbench::calculus::{self, CheckVerdict, Consistency, IpcVerdict, ProofScript, Sequent, Theory, WeakFalsity};
use truthbench::kripke::{self, Interpretation3, Verdict};
use truthbench::tarski;
use truthbench::workbench::{self, Report};

fn value_error(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn calculus_error(e: calculus::CalculusError) -> PyErr {
    match e {
        calculus::CalculusError::BudgetExceeded(_) => PyRuntimeError::new_err(e.to_string()),
        other => value_error(other),
    }
}

fn formula(text: &str) -> PyResult<truthbench::Formula> {
    truthbench::parse_formula(text).map_err(value_error)
}

fn interpretation(i: &Interpretation3) -> BTreeMap<String, String> {
    i.assignment.iter().map(|(k, v)| (k.clone(), v.to_string())).collect()
}

/// Canonical text of a formula.
#[pyfunction]
fn canonical(text: &str) -> PyResult<String> {
    Ok(truthbench::format(&formula(text)?))
}

/// True when `hypotheses |- goal` holds in intuitionistic propositional logic.
#[pyfunction]
#[pyo3(signature = (goal, hypotheses = Vec::new()))]
fn ipc_provable(goal: &str, hypotheses: Vec<String>) -> PyResult<bool> {
    let hyps = hypotheses.iter().map(|h| formula(h)).collect::<PyResult<Vec<_>>>()?;
    let verdict = calculus::ipc_decide(&Sequent::new(hyps, formula(goal)?)).map_err(calculus_error)?;
    Ok(verdict == IpcVerdict::Provable)
}

/// A parsed scenario: sentences, base facts, axioms, goals and options.
#[pyclass(module = "truthbench", frozen)]
struct System {
    inner: truthbench::SentenceSystem,
}

impl System {
    fn theory(&self) -> Theory {
        Theory::from(&self.inner)
    }
}

#[pymethods]
impl System {
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        truthbench::parse_system(text).map(|inner| System { inner }).map_err(value_error)
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("System({:?})", self.inner.to_string())
    }

    /// Sentence names in declaration order.
    #[getter]
    fn sentences(&self) -> Vec<String> {
        self.inner.definitions.keys().cloned().collect()
    }

    /// Goal labels in declaration order.
    #[getter]
    fn goals(&self) -> Vec<String> {
        self.inner.goals.iter().map(|g| g.label.clone()).collect()
    }

    /// Least fixed point as a mapping to `"t"`, `"f"` or `"u"`, plus the number of stages.
    fn least_fixed_point(&self) -> PyResult<(BTreeMap<String, String>, usize)> {
        let (lfp, trace) = kripke::least_fixed_point(&self.inner).map_err(value_error)?;
        Ok((interpretation(&lfp), trace.stages.len()))
    }

    #[pyo3(signature = (cap = None))]
    fn fixed_points(&self, cap: Option<usize>) -> PyResult<Vec<BTreeMap<String, String>>> {
        let cap = cap.unwrap_or(self.inner.options.cap());
        let all = kripke::enumerate_fixed_points(&self.inner, cap).map_err(value_error)?;
        Ok(all.iter().map(interpretation).collect())
    }

    /// `grounded-true`, `grounded-false`, `paradoxical`, `ungrounded` or `groundedness-only`.
    fn classify(&self, name: &str) -> PyResult<&'static str> {
        let verdict = kripke::classify(&self.inner, name, self.inner.options.cap()).map_err(value_error)?;
        Ok(match verdict {
            Verdict::Exact(kripke::Classification::GroundedTrue) => "grounded-true",
            Verdict::Exact(kripke::Classification::GroundedFalse) => "grounded-false",
            Verdict::Exact(kripke::Classification::Paradoxical) => "paradoxical",
            Verdict::Exact(kripke::Classification::UngroundedNonParadoxical { .. }) => "ungrounded",
            Verdict::GroundednessOnly => "groundedness-only",
        })
    }

    /// Levels and classical values of a stratified system; raises on a violation.
    #[pyo3(signature = (infer = false))]
    fn tarski(&self, infer: bool) -> PyResult<(BTreeMap<String, u32>, BTreeMap<String, bool>)> {
        let lv = if infer { tarski::infer_levels(&self.inner) } else { tarski::check_levels(&self.inner) }
            .map_err(value_error)?;
        let values = tarski::tarski_eval(&self.inner, &lv).map_err(value_error)?;
        Ok((lv.levels.clone(), values))
    }

    /// A checked proof script for `goal` (a goal label or a formula), or `None`.
    #[pyo3(signature = (goal, depth = None))]
    fn prove(&self, goal: &str, depth: Option<usize>) -> PyResult<Option<String>> {
        let (label, target) = match self.inner.goal(goal) {
            Some(g) => (goal.to_string(), g.formula.clone()),
            None => ("goal".to_string(), formula(goal)?),
        };
        let depth = depth.unwrap_or(self.inner.options.depth());
        let budget = self.inner.options.budget().unwrap_or(calculus::DEFAULT_BUDGET);
        let found = calculus::prove_with(&self.theory(), &label, &target, depth, budget).map_err(calculus_error)?;
        Ok(found.map(|ps| ps.to_string()))
    }

    /// `None` when the script is valid, otherwise `(step, reason)`.
    fn check(&self, script: &str) -> PyResult<Option<(usize, String)>> {
        let ps = ProofScript::parse(script).map_err(value_error)?;
        let th = self.theory();
        let verdict = match self.inner.goal(&ps.goal_label) {
            Some(g) => calculus::check_proof_of(&th, &ps, &g.formula),
            None => calculus::check_proof(&th, &ps),
        };
        Ok(match verdict {
            CheckVerdict::Valid => None,
            CheckVerdict::Invalid { step, reason } => Some((step, reason.to_string())),
        })
    }

    fn consistent(&self) -> PyResult<bool> {
        let c = calculus::consistency_check(&self.theory()).map_err(calculus_error)?;
        Ok(c == Consistency::Consistent)
    }

    /// True when `f -> box false` is proved at the given depth.
    #[pyo3(signature = (f, depth = 1))]
    fn weakly_false(&self, f: &str, depth: usize) -> PyResult<bool> {
        let w = calculus::weak_falsity(&self.theory(), &formula(f)?, depth).map_err(calculus_error)?;
        Ok(w == WeakFalsity::WeaklyFalse)
    }
}

fn report(r: Report) -> (i32, String) {
    (r.status.exit_code(), r.to_string())
}

/// Runs a bundled demo; returns the exit code and the report text.
#[pyfunction]
fn demo(name: &str) -> (i32, String) {
    report(workbench::demo(name))
}

/// Names of the bundled demos.
#[pyfunction]
fn demos() -> Vec<&'static str> {
    workbench::DEMOS.to_vec()
}

/// Text of a bundled scenario or proof script.
#[pyfunction]
fn scenario(file: &str) -> PyResult<&'static str> {
    workbench::scenarios::get(file).ok_or_else(|| value_error(format!("no bundled file `{file}`")))
}

#[pymodule]
#[pyo3(name = "truthbench")]
fn truthbench_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<System>()?;
    m.add_function(wrap_pyfunction!(canonical, m)?)?;
    m.add_function(wrap_pyfunction!(ipc_provable, m)?)?;
    m.add_function(wrap_pyfunction!(demo, m)?)?;
    m.add_function(wrap_pyfunction!(demos, m)?)?;
    m.add_function(wrap_pyfunction!(scenario, m)?)?;
    Ok(())
}
