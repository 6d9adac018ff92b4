//! Scenario files and proof scripts shipped with the workbench.

macro_rules! bundle {
    ($($name:literal),* $(,)?) => {
        &[$(($name, include_str!(concat!("../../scenarios/", $name)))),*]
    };
}

/// `(file name, contents)` for every bundled file.
pub const FILES: &[(&str, &str)] = bundle![
    "liar.sys",
    "truth-teller.sys",
    "chain.sys",
    "revenge.sys",
    "tarski-liar.sys",
    "tarski-liar-infer.sys",
    "tarski-infer.sys",
    "tarski-stratified.sys",
    "provable-liar.sys",
    "provable-liar-notL.proof",
    "provable-liar-notnotboxL.proof",
    "box-negation-liar.sys",
    "global-truth.sys",
    "global-truth-boxed.sys",
    "proof-paradox.sys",
    "combined-liars.sys",
];

pub fn get(file: &str) -> Option<&'static str> {
    FILES.iter().find(|(n, _)| *n == file).map(|(_, text)| *text)
}

/// Proof scripts, all checked against `provable-liar.sys`.
pub fn proof_scripts() -> impl Iterator<Item = (&'static str, &'static str)> {
    FILES.iter().copied().filter(|(n, _)| n.ends_with(".proof"))
}
