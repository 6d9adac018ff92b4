use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn scenarios() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../core/scenarios")
}

fn truthbench(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_truthbench")).args(args).current_dir(dir).output().expect("run truthbench")
}

fn golden(name: &str) -> String {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(format!("{name}.txt"));
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

/// `(golden file, arguments, exit code)`, run from the scenario directory.
const CASES: &[(&str, &[&str], i32)] = &[
    ("parse-liar", &["parse", "liar.sys"], 0),
    ("kripke-liar", &["kripke", "liar.sys", "--trace", "--all-fixpoints"], 0),
    ("kripke-truth-teller", &["kripke", "truth-teller.sys", "--all-fixpoints"], 0),
    ("kripke-chain", &["kripke", "chain.sys", "--trace"], 0),
    ("classify-liar", &["classify", "liar.sys", "L"], 0),
    ("classify-truth-teller", &["classify", "truth-teller.sys", "K"], 0),
    ("classify-chain", &["classify", "chain.sys", "s1"], 0),
    ("classify-revenge", &["classify", "revenge.sys", "R"], 0),
    ("tarski-liar", &["tarski", "tarski-liar.sys"], 1),
    ("tarski-liar-infer", &["tarski", "tarski-liar-infer.sys", "--infer"], 1),
    ("tarski-infer", &["tarski", "tarski-infer.sys", "--infer"], 0),
    ("tarski-stratified", &["tarski", "tarski-stratified.sys"], 0),
    ("check-notL", &["check", "provable-liar.sys", "provable-liar-notL.proof"], 0),
    ("check-notnotboxL", &["check", "provable-liar.sys", "provable-liar-notnotboxL.proof"], 0),
    ("prove-notL", &["prove", "provable-liar.sys", "notL", "--depth", "3"], 0),
    ("prove-notnotboxL", &["prove", "provable-liar.sys", "notnotboxL"], 0),
    ("prove-notnotL2", &["prove", "box-negation-liar.sys", "notnotL2"], 0),
    ("prove-weakL2", &["prove", "box-negation-liar.sys", "weakL2"], 0),
    ("prove-boxfalse", &["prove", "global-truth-boxed.sys", "boxfalse"], 0),
    ("prove-notnotR", &["prove", "proof-paradox.sys", "notnotR"], 0),
    ("prove-weakR", &["prove", "proof-paradox.sys", "weakR"], 0),
    ("prove-absurd", &["prove", "combined-liars.sys", "absurd"], 1),
    ("consistency-provable-liar", &["consistency", "provable-liar.sys"], 0),
    ("consistency-global-truth", &["consistency", "global-truth.sys"], 1),
    ("consistency-global-truth-boxed", &["consistency", "global-truth-boxed.sys"], 0),
    ("consistency-combined", &["consistency", "combined-liars.sys"], 0),
    ("demo-liar", &["demo", "liar"], 0),
    ("demo-truth-teller", &["demo", "truth-teller"], 0),
    ("demo-revenge", &["demo", "revenge"], 0),
    ("demo-tarski-liar", &["demo", "tarski-liar"], 0),
    ("demo-provable-liar", &["demo", "provable-liar"], 0),
    ("demo-box-negation-liar", &["demo", "box-negation-liar"], 0),
    ("demo-global-truth", &["demo", "global-truth"], 0),
    ("demo-proof-paradox", &["demo", "proof-paradox"], 0),
];

#[test]
fn golden_reports_and_exit_codes() {
    let dir = scenarios();
    for (name, args, code) in CASES {
        let out = truthbench(args, &dir);
        assert_eq!(out.status.code(), Some(*code), "{name}: {}", String::from_utf8_lossy(&out.stdout));
        assert_eq!(String::from_utf8(out.stdout).unwrap(), golden(name), "{name}");
    }
}

#[test]
fn reports_are_byte_identical_across_runs() {
    let dir = scenarios();
    for (_, args, _) in CASES {
        assert_eq!(truthbench(args, &dir).stdout, truthbench(args, &dir).stdout, "{args:?}");
    }
}

fn scratch(files: &[(&str, &str)]) -> tempfile::TempDir {
    let dir = tempfile::tempdir().unwrap();
    for (name, text) in files {
        std::fs::write(dir.path().join(name), text).unwrap();
    }
    dir
}

fn code(args: &[&str], dir: &Path) -> Option<i32> {
    truthbench(args, dir).status.code()
}

#[test]
fn ill_formed_inputs_exit_2() {
    let dir = scratch(&[
        ("garbage.sys", "sentence L := ~(T(L)\n"),
        ("dangling.sys", "sentence L := ~T(M)\n"),
        ("reflective.sys", "sentence L := ~box L\noption reflection = on\n"),
        ("bad.proof", "proof notL\n1 | L | wave\n"),
        ("liar.sys", "sentence L := ~box L\ngoal notL : ~L\n"),
    ]);
    let p = dir.path();
    assert_eq!(code(&["parse", "garbage.sys"], p), Some(2));
    assert_eq!(code(&["parse", "dangling.sys"], p), Some(2));
    assert_eq!(code(&["parse", "missing.sys"], p), Some(2));
    assert_eq!(code(&["consistency", "reflective.sys"], p), Some(2));
    assert_eq!(code(&["prove", "reflective.sys", "notL"], p), Some(2));
    assert_eq!(code(&["check", "liar.sys", "bad.proof"], p), Some(2));
    assert_eq!(code(&["prove", "liar.sys", "nope"], p), Some(2));
    assert_eq!(code(&["kripke", "liar.sys"], p), Some(2));
    assert_eq!(code(&["classify", "liar.sys", "Q"], p), Some(2));
    assert_eq!(code(&["demo", "nope"], p), Some(2));
    assert_eq!(code(&["frobnicate"], p), Some(2));
    let out = truthbench(&["parse", "garbage.sys"], p);
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("error: "));
}

#[test]
fn exhausted_bounds_exit_3() {
    let dir = scratch(&[
        ("capped.sys", "sentence K := T(K)\noption cap = 0\n"),
        ("tight.sys", "sentence L := ~box L\ngoal notL : ~L\noption budget = 1\n"),
    ]);
    let p = dir.path();
    assert_eq!(code(&["kripke", "capped.sys", "--all-fixpoints"], p), Some(3));
    assert_eq!(code(&["classify", "capped.sys", "K"], p), Some(3));
    let out = truthbench(&["classify", "capped.sys", "K"], p);
    assert!(String::from_utf8_lossy(&out.stdout).contains("groundedness only"));
    assert_eq!(code(&["kripke", "capped.sys", "--all-fixpoints", "--cap", "1"], p), Some(0));
    assert_eq!(code(&["prove", "tight.sys", "notL"], p), Some(3));
}

#[test]
fn invalid_script_exits_1() {
    let dir = scratch(&[
        ("liar.sys", "sentence L := ~box L\ngoal notL : ~L\n"),
        ("wrong.proof", "proof notL\n1 | box L -> L | reflection\n"),
        ("short.proof", "proof notL\n1 | L -> box L | coreflection\n"),
    ]);
    let p = dir.path();
    let out = truthbench(&["check", "liar.sys", "wrong.proof"], p);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "notL: invalid at step 1: reflection disabled\n");
    assert_eq!(code(&["check", "liar.sys", "short.proof"], p), Some(1));
}
