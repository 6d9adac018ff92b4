//! Executable theories of truth for finite self-referential sentence systems.
//!
//! * [`syntax`]: formulas, scenario files, printing and closures.
//! * [`kripke`]: Strong Kleene evaluation, the jump operator, least and all fixed points.
//! * [`tarski`]: indexed truth predicates, level checking and inference.
//! * [`calculus`]: a constructive provability calculus with a proof checker,
//!   a G4ip-based prover and an erasure consistency check.
//! * [`workbench`]: commands, reports and the bundled scenarios.

pub mod calculus;
pub mod kripke;
pub mod syntax;
pub mod tarski;
pub mod workbench;

pub use syntax::{format, parse_formula, parse_system, Formula, Index, SentenceSystem};
