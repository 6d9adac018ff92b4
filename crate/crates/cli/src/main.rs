use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use truthbench::workbench::{run, Command};

/// Liar-paradox workbench: staged truth, indexed truth and provability.
#[derive(Parser)]
#[command(name = "truthbench", version)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Parse a scenario file and print it in canonical form.
    Parse { file: PathBuf },
    /// Least fixed point of the jump, optionally with stages and all fixed points.
    Kripke {
        file: PathBuf,
        #[arg(long)]
        trace: bool,
        #[arg(long)]
        all_fixpoints: bool,
        /// Largest number of sentences to enumerate fixed points over.
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Grounded, paradoxical or ungrounded.
    Classify { file: PathBuf, name: String },
    /// Check (or with --infer, compute) the levels of indexed truth predicates.
    Tarski {
        file: PathBuf,
        #[arg(long)]
        infer: bool,
    },
    /// Check a proof script against the scenario's theory.
    Check { file: PathBuf, script: PathBuf },
    /// Search for a proof of a labelled goal.
    Prove {
        file: PathBuf,
        goal: String,
        /// Definition unfolding depth for schema instantiation.
        #[arg(long)]
        depth: Option<usize>,
    },
    /// Decide consistency through the box erasure.
    Consistency { file: PathBuf },
    /// Run a bundled scenario end to end.
    Demo { name: String },
}

impl From<Cmd> for Command {
    fn from(c: Cmd) -> Self {
        match c {
            Cmd::Parse { file } => Command::Parse { file },
            Cmd::Kripke { file, trace, all_fixpoints, cap } => Command::Kripke { file, trace, all_fixpoints, cap },
            Cmd::Classify { file, name } => Command::Classify { file, name },
            Cmd::Tarski { file, infer } => Command::Tarski { file, infer },
            Cmd::Check { file, script } => Command::Check { file, script },
            Cmd::Prove { file, goal, depth } => Command::Prove { file, goal, depth },
            Cmd::Consistency { file } => Command::Consistency { file },
            Cmd::Demo { name } => Command::Demo { name },
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let (report, code) = run(&cli.command.into());
    print!("{report}");
    ExitCode::from(code as u8)
}
