//! Command-line front end: `zeta`, `diagram`, `check` and `oracle-compare`.
//!
//! Exit codes: 0 success, 1 input error, 2 non-degeneracy counterexample,
//! 3 internal invariant violation.

mod commands;
pub mod input;
mod oracle;

use std::io::Read;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_COUNTEREXAMPLE: i32 = 2;
pub const EXIT_INVARIANT: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "newton-zeta", version, about = "Monodromy zeta-functions of deformations from Newton diagrams")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Zeta-functions on the torus and on the whole space.
    Zeta(GermArgs),
    /// Restricted supports, facets and factors for every index set.
    Diagram(GermArgs),
    /// Per-face non-degeneracy verdicts.
    Check(GermArgs),
    /// Recompute facet volumes through the cone and mixed-volume identities.
    OracleCompare(OracleArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Pretty,
    Json,
}

#[derive(Debug, Clone, Args)]
pub struct GermArgs {
    /// Germ as an expression, e.g. "z1^2 + z2^3 - s".
    #[arg(long, conflicts_with = "germ_file")]
    pub germ: Option<String>,
    /// File holding an expression or a JSON germ.
    #[arg(long)]
    pub germ_file: Option<PathBuf>,
    /// Variable names, deformation parameter first.
    #[arg(long, value_delimiter = ',')]
    pub vars: Option<Vec<String>>,
    #[arg(long, value_enum, default_value_t = Format::Pretty)]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Example1,
    Example2,
    Both,
}

#[derive(Debug, Clone, Args)]
pub struct OracleArgs {
    #[arg(long, value_enum, default_value_t = Mode::Both)]
    pub mode: Mode,
    /// Germ `f` in the z-variables for the cone identity.
    #[arg(long, conflicts_with = "germ_file")]
    pub germ: Option<String>,
    #[arg(long)]
    pub germ_file: Option<PathBuf>,
    /// `f₀` of the deformation `f₀ − σ f₁`.
    #[arg(long)]
    pub f0: Option<String>,
    /// `f₁` of the deformation `f₀ − σ f₁`; may have a constant term.
    #[arg(long)]
    pub f1: Option<String>,
    /// Check this many random inputs instead of a given germ.
    #[arg(long)]
    pub random: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_delimiter = ',')]
    pub vars: Option<Vec<String>>,
    #[arg(long, value_enum, default_value_t = Format::Pretty)]
    pub format: Format,
}

#[derive(Debug)]
pub enum CliError {
    Input(String),
    Internal(String),
}

impl From<newton_zeta::Error> for CliError {
    fn from(e: newton_zeta::Error) -> Self {
        use newton_zeta::Error as E;
        match e {
            E::Overflow(_) | E::DimensionMismatch(_) | E::ZeroVector => CliError::Internal(e.to_string()),
            other => CliError::Input(other.to_string()),
        }
    }
}

/// What a command printed and how it ended.
#[derive(Debug, Default)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn warn(&mut self, line: impl AsRef<str>) {
        self.stderr.push_str("warning: ");
        self.stderr.push_str(line.as_ref());
        self.stderr.push('\n');
    }
}

pub fn run(cli: &Cli, stdin: &mut dyn Read) -> Outcome {
    let result = match &cli.command {
        Command::Zeta(a) => commands::zeta(a, stdin),
        Command::Diagram(a) => commands::diagram(a, stdin),
        Command::Check(a) => commands::check(a, stdin),
        Command::OracleCompare(a) => oracle::compare(a, stdin),
    };
    result.unwrap_or_else(|e| {
        let (code, msg) = match e {
            CliError::Input(m) => (EXIT_INPUT, m),
            CliError::Internal(m) => (EXIT_INVARIANT, format!("internal error: {m}")),
        };
        Outcome {
            code,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        }
    })
}
