//! `toda`: affine Toda mass spectra, root data and the E8 verification suite.

mod dynkin;
mod format;
mod inspect;
mod spectrum;
mod verify;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use toda_core::root_systems::AlgebraId;

use crate::format::OutputFormat;

/// Exit status for usage errors and unknown algebras.
const USAGE: u8 = 2;

const VALID_ALGEBRAS: &str =
    "valid algebras: A1, A2, ...; B2, B3, ...; C2, C3, ...; D3, D4, ...; E6, E7, E8; F4; G2";

fn parse_algebra(s: &str) -> Result<AlgebraId, String> {
    s.parse::<AlgebraId>()
        .map_err(|e| format!("{e}; {VALID_ALGEBRAS}"))
}

#[derive(Debug, Parser)]
#[command(
    name = "toda",
    version,
    about = "Classical affine Toda mass spectra for simple Lie algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    /// Perron-Frobenius vector of 2I - C
    Pf,
    /// Eigenvalues of the mass matrix
    Massmatrix,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum NormalizeArg {
    /// Heaviest mass 1
    Max,
    /// Long roots of length^2 2
    Absolute,
    /// First listed particle of mass 1
    First,
    /// Unit Euclidean norm
    Unit,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Scope {
    E8Paper,
    AllAde,
    Exponents,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum What {
    Cartan,
    Roots,
    CharpolyA,
    CharpolyB,
    Dynkin,
    Exponents,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Particle masses, squared masses and mass ratios
    Spectrum {
        #[arg(value_parser = parse_algebra)]
        algebra: AlgebraId,
        #[arg(long, value_enum, default_value = "pf")]
        method: MethodArg,
        #[arg(long, value_enum, default_value = "max")]
        normalize: NormalizeArg,
        #[arg(long, value_enum, default_value = "table")]
        format: OutputFormat,
        /// Relative distance from the golden ratio at which a ratio is flagged
        #[arg(long, default_value_t = 1e-9)]
        tolerance: f64,
    },
    /// Run a verification suite; exit status 1 if any check fails
    Verify {
        #[arg(value_enum)]
        scope: Scope,
        #[arg(long, value_enum, default_value = "table")]
        format: OutputFormat,
        /// Replace the tolerance of every numeric check
        #[arg(long)]
        tolerance: Option<f64>,
    },
    /// Print root data or a characteristic polynomial
    Inspect {
        #[arg(value_parser = parse_algebra)]
        algebra: AlgebraId,
        #[arg(value_enum)]
        what: What,
        #[arg(long, value_enum, default_value = "table")]
        format: OutputFormat,
    },
}

fn is_broken_pipe(e: &(dyn std::error::Error + 'static)) -> bool {
    e.downcast_ref::<std::io::Error>()
        .is_some_and(|io| io.kind() == std::io::ErrorKind::BrokenPipe)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match cli.command {
        Command::Spectrum {
            algebra,
            method,
            normalize,
            format,
            tolerance,
        } => spectrum::run(algebra, method, normalize, format, tolerance),
        Command::Verify {
            scope,
            format,
            tolerance,
        } => verify::run(scope, format, tolerance),
        Command::Inspect {
            algebra,
            what,
            format,
        } => inspect::run(algebra, what, format),
    };
    match result {
        Ok(code) => code,
        Err(e) if is_broken_pipe(e.as_ref()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("toda: {e}");
            ExitCode::FAILURE
        }
    }
}
