//! Command-line front end for the `s2rotator` library.
//!
//! Exit codes: 0 means success (for `check`, a rigid rotator was found),
//! 1 means the input was valid but no rotator exists, 2 means a usage or
//! input error, 3 means a numerical failure.

mod commands;
mod format;

use std::process::ExitCode;

use clap::{Parser, Subcommand};

use commands::{
    CheckArgs, CliError, IsoscelesCurveArgs, SpecialPointsArgs, TwoEqualMassArgs, VerifyArgs,
};

/// Rigid rotators of three point masses on the sphere.
#[derive(Parser)]
#[command(name = "s2rotator", version, about, max_term_width = 100)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a mass triple in a given triangle spins rigidly.
    Check(CheckArgs),
    /// Trace the equal-mass isosceles solution family.
    IsoscelesCurve(IsoscelesCurveArgs),
    /// Trace the two-equal-mass right-angle solution family.
    TwoEqualMass(TwoEqualMassArgs),
    /// Integrate a checked configuration and measure shape drift.
    Verify(VerifyArgs),
    /// Print the landmark arcs and mass-ratio bounds of the families.
    SpecialPoints(SpecialPointsArgs),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Check(args) => args.run(),
        Command::IsoscelesCurve(args) => args.run(),
        Command::TwoEqualMass(args) => args.run(),
        Command::Verify(args) => args.run(),
        Command::SpecialPoints(args) => args.run(),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(CliError::Usage(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
        Err(CliError::Numerical(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(3)
        }
    }
}
