//! Command-line front end for the `specpoly` library.

mod commands;
mod error;
mod output;

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use commands::{eigenfunction, moments, poly, spectrum, verify};
use error::CliResult;

#[derive(Debug, Parser)]
#[command(name = "specpoly", version, about = "Exact polynomial families and spectra of -y'' + x^(2N+2) y = E x^N y")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the polynomials f_0 .. f_n of a family.
    Poly(poly::Args),
    /// Closed-form eigenvalues for a range of indices, optionally checked by shooting.
    Spectrum(spectrum::Args),
    /// Sample an eigenfunction on a grid.
    Eigenfunction(eigenfunction::Args),
    /// Moments, S-fraction coefficients or symmetry numbers.
    Moments(moments::Args),
    /// Run verification suites and emit a report.
    Verify(verify::Args),
}

/// Exit status of a command that ran to completion.
pub enum Status {
    Ok,
    Failed,
}

fn run(cli: Cli, out: &mut dyn Write) -> CliResult<Status> {
    match cli.command {
        Command::Poly(a) => poly::run(a, out),
        Command::Spectrum(a) => spectrum::run(a, out),
        Command::Eigenfunction(a) => eigenfunction::run(a, out),
        Command::Moments(a) => moments::run(a, out),
        Command::Verify(a) => verify::run(a, out),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match run(cli, &mut out) {
        Ok(Status::Ok) => ExitCode::SUCCESS,
        Ok(Status::Failed) => ExitCode::from(1),
        Err(e) => {
            let _ = out.flush();
            eprintln!("specpoly: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
