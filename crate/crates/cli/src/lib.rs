//! Command-line front end for `tritab`: spectra, characteristic polynomials,
//! character tables and PLU factors as JSON or CSV reports.

pub mod args;
pub mod commands;
pub mod error;
pub mod family;
pub mod report;
pub mod table_csv;

use std::time::Instant;

use args::{Cli, Command, Format};
use error::{exit, CliError};
use report::{render_csv, render_json, RunReport, Tabular};

/// Rendered output and the exit status it should end with.
#[derive(Debug)]
pub struct Outcome {
    pub text: String,
    pub code: u8,
}

fn dispatch(cli: &Cli) -> Result<(RunReport, Tabular, bool), CliError> {
    let tol = cli.tolerance;
    Ok(match &cli.command {
        Command::Spectrum { family, verify } => {
            let (r, t) = commands::spectrum(family, *verify, tol)?;
            (r, t, *verify)
        }
        Command::Charpoly {
            family,
            matrix,
            x,
            coeffs,
            verify,
        } => {
            let (r, t) = commands::charpoly(family, matrix.as_deref(), x, *coeffs, *verify, tol)?;
            (r, t, *verify)
        }
        Command::Characters {
            class,
            d,
            alpha,
            gamma,
            method,
        } => {
            let (r, t) = commands::characters(*class, *d, *alpha, *gamma, *method, tol)?;
            (r, t, true)
        }
        Command::Plu {
            family,
            matrix,
            random,
            verify,
        } => {
            let (r, t) = commands::plu(family, matrix.as_deref(), *random, cli.seed)?;
            (r, t, *verify)
        }
        Command::Verify {
            suite,
            max_d,
            max_n,
        } => {
            let (r, t) = commands::verify(*suite, *max_d, *max_n, cli.seed, tol)?;
            (r, t, true)
        }
    })
}

/// Runs one parsed invocation. Checks only affect the exit status when the
/// command verifies by default or `--verify` was given.
pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    if !(cli.tolerance.is_finite() && cli.tolerance > 0.0) {
        return Err(CliError::invalid(format!(
            "--tolerance must be positive and finite, got {}",
            cli.tolerance
        )));
    }
    let start = Instant::now();
    let (mut report, tabular, gate) = dispatch(cli)?;
    if cli.timing {
        report.elapsed_ms = Some(start.elapsed().as_secs_f64() * 1e3);
    }
    let text = match cli.format {
        Format::Json => render_json(&report),
        Format::Csv => render_csv(&report, &tabular)?,
    };
    let code = if gate && !report.all_passed() {
        exit::CHECK_FAILED
    } else {
        exit::SUCCESS
    };
    Ok(Outcome { text, code })
}
