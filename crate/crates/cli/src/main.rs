use std::io::Write;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;
use tritab_cli::args::Cli;
use tritab_cli::error::{exit, CliError};

fn emit_error(err: &CliError) -> ExitCode {
    println!("{}", err.to_json());
    ExitCode::from(err.code())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = e.print();
            return ExitCode::from(exit::SUCCESS);
        }
        Err(e) => {
            let message = e.render().to_string();
            let first = message.lines().next().unwrap_or("invalid arguments");
            let first = first.trim_start_matches("error: ").to_string();
            return emit_error(&CliError::invalid(first));
        }
    };
    let outcome = match tritab_cli::run(&cli) {
        Ok(outcome) => outcome,
        Err(err) => return emit_error(&err),
    };
    let written = match &cli.out {
        Some(path) => std::fs::write(path, &outcome.text)
            .map_err(|e| CliError::io(format!("cannot write {}: {e}", path.display()))),
        None => std::io::stdout()
            .write_all(outcome.text.as_bytes())
            .map_err(|e| CliError::io(format!("cannot write output: {e}"))),
    };
    match written {
        Ok(()) => ExitCode::from(outcome.code),
        Err(err) => emit_error(&err),
    }
}
