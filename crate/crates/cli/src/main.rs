mod args;
mod commands;
mod render;
mod selftest;

use std::fs;
use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use functorlab::{Error, ErrorClass};

use crate::args::Cli;
use crate::commands::Status;

const EXIT_NEGATIVE: u8 = 1;
const EXIT_MALFORMED: u8 = 2;
const EXIT_FAULT: u8 = 3;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(EXIT_MALFORMED) } else { ExitCode::SUCCESS };
        }
    };
    match execute(&cli) {
        Ok(status) => ExitCode::from(match status {
            Status::Affirmative => 0,
            Status::Negative => EXIT_NEGATIVE,
            Status::Fault => EXIT_FAULT,
        }),
        Err(e) => {
            eprintln!("error[{}]: {e}", e.code());
            ExitCode::from(match e.class() {
                ErrorClass::Negative => EXIT_NEGATIVE,
                ErrorClass::Malformed => EXIT_MALFORMED,
                ErrorClass::InternalFault => EXIT_FAULT,
            })
        }
    }
}

fn execute(cli: &Cli) -> functorlab::Result<Status> {
    let outcome = commands::run(&cli.command)?;
    let body = render::render(&outcome, cli.format)?;
    match &cli.out {
        Some(path) => fs::write(path, body)
            .map_err(|e| Error::InvalidArgument(format!("cannot write {}: {e}", path.display())))?,
        None => {
            let mut stdout = std::io::stdout().lock();
            // A closed pipe is not an error worth reporting.
            let _ = stdout.write_all(body.as_bytes()).and_then(|()| stdout.flush());
        }
    }
    if let Some(note) = &outcome.note {
        eprintln!("{note}");
    }
    Ok(outcome.status)
}
