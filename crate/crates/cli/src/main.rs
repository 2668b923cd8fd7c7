//! `boolfourier`: command-line front end.
//!
//! Every invocation writes one JSON document to stdout:
//! `{"schema_version": "1", "command": ..., "payload": ...}`.
//!
//! Exit status: 0 on success (including conjecture-violation witnesses),
//! 1 on usage or input errors, 2 on equivalence or internal invariant failures.

use std::process::ExitCode;

use boolfourier::Error;
use clap::error::ErrorKind;
use clap::Parser;

mod commands;
mod output;

use commands::{Cli, Outcome};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };
    match commands::run(&cli) {
        Ok(Outcome { document, failed }) => {
            let text = if cli.json {
                serde_json::to_string(&document)
            } else {
                serde_json::to_string_pretty(&document)
            };
            println!("{}", text.expect("output document serializes"));
            if failed {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Invariant(_) => ExitCode::from(2),
                _ => ExitCode::from(1),
            }
        }
    }
}
