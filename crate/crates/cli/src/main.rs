mod args;
mod commands;
mod selftest;

use std::fs;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;

use args::{Cli, Verb};
use commands::Failure;

fn dispatch(cli: &Cli) -> Result<String, Failure> {
    let json = cli.json;
    let mut out = match &cli.verb {
        Verb::Validate { p, q } => commands::validate(p, q.as_deref(), json),
        Verb::Enumerate { p, count_only } => commands::enumerate(p, *count_only, json),
        Verb::Volume { pair, kind, method } => commands::volume(pair, *kind, *method, json),
        Verb::Facets {
            pair,
            kind,
            method,
            count_only,
        } => commands::facets(pair, *kind, *method, *count_only, json),
        Verb::Dual {
            pair,
            kind,
            method,
            count_only,
        } => commands::dual(pair, *kind, *method, *count_only, json),
        Verb::Reflexive { pair, kind } => commands::reflexive(pair, *kind, json),
        Verb::RegionCheck { pair, kind, w } => {
            commands::region_check_cmd(pair, *kind, w.as_deref(), json)
        }
        Verb::Selftest => selftest::selftest(json),
    }?;
    if !out.ends_with('\n') {
        out.push('\n');
    }
    Ok(out)
}

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
    let result = dispatch(&cli).and_then(|out| match &cli.out {
        Some(path) => {
            fs::write(path, out).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
        }
        None => {
            print!("{out}");
            Ok(())
        }
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error: {failure}");
            ExitCode::from(failure.exit_code() as u8)
        }
    }
}
