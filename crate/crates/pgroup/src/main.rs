use std::io::{self, Write};
use std::process::ExitCode;

use clap::Parser;
use pgroup::cli::Cli;
use pgroup::{error_code, run};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let result = run(cli, &mut out);
    let _ = out.flush();
    match result {
        Ok(outcome) => ExitCode::from(outcome.code()),
        Err(err) => {
            eprintln!("pgroup: {err:#}");
            ExitCode::from(error_code(&err))
        }
    }
}
