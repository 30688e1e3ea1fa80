mod args;
mod commands;
mod error;
mod input;
mod output;

use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};
use error::{CliError, CliResult};

fn thread_count(flag: Option<usize>) -> CliResult<Option<usize>> {
    let n = match std::env::var("DIVLAT_THREADS") {
        Ok(v) => Some(
            v.trim()
                .parse::<usize>()
                .map_err(|_| CliError::Usage(format!("DIVLAT_THREADS must be a positive integer, got `{v}`")))?,
        ),
        Err(_) => flag,
    };
    match n {
        Some(0) => Err(CliError::Usage("thread count must be at least 1".into())),
        n => Ok(n),
    }
}

fn run(cli: &Cli) -> CliResult<bool> {
    if let Some(n) = thread_count(cli.threads)? {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| CliError::Usage(e.to_string()))?;
    }
    match &cli.command {
        Command::Compute(a) => commands::compute(a),
        Command::Verify(a) => commands::verify(a),
        Command::Constants(a) => commands::constants(a),
        Command::Pyramid(a) => commands::pyramid(a),
        Command::Catalog(a) => commands::catalog(a),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("divlat: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
