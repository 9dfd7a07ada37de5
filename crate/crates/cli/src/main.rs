mod args;
mod commands;

use args::{Cli, Command};
use clap::error::ErrorKind;
use clap::Parser;
use std::process::ExitCode;

const USAGE_ERROR: u8 = 1;
const DATA_ERROR: u8 = 2;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(USAGE_ERROR),
            };
        }
    };

    if let Some(threads) = cli.threads {
        if threads == 0 {
            eprintln!("error: --threads must be at least 1");
            return ExitCode::from(USAGE_ERROR);
        }
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
        {
            eprintln!("warning: could not size the thread pool: {e}");
        }
    }

    let outcome = match cli.command {
        Command::Test(args) => commands::test(args),
        Command::Gen(args) => commands::gen(args),
        Command::ExactDist(args) => commands::exact_dist(args),
        Command::Experiment(args) => commands::experiment(args),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_data_error() {
                DATA_ERROR
            } else {
                USAGE_ERROR
            })
        }
    }
}
