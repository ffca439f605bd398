use std::process::ExitCode;

use clap::Parser;

use hopfdual_cli::{exit_code, render, run_with_threads, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run_with_threads(&cli) {
        Ok(report) => {
            print!("{}", render(&report, cli.format));
            ExitCode::from(exit_code(&report) as u8)
        }
        Err(e) => {
            eprintln!("hopfdual: {e}");
            ExitCode::from(2)
        }
    }
}
