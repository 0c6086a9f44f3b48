use std::process::ExitCode;

use clap::Parser;

use schubert_cli::args::Cli;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match schubert_cli::run(&cli) {
        Ok(outcome) => ExitCode::from(outcome.exit_code()),
        Err(e) => {
            eprintln!("schubert: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
