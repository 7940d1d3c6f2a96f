use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use cosmo_cli::{run, Cli, CliError};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(outcome) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(outcome.stdout.as_bytes()).and_then(|()| stdout.flush()).is_err() {
                return ExitCode::from(1);
            }
            if outcome.success {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            let kind = if matches!(e, CliError::Usage(_)) { "usage error" } else { "error" };
            eprintln!("{kind}: {}", e.to_string().replace('\n', " "));
            ExitCode::from(2)
        }
    }
}
