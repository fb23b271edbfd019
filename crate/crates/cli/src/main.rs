mod cli;
mod commands;
mod error;
mod load;

use std::fs;
use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use cli::{Cli, Format};
use error::{CliError, CliResult};

fn emit(cli: &Cli, text: &str) -> CliResult<()> {
    match &cli.out {
        Some(path) => fs::write(path, text).map_err(|source| CliError::Write { path: path.clone(), source }),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())
                .and_then(|_| out.flush())
                .map_err(|source| CliError::Write { path: "<stdout>".into(), source })
        }
    }
}

fn run(cli: &Cli) -> CliResult<i32> {
    ramsey_forge::caps::set_cap_override(cli.cap);
    let command = commands::name(&cli.command);
    let outcome = commands::run(&cli.command)?;
    let text = match cli.format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&commands::header(command, &outcome))
                .map_err(|e| CliError::Core(e.into()))?;
            s.push('\n');
            s
        }
        Format::Dot => outcome
            .dot
            .clone()
            .ok_or_else(|| CliError::Usage(format!("`{command}` has no DOT output")))?,
    };
    emit(cli, &text)?;
    Ok(outcome.status)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(status) => ExitCode::from(status as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
