mod args;
mod cache;
mod commands;
mod config;
mod error;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use serde_json::json;

use args::{Cli, Format};
use config::RunConfig;
use error::CliError;

fn emit(cfg: &RunConfig, command: &str, outcome: &commands::Outcome) -> Result<(), CliError> {
    let body = match cfg.format {
        Format::Text => outcome.text.clone(),
        Format::Csv => outcome.csv.clone(),
        Format::Json => {
            let envelope = json!({
                "command": command,
                "params": outcome.params,
                "result": outcome.result,
                "tool_version": splitcheck::VERSION,
            });
            let mut s = serde_json::to_string_pretty(&envelope).expect("json value");
            s.push('\n');
            s
        }
    };
    match &cfg.out {
        Some(path) => std::fs::write(path, body)?,
        None => std::io::stdout().write_all(body.as_bytes())?,
    }
    Ok(())
}

fn configure_pool(jobs: Option<usize>) -> Result<(), CliError> {
    #[cfg(feature = "parallel")]
    if let Some(j) = jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build_global()
            .map_err(|e| CliError::Usage(format!("cannot start {j} workers: {e}")))?;
    }
    #[cfg(not(feature = "parallel"))]
    let _ = jobs;
    Ok(())
}

fn real_main(cli: Cli) -> Result<bool, CliError> {
    let name = cli.command.name();
    let cfg = RunConfig::resolve(&cli.global, name)?;
    configure_pool(cfg.jobs)?;
    let outcome = commands::run(&cli.command, &cfg)?;
    emit(&cfg, name, &outcome)?;
    Ok(outcome.pass)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match real_main(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("splitcheck: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
