//! Command-line harness for `mexpart-core`: argument parsing, CSV and JSON
//! output, and the exit-code convention
//! (0 ok, 1 usage, 2 hypothesis violated, 3 verification failure, 4 I/O).

pub mod commands;
pub mod config;
pub mod error;
pub mod output;

pub use commands::{run, Outcome};
pub use config::{Command, Format, RunConfig};
pub use error::{exit, CliError};
pub use output::Document;

/// Runs a parsed configuration end to end, writing its output, and
/// returns the process exit code.
pub fn execute(config: &RunConfig) -> i32 {
    let result = run(&config.command).and_then(|outcome| {
        let text = outcome.document.render(config.output.format)?;
        output::emit(&text, config.output.output.as_deref())?;
        Ok(outcome.exit_code)
    });
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
