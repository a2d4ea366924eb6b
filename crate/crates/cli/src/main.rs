//! `ptsusy` command-line front end.
//!
//! Exit codes: 0 on success, 2 on invalid input, 1 when a numerical stage fails.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

mod args;
mod output;
mod run;

use std::process::ExitCode;

use clap::Parser;

fn main() -> ExitCode {
    let cli = match args::Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) if !err.use_stderr() => err.exit(),
        Err(err) => {
            // Keep the diagnostic to one line; `--help` has the details.
            let text = err.render().to_string();
            let line = text.lines().next().unwrap_or("invalid arguments").trim_start_matches("error: ");
            eprintln!("ptsusy: {line}");
            return ExitCode::from(2);
        }
    };
    match run::run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            let code = run::exit_code(&err);
            eprintln!("ptsusy: {err:#}");
            ExitCode::from(code)
        }
    }
}
