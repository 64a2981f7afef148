//! `scrollsec`: run verification reports from the command line.
//!
//! Exit codes: 0 when every report matches, 2 on a mismatch or a failed
//! verification, 3 when the Gröbner budget runs out, 1 on usage errors.

mod args;
mod run;
mod suite;

use std::process::ExitCode;

use clap::Parser;

use args::Cli;
use run::{CliError, Output};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run::run(&cli) {
        Ok(out) => finish(&cli, out),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn finish(cli: &Cli, out: Output) -> ExitCode {
    print!("{}", out.render(cli.output, cli.deterministic));
    let mut code = 0;
    for reason in &out.failures {
        eprintln!("failed: {reason}");
        code = code.max(reason.exit_code());
    }
    if !out.reports.is_empty() {
        let ok = out.reports.iter().filter(|r| r.matches).count();
        let mismatched: Vec<String> = out.reports.iter().filter(|r| !r.matches).map(run::describe).collect();
        for m in &mismatched {
            eprintln!("mismatch: {m}");
        }
        if !mismatched.is_empty() {
            code = code.max(2);
        }
        eprintln!("{}: {ok}/{} reports match", if code == 0 { "PASS" } else { "FAIL" }, out.reports.len());
    }
    ExitCode::from(code)
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Failed(_) => 2,
            CliError::Budget(_) => 3,
        }
    }
}
