use std::process::ExitCode;

use clap::Parser;
use cvwl_cli::args::{threads_from_env, Cli};
use cvwl_cli::{run, CliError};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let result = threads_from_env().and_then(|t| cli.into_config(t)).and_then(|cfg| run(&cfg));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => report(e),
    }
}

fn report(e: CliError) -> ExitCode {
    eprintln!("cvwl: {e}");
    ExitCode::from(e.exit_code() as u8)
}
