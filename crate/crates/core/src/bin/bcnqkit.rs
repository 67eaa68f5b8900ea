use std::process::ExitCode;

use bcnqkit::cli::{error_object, run, Cli, Subcommand};
use clap::Parser;

fn fail(e: &bcnqkit::Error) -> ExitCode {
    println!("{}", error_object(e));
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let explain = matches!(cli.command, Subcommand::Explain { .. });
    let spec = match cli.command.into_spec() {
        Ok(s) => s,
        Err(e) => return fail(&e),
    };
    if explain {
        println!("{}", serde_json::to_string_pretty(&spec).expect("job specs serialize"));
        return ExitCode::SUCCESS;
    }
    let outcome = match run(&spec) {
        Ok(o) => o,
        Err(e) => return fail(&e),
    };
    match &spec.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &outcome.output) {
                let e = bcnqkit::Error::InvalidInput(format!("cannot write {}: {e}", path.display()));
                return fail(&e);
            }
        }
        None => print!("{}", outcome.output),
    }
    ExitCode::from(outcome.exit_code() as u8)
}
