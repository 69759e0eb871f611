use std::process::ExitCode;

use clap::Parser;
use ite_cli::{run, Cli, Output};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            match &out {
                Output::Report(r) => print!("{r}"),
                Output::Text(t) => print!("{t}"),
            }
            ExitCode::from(out.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
