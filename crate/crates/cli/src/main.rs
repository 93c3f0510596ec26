use std::io::Write;
use std::process::ExitCode;

use cgt_diamond::commands::{error_json, run, Cli, EXIT_USAGE};
use cgt_diamond_core::GameStore;
use clap::Parser;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut store = GameStore::new();
    let code = match run(&cli.command, &mut store) {
        Ok(out) => {
            let _ = std::io::stdout().write_all(out.render(cli.json).as_bytes());
            out.exit
        }
        Err(err) => {
            if cli.json {
                println!("{}", error_json(cli.command.name(), &cli.command.input(), &err));
            }
            eprintln!("error: {err}");
            EXIT_USAGE
        }
    };
    ExitCode::from(code as u8)
}
