use std::process::ExitCode;

use clap::Parser;
use lrc_cli::{run, Cli};

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().collect();
    // clap exits with status 2 on usage errors
    let cli = Cli::parse_from(&argv);
    match run(&cli, &argv) {
        Ok(out) => {
            print!("{}", out.stdout);
            ExitCode::from(out.exit as u8)
        }
        Err(e) => {
            let body = serde_json::json!({ "error": e.kind(), "message": e.to_string() });
            eprintln!("{body}");
            ExitCode::from(2)
        }
    }
}
