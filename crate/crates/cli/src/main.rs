use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use stillman_cli::{max_pairs_from_env, run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let max_pairs = match max_pairs_from_env() {
        Ok(m) => m,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let out = run(&cli, &mut std::io::stdin().lock(), max_pairs);
    let _ = std::io::stdout().write_all(out.stdout.as_bytes());
    let _ = std::io::stderr().write_all(out.stderr.as_bytes());
    ExitCode::from(out.code as u8)
}
