use std::io::{self, Write};
use std::process::ExitCode;

use clap::Parser;
use xorclique_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let code = match run(cli, &mut out) {
        Ok(code) => code,
        Err(f) => {
            let _ = out.flush();
            eprintln!("error: {}", f.message);
            f.code
        }
    };
    let _ = out.flush();
    ExitCode::from(code as u8)
}
