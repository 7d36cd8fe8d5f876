use std::io::Write;
use std::process::ExitCode;

use bck_cli::{run, Cli};
use clap::Parser;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli.command) {
        Ok(report) => {
            if !cli.quiet {
                let mut stdout = std::io::stdout().lock();
                // A closed pipe is not worth a panic.
                let _ = stdout.write_all(report.render(cli.json).as_bytes());
            }
            ExitCode::from(report.status.code() as u8)
        }
        Err(e) => {
            eprintln!("bck: {e}");
            ExitCode::from(2)
        }
    }
}
