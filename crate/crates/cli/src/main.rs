use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::Parser;

use lexext::cli::Cli;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = lexext::run(&cli.command, &mut io::stdin().lock(), &mut out);
    let flushed = out.flush();
    match (result, flushed) {
        (Ok(code), Ok(())) => ExitCode::from(code as u8),
        (Ok(_), Err(e)) => {
            eprintln!("lexext: i/o error: {e}");
            ExitCode::from(lexext::EXIT_DOMAIN as u8)
        }
        (Err(e), _) => {
            eprintln!("lexext: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
