use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use pmcorr::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    let mut out = std::io::BufWriter::new(stdout.lock());
    let result = run(&cli, &mut out);
    let flushed = out.flush();
    match (result, flushed) {
        (Ok(outcome), Ok(())) => ExitCode::from(outcome.exit_code()),
        (Err(e), _) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
        (Ok(_), Err(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
