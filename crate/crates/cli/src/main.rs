use std::io::{self, Write};
use std::process::ExitCode;

use clap::Parser;
use varwreath_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let report = run(&cli);
    let out = report.rendered(cli.json);
    // JSON always goes to stdout so that it can be piped
    if report.is_error && !cli.json {
        let _ = io::stderr().write_all(out.as_bytes());
    } else {
        let mut stdout = io::stdout().lock();
        let _ = stdout.write_all(out.as_bytes());
        let _ = stdout.flush();
    }
    ExitCode::from(report.code() as u8)
}
