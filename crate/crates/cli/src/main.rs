use std::io::Write;
use std::process::ExitCode;

use girthcut_cli::{run, THREADS_ENV};

fn main() -> ExitCode {
    let threads = std::env::var(THREADS_ENV).ok();
    let outcome = run(std::env::args_os(), threads.as_deref());
    let _ = std::io::stdout().write_all(outcome.stdout.as_bytes());
    let _ = std::io::stderr().write_all(outcome.stderr.as_bytes());
    ExitCode::from(outcome.code as u8)
}
