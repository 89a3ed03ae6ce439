use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let outcome = gsft_cli::run(std::env::args_os(), &mut gsft_cli::FileInputs);
    let mut out = std::io::stdout().lock();
    // A closed pipe is not worth a panic.
    let _ = out.write_all(outcome.stdout.as_bytes());
    let _ = out.flush();
    ExitCode::from(u8::try_from(outcome.code).unwrap_or(3))
}
