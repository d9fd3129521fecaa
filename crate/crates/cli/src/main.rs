use std::io::{self, Write};
use std::process::ExitCode;

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().collect();
    let mut out = io::stdout().lock();
    let mut err = io::stderr().lock();
    let code = chabauty_cli::run_cli(&args, &mut out, &mut err);
    let _ = out.flush();
    ExitCode::from(code)
}
