use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let result = puiseux::cli::run_command(std::env::args_os());
    print!("{}", result.payload);
    eprint!("{}", result.message);
    let _ = std::io::stdout().flush();
    ExitCode::from(result.exit_code() as u8)
}
