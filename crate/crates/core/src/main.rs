use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let output = inverse_centrality::cli::run_from_args(std::env::args_os());
    print!("{}", output.stdout);
    eprint!("{}", output.stderr);
    let _ = std::io::stdout().flush();
    ExitCode::from(output.code as u8)
}
