use std::process::ExitCode;

fn main() -> ExitCode {
    supercong::cli::run(std::env::args_os())
}
