use std::process::ExitCode;

fn main() -> ExitCode {
    starpres::cli::main_with(std::env::args_os())
}
