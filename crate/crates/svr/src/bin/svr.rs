use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(svr::cli::run() as u8)
}
