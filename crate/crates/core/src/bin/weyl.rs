use std::process::ExitCode;

fn main() -> ExitCode {
    let (code, out) = weyl::cli::dispatch(std::env::args_os());
    if code == 0 || code == 1 {
        println!("{out}");
    } else {
        eprintln!("{out}");
    }
    ExitCode::from(code as u8)
}
