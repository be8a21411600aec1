use std::process::ExitCode;

fn main() -> ExitCode {
    let args: Vec<_> = std::env::args_os().collect();
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    let code = girthram::run(&args, &mut stdout.lock(), &mut stderr.lock());
    ExitCode::from(code as u8)
}
