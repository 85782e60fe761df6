use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let out = relfrac::run(std::env::args_os());
    let mut stdout = std::io::stdout().lock();
    let _ = stdout.write_all(out.stdout.as_bytes());
    let _ = stdout.flush();
    let mut stderr = std::io::stderr().lock();
    for line in &out.stderr {
        let _ = writeln!(stderr, "{line}");
    }
    ExitCode::from(out.code as u8)
}
