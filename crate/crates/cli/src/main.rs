use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let cap = std::env::var(weyl_cli::BOX_CAP_VAR).ok();
    let out = weyl_cli::run(std::env::args_os(), cap.as_deref());
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    let _ = std::io::stdout().flush();
    ExitCode::from(out.code as u8)
}
