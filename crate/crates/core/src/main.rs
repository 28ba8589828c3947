use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    greenbox::exec::init_thread_pool();
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    let mut out = stdout.lock();
    let mut err = stderr.lock();
    let code = greenbox::cli::run(std::env::args_os(), &mut out, &mut err);
    let _ = out.flush();
    ExitCode::from(code as u8)
}
