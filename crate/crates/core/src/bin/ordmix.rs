use std::io::Write;

fn main() {
    let (out, code) = ordmix::cli::run(std::env::args_os());
    if code == 0 {
        let mut stdout = std::io::stdout().lock();
        let _ = stdout.write_all(out.as_bytes());
        let _ = stdout.flush();
    } else {
        eprintln!("{out}");
    }
    std::process::exit(code);
}
