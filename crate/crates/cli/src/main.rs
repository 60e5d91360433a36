use std::io::Write;

fn main() {
    let (out, err, code) = hopfwreath_cli::main_with_args(std::env::args_os());
    std::io::stdout().write_all(&out).ok();
    std::io::stderr().write_all(&err).ok();
    std::process::exit(code);
}
