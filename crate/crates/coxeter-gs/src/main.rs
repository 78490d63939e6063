use std::io;
use std::process;

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let stdout = io::stdout();
    let stderr = io::stderr();
    let code = coxeter_gs::cli::run(&args, &mut stdout.lock(), &mut stderr.lock());
    process::exit(code);
}
