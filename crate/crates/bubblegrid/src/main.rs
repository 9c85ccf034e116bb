use std::io::Write;

fn main() {
    let mut out = String::new();
    let code = bubblegrid::cli::run(std::env::args(), &mut out);
    print!("{out}");
    std::io::stdout().flush().ok();
    std::process::exit(code);
}
