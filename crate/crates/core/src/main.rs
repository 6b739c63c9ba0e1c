use clap::Parser;

use hwface::cli::{run, Cli};

fn main() {
    let out = run(&Cli::parse());
    if out.is_error {
        eprintln!("{}", out.text);
    } else {
        println!("{}", out.text);
    }
    std::process::exit(out.exit_code);
}
