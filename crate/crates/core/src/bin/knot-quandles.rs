use clap::Parser;
use knot_quandles::cli::{run, Cli};

fn main() {
    match run(&Cli::parse()) {
        Ok(out) => println!("{out}"),
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(1);
        }
    }
}
