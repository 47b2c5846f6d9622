use clap::Parser;

use outerlink_cli::{args::Cli, commands, report};

fn main() {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(outcome) => {
            print!("{}", report::render(&outcome.report, cli.format));
            std::process::exit(i32::from(!outcome.ok));
        }
        Err(err) => {
            eprintln!("error: {err}");
            std::process::exit(commands::exit_code(&err));
        }
    }
}
