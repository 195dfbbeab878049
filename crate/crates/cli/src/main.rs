use std::process;

fn main() {
    process::exit(gainact_cli::run(std::env::args_os()));
}
