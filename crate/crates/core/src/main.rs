use clap::Parser;

fn main() {
    std::process::exit(isocx::cli::main_with(isocx::cli::Cli::parse()));
}
