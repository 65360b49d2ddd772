use clap::Parser;

fn main() {
    let cli = josushi::cli::Cli::parse();
    std::process::exit(josushi::cli::run(&cli));
}
