fn main() { std::process::exit(guts::cli::run()); }
