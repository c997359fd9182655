fn main() {
    std::process::exit(unexpected_curves::cli::run(std::env::args_os()));
}
