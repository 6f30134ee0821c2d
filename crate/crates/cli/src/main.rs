fn main() {
    std::process::exit(zgasket_cli::run(std::env::args_os()));
}
