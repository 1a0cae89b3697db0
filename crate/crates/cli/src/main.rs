fn main() {
    std::process::exit(randext_cli::run(std::env::args_os()));
}
