fn main() {
    std::process::exit(angspec_cli::run(std::env::args_os()));
}
