fn main() {
    std::process::exit(fock_cli::run(std::env::args_os()));
}
