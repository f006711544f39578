fn main() {
    std::process::exit(trackcert::cli::main());
}
