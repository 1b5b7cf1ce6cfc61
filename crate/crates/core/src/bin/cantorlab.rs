fn main() {
    std::process::exit(cantorlab::cli::main_entry(std::env::args()));
}
