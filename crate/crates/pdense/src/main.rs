fn main() {
    std::process::exit(pdense::cli::run());
}
