fn main() {
    std::process::exit(barker::cli::run());
}
