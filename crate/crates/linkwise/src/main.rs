fn main() {
    std::process::exit(linkwise::cli::run());
}
