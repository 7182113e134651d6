fn main() {
    std::process::exit(evenspec::classify::cli::run());
}
