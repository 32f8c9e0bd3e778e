fn main() {
    std::process::exit(skewcodes::cli::run());
}
