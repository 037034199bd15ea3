fn main() {
    std::process::exit(episos::cli::run());
}
