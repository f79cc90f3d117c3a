fn main() {
    multlab::configure_threads();
    std::process::exit(multlab::cli::run());
}
