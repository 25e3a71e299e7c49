fn main() {
    std::process::exit(socle_cli::app::run());
}
