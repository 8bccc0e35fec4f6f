fn main() {
    std::process::exit(orbit_concavity::cli::run());
}
