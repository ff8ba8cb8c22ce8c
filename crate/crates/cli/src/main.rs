fn main() {
    std::process::exit(mlpath_cli::run());
}
