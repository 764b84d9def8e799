fn main() {
    std::process::exit(sl3c_geometry::cli::run(std::env::args_os()));
}
